#pragma once

// The concrete isometries and named cells of the verification: the matrices
// f, k, s with k = s f s^-1, the four frame-change matrices b and their
// apartment frames, the base vertex v, the tip chambers G_g, the shifted
// chambers C_g = g.G_g, and the sectors S_g (tip v) and T_g = g.S_g.
//
// All constants are kept as source text and parsed at construction time; the
// constructor re-verifies every defining identity, so a transcription error
// cannot survive into a run.

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sl3pong/building.hpp"
#include "sl3pong/dvr.hpp"
#include "sl3pong/mat.hpp"
#include "sl3pong/parse.hpp"

namespace sl3pong {

enum class Gen : int { F = 0, K = 1, Finv = 2, Kinv = 3 };

inline constexpr std::array<Gen, 4> all_gens{Gen::F, Gen::K, Gen::Finv, Gen::Kinv};

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::F: return "f";
    case Gen::K: return "k";
    case Gen::Finv: return "f^-1";
    default: return "k^-1";
  }
}

inline Gen gen_inverse(Gen g) {
  switch (g) {
    case Gen::F: return Gen::Finv;
    case Gen::K: return Gen::Kinv;
    case Gen::Finv: return Gen::F;
    default: return Gen::K;
  }
}

inline bool gen_is_f_side(Gen g) { return g == Gen::F || g == Gen::Finv; }

// Default constants. The b matrices carry the frames of the four apartments
// shared by an f-direction and a k-direction; the `lines_*` rows restate the
// defining lines of those frames and are cross-checked against the b columns.
inline const char* builtin_constants_text() {
  return R"(
f = [t, 0, 0; 0, 1, 0; 0, 0, t^-1]
k = [0, -1-t, -t^-1-1-t; 0, t^-1+1+t, t^-2+t^-1+1+t; 1, 0, 0]
s = [1, 1, t^-1; -(t^-2+1), -(t^-1+1), -(t^-2+1); t^-1, 1, 1]
b_fk = [1, t^-1-1, t; 0, 1-t^-1, -(t^-1+t); 0, 0, 1]
b_fK = [1, 1-t, t^-1; 0, 1-t^-1, -(t^-2+1); 0, 0, 1]
b_Fk = [1, 0, 0; -(t^-2+1), 1-t^-1, 0; t^-1, 1-t, 1]
b_FK = [1, 0, 0; -(t^-1+t), 1-t^-1, 0; t, t^-1-1, 1]
lines_fk = [1, 0, 0; t^-1-1, 1-t^-1, 0; t, -(t^-1+t), 1]
lines_fK = [1, 0, 0; 1-t, 1-t^-1, 0; t^-1, -(t^-2+1), 1]
lines_Fk = [0, 0, 1; 0, 1-t^-1, 1-t; 1, -(t^-2+1), t^-1]
lines_FK = [0, 0, 1; 0, 1-t^-1, t^-1-1; 1, -(t^-1+t), t]
)";
}

// "name = [matrix]" per line; '#' starts a comment.
template <class K>
std::map<std::string, Mat3<K>> parse_constants(const std::string& text,
                                               const FieldCtx<K>& ctx) {
  std::map<std::string, Mat3<K>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string name = line.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) continue;
    out[name] = Mat3<K>::parse(line.substr(eq + 1), ctx);
  }
  return out;
}

namespace detail {

template <class K>
bool proportional(const std::array<RatFunc<K>, 3>& u, const std::array<RatFunc<K>, 3>& w) {
  bool u_zero = true, w_zero = true;
  for (int i = 0; i < 3; ++i) {
    if (!u[static_cast<std::size_t>(i)].is_zero()) u_zero = false;
    if (!w[static_cast<std::size_t>(i)].is_zero()) w_zero = false;
  }
  if (u_zero || w_zero) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto a = u[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
      auto b = u[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(i)];
      if (a != b) return false;
    }
  return true;
}

template <class K>
std::array<RatFunc<K>, 3> mat_col(const Mat3<K>& m, int j) {
  return {m.at(0, j), m.at(1, j), m.at(2, j)};
}
template <class K>
std::array<RatFunc<K>, 3> mat_row(const Mat3<K>& m, int i) {
  return {m.at(i, 0), m.at(i, 1), m.at(i, 2)};
}

}  // namespace detail

template <class K>
struct NamedData {
  FieldCtx<K> ctx;

  Mat3<K> f, k, s, f_inv, k_inv, s_inv;
  std::map<std::pair<Gen, Gen>, Mat3<K>> b;        // keyed by (f-side gen, k-side gen)
  std::map<std::pair<Gen, Gen>, Frame<K>> frames;  // the apartments of the b's
  Frame<K> frame_f, frame_k;

  Vertex<K> v;
  std::array<Vertex<K>, 4> v_plus;   // g.v per generator symbol
  std::array<Chamber<K>, 4> G, C;    // tip chambers and their g-shifts
  std::array<SectorSpec<K>, 4> S, T;
  std::array<ChamberAtInfinity<K>, 4> xi;  // attracting flags per symbol

  const Mat3<K>& gen_mat(Gen g) const {
    switch (g) {
      case Gen::F: return f;
      case Gen::K: return k;
      case Gen::Finv: return f_inv;
      default: return k_inv;
    }
  }
  const Frame<K>& gen_frame(Gen g) const { return gen_is_f_side(g) ? frame_f : frame_k; }
  const Chamber<K>& gen_G(Gen g) const { return G[static_cast<std::size_t>(g)]; }
  const Chamber<K>& gen_C(Gen g) const { return C[static_cast<std::size_t>(g)]; }
  const SectorSpec<K>& gen_S(Gen g) const { return S[static_cast<std::size_t>(g)]; }
  const SectorSpec<K>& gen_T(Gen g) const { return T[static_cast<std::size_t>(g)]; }
  const Vertex<K>& gen_v(Gen g) const { return v_plus[static_cast<std::size_t>(g)]; }
};

// Builds the data from a constants table, verifying every invariant.
template <class K>
NamedData<K> build_named_data(const std::map<std::string, Mat3<K>>& c,
                              const FieldCtx<K>& ctx) {
  auto need = [&](const std::string& n) -> const Mat3<K>& {
    auto it = c.find(n);
    if (it == c.end()) throw ConstructionError(n, "missing from constants table");
    return it->second;
  };

  NamedData<K> d;
  d.ctx = ctx;
  d.f = need("f");
  d.k = need("k");
  d.s = need("s");

  const RatFunc<K> one = RatFunc<K>::one();
  if (d.f.det() != one) throw ConstructionError("f", "determinant is not 1");
  if (d.k.det() != one) throw ConstructionError("k", "determinant is not 1");
  if (!d.s.det().is_O_unit()) throw ConstructionError("s", "det valuation is not 0");
  if (!is_in_GL3O(d.s)) throw ConstructionError("s", "not in GL3(O)");

  d.f_inv = d.f.inverse();
  d.k_inv = d.k.inverse();
  d.s_inv = d.s.inverse();

  if (d.s * d.f * d.s_inv != d.k)
    throw ConstructionError("k", "conjugation identity k = s f s^-1 fails");

  const std::array<std::pair<Gen, Gen>, 4> pairs{
      std::pair{Gen::F, Gen::K}, std::pair{Gen::F, Gen::Kinv},
      std::pair{Gen::Finv, Gen::K}, std::pair{Gen::Finv, Gen::Kinv}};
  const std::array<std::string, 4> suffix{"fk", "fK", "Fk", "FK"};

  for (int idx = 0; idx < 4; ++idx) {
    const Mat3<K>& bm = need("b_" + suffix[static_cast<std::size_t>(idx)]);
    const Mat3<K>& lines = need("lines_" + suffix[static_cast<std::size_t>(idx)]);
    if (bm.det().is_zero())
      throw ConstructionError("b_" + suffix[static_cast<std::size_t>(idx)], "singular");
    // every stated line must be proportional to exactly one column of b
    std::array<bool, 3> used{false, false, false};
    for (int i = 0; i < 3; ++i) {
      int hit = -1;
      for (int j = 0; j < 3; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        if (detail::proportional<K>(detail::mat_row(lines, i), detail::mat_col(bm, j))) {
          hit = j;
          break;
        }
      }
      if (hit < 0)
        throw ConstructionError("b_" + suffix[static_cast<std::size_t>(idx)],
                                "column set does not span the stated frame lines");
      used[static_cast<std::size_t>(hit)] = true;
    }
    d.b[pairs[static_cast<std::size_t>(idx)]] = bm;
    d.frames[pairs[static_cast<std::size_t>(idx)]] = Frame<K>{bm};
  }

  d.frame_f = Frame<K>{Mat3<K>::identity()};
  d.frame_k = Frame<K>{d.s};

  d.v = Vertex<K>{Mat3<K>::identity()};
  if (!vertex_eq(Vertex<K>{d.s}, d.v)) throw ConstructionError("s", "s does not fix v");

  for (Gen g : all_gens)
    d.v_plus[static_cast<std::size_t>(g)] = Vertex<K>{d.gen_mat(g)};

  // Tip chambers: G_f is the standard chamber (the Iwahori coset of the
  // identity); G_(f^-1) is its opposite at v, the antidiagonal permutation;
  // the k-side tips are the s-transports.
  Mat3<K> anti;
  anti.at(0, 2) = one;
  anti.at(1, 1) = one;
  anti.at(2, 0) = one;
  d.G[static_cast<std::size_t>(Gen::F)] = Chamber<K>{Mat3<K>::identity()};
  d.G[static_cast<std::size_t>(Gen::Finv)] = Chamber<K>{anti};
  d.G[static_cast<std::size_t>(Gen::K)] = Chamber<K>{d.s};
  d.G[static_cast<std::size_t>(Gen::Kinv)] = Chamber<K>{d.s * anti};

  for (Gen g : all_gens) {
    auto i = static_cast<std::size_t>(g);
    d.C[i] = Chamber<K>{d.gen_mat(g) * d.G[i].rep};
  }

  for (Gen g : all_gens) {
    auto i = static_cast<std::size_t>(g);
    bool inv = (g == Gen::Finv || g == Gen::Kinv);
    std::array<int, 3> order = inv ? std::array<int, 3>{2, 1, 0} : std::array<int, 3>{0, 1, 2};
    const Frame<K>& fr = d.gen_frame(g);
    d.S[i] = SectorSpec<K>{fr, Coords::of({0, 0, 0}), order};
    auto tip = apartment_membership(fr, d.v_plus[i]);
    if (!tip)
      throw ConstructionError(gen_name(g), "g.v does not lie in the axis apartment");
    std::array<long, 3> expect = inv ? std::array<long, 3>{1, 0, -1} : std::array<long, 3>{-1, 0, 1};
    if (*tip != Coords::of(expect))
      throw ConstructionError(gen_name(g), "g.v has unexpected apartment coordinates " + tip->str());
    d.T[i] = SectorSpec<K>{fr, *tip, order};
  }

  // sanity: each tip chamber contains v and lies in its sector
  for (Gen g : all_gens) {
    auto i = static_cast<std::size_t>(g);
    if (!chamber_contains_vertex(d.G[i], d.v))
      throw ConstructionError(gen_name(g), "tip chamber does not contain v");
    for (auto& w : chamber_vertices(d.G[i]))
      if (!sector_membership(d.S[i], w))
        throw ConstructionError(gen_name(g), "tip chamber is not inside its sector");
  }

  // Chambers at infinity: xi_f^+ is the flag [e1] < [e1, e2], xi_f^- is
  // [e3] < [e2, e3]; the k-side flags are their s-images.
  auto col = [&](const Mat3<K>& m, int j) { return detail::mat_col(m, j); };
  Mat3<K> id = Mat3<K>::identity();
  d.xi[static_cast<std::size_t>(Gen::F)] = {col(id, 0), {col(id, 0), col(id, 1)}};
  d.xi[static_cast<std::size_t>(Gen::Finv)] = {col(id, 2), {col(id, 1), col(id, 2)}};
  d.xi[static_cast<std::size_t>(Gen::K)] = {col(d.s, 0), {col(d.s, 0), col(d.s, 1)}};
  d.xi[static_cast<std::size_t>(Gen::Kinv)] = {col(d.s, 2), {col(d.s, 1), col(d.s, 2)}};

  return d;
}

template <class K>
NamedData<K> builtin(const FieldCtx<K>& ctx) {
  return build_named_data(parse_constants<K>(builtin_constants_text(), ctx), ctx);
}

// ---------------------------------------------------------------------------
// Group words

struct WordBlock {
  char letter;  // 'f' or 'k'
  long exp;     // nonzero
};
using GroupWord = std::vector<WordBlock>;

inline void validate_word(const GroupWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].letter != 'f' && w[i].letter != 'k')
      throw PreconditionError("word letters must be f or k");
    if (w[i].exp == 0) throw PreconditionError("word exponents must be nonzero");
    if (i && w[i].letter == w[i - 1].letter)
      throw PreconditionError("word is not reduced");
  }
}

template <class K>
Mat3<K> evaluate_word(const NamedData<K>& d, const GroupWord& w) {
  validate_word(w);
  Mat3<K> acc = Mat3<K>::identity();
  for (auto& blk : w) {
    const Mat3<K>& base = blk.letter == 'f' ? d.f : d.k;
    acc = acc * base.pow(blk.exp);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Mod-p reduction (characteristic 0 -> characteristic p)

inline GFp reduce_coeff_mod_p(const Rational& c, long long p) {
  const mpq_class& q = c.raw();
  unsigned long np = mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
  unsigned long dp = mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
  if (dp == 0)
    throw CoefficientError("coefficient denominator vanishes mod " + std::to_string(p));
  return GFp(static_cast<long long>(np), p) / GFp(static_cast<long long>(dp), p);
}

inline Poly<GFp> reduce_poly_mod_p(const Poly<Rational>& a, long long p) {
  std::vector<Poly<GFp>::Term> terms;
  for (auto& [e, c] : a.terms()) terms.push_back({e, reduce_coeff_mod_p(c, p)});
  return Poly<GFp>::from_terms(terms);
}

inline RatFunc<GFp> reduce_mod_p(const RatFunc<Rational>& x, long long p) {
  if (!is_prime(p)) throw PreconditionError("modulus must be prime");
  Poly<GFp> den = reduce_poly_mod_p(x.den(), p);
  if (den.is_zero())
    throw CoefficientError("denominator vanishes mod " + std::to_string(p));
  return RatFunc<GFp>(reduce_poly_mod_p(x.num(), p), den);
}

inline Mat3<GFp> reduce_mod_p(const Mat3<Rational>& m, long long p) {
  Mat3<GFp> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = reduce_mod_p(m.at(i, j), p);
  return r;
}

}  // namespace sl3pong
