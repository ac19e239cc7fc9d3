#pragma once

// The building of SL3 over the function field in the lattice-class model.
// Vertices are homothety classes of rank-3 lattices held as invertible
// representative matrices (columns span the lattice); chambers are Iwahori
// cosets modulo scalars; apartments are given by frames (bases whose lines
// define the apartment). Equality is always semantic, decided by valuation
// criteria, never structural.

#include <array>
#include <optional>
#include <string>

#include "sl3pong/dvr.hpp"
#include "sl3pong/field.hpp"
#include "sl3pong/mat.hpp"

namespace sl3pong {

template <class K>
struct Vertex {
  Mat3<K> rep;
};

template <class K>
struct Chamber {
  Mat3<K> rep;
};

template <class K>
struct Frame {
  Mat3<K> basis;
};

// Apartment coordinates: an integer triple modulo the diagonal shift (1,1,1),
// canonical representative has coordinate sum in {0, 1, 2}. The vertex with
// coordinates x in the frame F is the class of F.basis * diag(pi^x).
struct Coords {
  std::array<long, 3> a{0, 0, 0};

  static Coords of(std::array<long, 3> v) {
    Coords c{v};
    c.canonicalize();
    return c;
  }
  void canonicalize() {
    long s = a[0] + a[1] + a[2];
    long r = ((s % 3) + 3) % 3;
    long c = (s - r) / 3;
    for (auto& x : a) x -= c;
  }
  std::array<long, 3> diff(const Coords& o) const {
    return {a[0] - o.a[0], a[1] - o.a[1], a[2] - o.a[2]};
  }
  bool operator==(const Coords& o) const { return a == o.a; }
  bool operator!=(const Coords& o) const { return a != o.a; }
  bool operator<(const Coords& o) const { return a < o.a; }
  std::string str() const {
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
           std::to_string(a[2]) + ")";
  }
};

// Squared euclidean length of a coordinate difference in the quotient metric
// of the apartment: sum (d_i - mean)^2 = (3*sum d_i^2 - (sum d_i)^2) / 3.
// Well defined on classes mod (1,1,1); exact rational.
inline Rational quotient_sqnorm(const std::array<long, 3>& d) {
  long s = d[0] + d[1] + d[2];
  long q = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
  return Rational(3 * q - s * s, 3);
}

// Inner product of coordinate differences in the quotient metric.
inline Rational quotient_inner(const std::array<long, 3>& x, const std::array<long, 3>& y) {
  long sx = x[0] + x[1] + x[2], sy = y[0] + y[1] + y[2];
  long dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  return Rational(3 * dot - sx * sy, 3);
}

// A sector: all apartment vertices whose coordinates, translated by -tip,
// satisfy a weak chain  d[order[0]] <= d[order[1]] <= d[order[2]].
template <class K>
struct SectorSpec {
  Frame<K> frame;
  Coords tip;
  std::array<int, 3> order{0, 1, 2};
};

// A chamber of the spherical building at infinity: a complete flag
// line < plane in K^3.
template <class K>
struct ChamberAtInfinity {
  std::array<RatFunc<K>, 3> line;
  std::array<std::array<RatFunc<K>, 3>, 2> plane;
};

// ---------------------------------------------------------------------------
// Vertex predicates

// Lattice-class equality: A = V.rep^-1 * W.rep represents the same class iff
// A is a scalar pi-power times a GL3(O) matrix, iff 3*min nu(A_ij) = nu(det A).
template <class K>
bool vertex_eq(const Vertex<K>& v, const Vertex<K>& w) {
  Mat3<K> a = v.rep.inverse() * w.rep;
  Valuation d = a.det().val();
  if (d.is_infinite()) throw SingularMatrix();
  return 3 * min_entry_val(a).finite() == d.finite();
}

// Type of a vertex: nu(det rep) mod 3, invariant under homothety.
template <class K>
int vertex_type(const Vertex<K>& v) {
  Valuation d = v.rep.det().val();
  if (d.is_infinite()) throw SingularMatrix();
  return static_cast<int>(((d.finite() % 3) + 3) % 3);
}

// Squared CAT(0) distance between vertices, computed from the invariant
// exponents of V.rep^-1 * W.rep in any shared apartment.
template <class K>
Rational vertex_sqdist(const Vertex<K>& v, const Vertex<K>& w) {
  std::array<long, 3> e = invariant_exponents(v.rep.inverse() * w.rep);
  return quotient_sqnorm(e);
}

// Adjacency in the 1-skeleton: invariant exponents normalize to (0,0,1) or
// (0,1,1) (exponents are delivered sorted ascending).
template <class K>
bool vertices_adjacent(const Vertex<K>& v, const Vertex<K>& w) {
  std::array<long, 3> e = invariant_exponents(v.rep.inverse() * w.rep);
  long p = e[1] - e[0], q = e[2] - e[0];
  return (p == 0 && q == 1) || (p == 1 && q == 1);
}

// ---------------------------------------------------------------------------
// Apartment membership

// V lies in the apartment of F iff C = V.rep^-1 * F.basis factors as
// m * diag(pi^u) with m in GL3(O); then u_j is the column-minimum valuation
// and the frame coordinates of V are (-u_1, -u_2, -u_3).
template <class K>
std::optional<Coords> apartment_membership(const Frame<K>& f, const Vertex<K>& v) {
  Mat3<K> c = v.rep.inverse() * f.basis;
  Valuation d = c.det().val();
  if (d.is_infinite()) throw SingularMatrix();
  std::array<long, 3> u{};
  for (int j = 0; j < 3; ++j) {
    Valuation m = Valuation::infinity();
    for (int i = 0; i < 3; ++i) m = Valuation::min(m, c.at(i, j).val());
    if (m.is_infinite()) throw SingularMatrix();
    u[j] = m.finite();
  }
  if (u[0] + u[1] + u[2] != d.finite()) return std::nullopt;
  return Coords::of({-u[0], -u[1], -u[2]});
}

// The vertex with given coordinates in a frame.
template <class K>
Vertex<K> apartment_vertex(const Frame<K>& f, const Coords& x) {
  return Vertex<K>{f.basis * Mat3<K>::pi_diag(x.a)};
}

template <class K>
bool sector_membership(const SectorSpec<K>& s, const Vertex<K>& v) {
  auto coords = apartment_membership(s.frame, v);
  if (!coords) return false;
  std::array<long, 3> d = coords->diff(s.tip);
  // The chain is invariant under the diagonal shift; trying the canonical
  // lifts keeps the check honest about the mod-(1,1,1) ambiguity.
  for (long lift : {0L, 1L, -1L}) {
    std::array<long, 3> e{d[0] + lift, d[1] + lift, d[2] + lift};
    if (e[s.order[0]] <= e[s.order[1]] && e[s.order[1]] <= e[s.order[2]]) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Chamber predicates

// Chambers are equal iff some scalar pi-power of C.rep^-1 * D.rep lies in the
// Iwahori subgroup; the candidate power is nu(det)/3.
template <class K>
bool chamber_eq(const Chamber<K>& c, const Chamber<K>& d) {
  Mat3<K> a = c.rep.inverse() * d.rep;
  Valuation dv = a.det().val();
  if (dv.is_infinite()) throw SingularMatrix();
  if (dv.finite() % 3 != 0) return false;
  long s = dv.finite() / 3;
  return is_in_iwahori(a.scaled(RatFunc<K>::pi(-s)));
}

// The three vertices of a chamber: rep * diag(pi^mu) for the flag pattern.
template <class K>
std::array<Vertex<K>, 3> chamber_vertices(const Chamber<K>& c) {
  return {Vertex<K>{c.rep},
          Vertex<K>{c.rep * Mat3<K>::pi_diag({0, 0, 1})},
          Vertex<K>{c.rep * Mat3<K>::pi_diag({0, 1, 1})}};
}

template <class K>
bool chamber_contains_vertex(const Chamber<K>& c, const Vertex<K>& v) {
  for (auto& w : chamber_vertices(c))
    if (vertex_eq(w, v)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Opposition at infinity

namespace detail {
template <class K>
RatFunc<K> det3(const std::array<RatFunc<K>, 3>& a, const std::array<RatFunc<K>, 3>& b,
                const std::array<RatFunc<K>, 3>& c) {
  Mat3<K> m;
  for (int i = 0; i < 3; ++i) {
    m.at(i, 0) = a[static_cast<std::size_t>(i)];
    m.at(i, 1) = b[static_cast<std::size_t>(i)];
    m.at(i, 2) = c[static_cast<std::size_t>(i)];
  }
  return m.det();
}
}  // namespace detail

// Two chambers at infinity are opposite iff neither line is contained in the
// other's plane; containment is a rank (determinant) computation over K.
template <class K>
bool chambers_at_infinity_opposite(const ChamberAtInfinity<K>& c1,
                                   const ChamberAtInfinity<K>& c2) {
  bool l1_in_p2 = detail::det3<K>(c1.line, c2.plane[0], c2.plane[1]).is_zero();
  bool l2_in_p1 = detail::det3<K>(c2.line, c1.plane[0], c1.plane[1]).is_zero();
  return !l1_in_p2 && !l2_in_p1;
}

// ---------------------------------------------------------------------------
// Comparison angles

// Cosine of the euclidean comparison angle at p between x and y, restricted
// to equal legs d2(p,x) = d2(p,y) = L2 > 0: (2 L2 - d2(x,y)) / (2 L2).
template <class K>
Rational comparison_cosine(const Vertex<K>& p, const Vertex<K>& x, const Vertex<K>& y) {
  Rational l2 = vertex_sqdist(p, x);
  if (!(l2 == vertex_sqdist(p, y)) || l2.is_zero())
    throw PreconditionError("comparison_cosine needs equal positive legs");
  Rational opp = vertex_sqdist(x, y);
  Rational two_l2 = Rational(2) * l2;
  return (two_l2 - opp) / two_l2;
}

// ---------------------------------------------------------------------------
// Canonical vertex keys (optional; used for dedup in campaigns)

// Hermite-style normal form of the lattice over the valuation ring: reduce
// the representative by column operations over O to upper triangular with
// pi-power diagonal, reduce off-diagonal entries to truncated pi-expansions
// modulo the diagonal of their row, then normalize the homothety so the
// first diagonal exponent is 0. Two representatives of the same class give
// byte-identical keys.
template <class K>
std::string canonical_vertex_key(const Vertex<K>& v) {
  Mat3<K> h = v.rep;
  if (h.det().is_zero()) throw SingularMatrix();
  // bottom-up column echelon over O
  for (int i = 2; i >= 0; --i) {
    int pivot = -1;
    Valuation best = Valuation::infinity();
    for (int j = 0; j <= i; ++j) {
      Valuation w = h.at(i, j).val();
      if (w < best) { best = w; pivot = j; }
    }
    if (pivot < 0) throw SingularMatrix();
    // swap pivot column into place
    if (pivot != i)
      for (int r = 0; r < 3; ++r) {
        RatFunc<K> tmp = h.at(r, i);
        h.at(r, i) = h.at(r, pivot);
        h.at(r, pivot) = tmp;
      }
    // scale column i so the (i,i) entry is an exact pi power
    long a = h.at(i, i).val().finite();
    RatFunc<K> unit_inv = (h.at(i, i) * RatFunc<K>::pi(-a)).inv();
    for (int r = 0; r < 3; ++r) h.at(r, i) = h.at(r, i) * unit_inv;
    // clear the rest of row i
    for (int j = 0; j < i; ++j) {
      if (h.at(i, j).is_zero()) continue;
      RatFunc<K> m = -(h.at(i, j) / h.at(i, i));
      h.col_addmul(j, i, m);
    }
  }
  // Reduce above-diagonal entries modulo pi^(row diagonal) * O by column
  // operations, bottom row first so later reductions see final values.
  for (int i = 2; i >= 0; --i) {
    long ai = h.at(i, i).val().finite();
    for (int j = i + 1; j < 3; ++j) {
      RatFunc<K> r = h.at(i, j);
      if (r.is_zero()) continue;
      RatFunc<K> trunc = RatFunc<K>::from_pi_terms(r.pi_expansion(ai));
      RatFunc<K> tail = (r - trunc) * RatFunc<K>::pi(-ai);  // in O
      if (!tail.is_zero()) h.col_addmul(j, i, -tail);
    }
  }
  // kill the homothety: shift so the (0,0) exponent is 0
  long a0 = h.at(0, 0).val().finite();
  if (a0 != 0) h = h.scaled(RatFunc<K>::pi(-a0));
  return h.str();
}

}  // namespace sl3pong
