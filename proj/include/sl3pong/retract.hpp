#pragma once

// Weyl distances, constructive common apartments, retractions onto an
// apartment based at one of its chambers, building-theoretic projections to
// a vertex (gates), and the exact metric projection onto the axes of f and k.
//
// Everything reduces to the two decompositions in dvr.hpp after transporting
// the base chamber to standard position; the contracts (delta-preservation,
// distance preservation toward the base chamber, 1-Lipschitz) are enforced by
// property tests rather than trusted from the construction.

#include <array>
#include <optional>
#include <vector>

#include "sl3pong/building.hpp"
#include "sl3pong/data.hpp"
#include "sl3pong/dvr.hpp"
#include "sl3pong/weyl.hpp"

namespace sl3pong {

// Weyl distance between chambers: the cell of C.rep^-1 * D.rep.
template <class K>
AffineWeyl weyl_distance(const Chamber<K>& c, const Chamber<K>& d) {
  return iwahori_factorize(c.rep.inverse() * d.rep).w;
}

// A frame whose apartment contains both chambers: take the i1 flank of the
// factorization of C.rep^-1 * D.rep. The postcondition (membership of both
// chambers' vertices) is checked by callers' tests, not assumed.
template <class K>
Frame<K> common_apartment(const Chamber<K>& c, const Chamber<K>& d) {
  auto fact = iwahori_factorize(c.rep.inverse() * d.rep);
  return Frame<K>{c.rep * fact.i1};
}

template <class K>
bool chamber_in_apartment(const Frame<K>& f, const Chamber<K>& c) {
  Mat3<K> b = f.basis.inverse() * c.rep;
  auto fact = iwahori_factorize(b);
  Mat3<K> i = fact.w_hat.inverse() * b;
  Valuation dv = i.det().val();
  if (dv.finite() % 3 != 0) return false;
  return is_in_iwahori(i.scaled(RatFunc<K>::pi(-dv.finite() / 3)));
}

namespace detail {

// Transport data for a retraction rho_{Sigma_F, C}: an Iwahori element i'
// with C.rep^-1 * F.basis = i' * (monomial), so conjugating by (C.rep * i')
// carries (Sigma_F, C) to the standard apartment based at the standard
// chamber. Returns C.rep * i'.
template <class K>
Mat3<K> retraction_base(const Frame<K>& f, const Chamber<K>& c) {
  Mat3<K> b = f.basis.inverse() * c.rep;
  auto fact = iwahori_factorize(b);
  Mat3<K> i = fact.w_hat.inverse() * b;  // in scalar * I iff C lies in Sigma_F
  Valuation dv = i.det().val();
  if (dv.finite() % 3 != 0)
    throw PreconditionError("base chamber does not lie in the apartment");
  Mat3<K> i_scaled = i.scaled(RatFunc<K>::pi(-dv.finite() / 3));
  if (!is_in_iwahori(i_scaled))
    throw PreconditionError("base chamber does not lie in the apartment");
  return c.rep * i_scaled.inverse();
}

}  // namespace detail

// Image of a chamber under the retraction onto the apartment of F based at C.
template <class K>
Chamber<K> retract_chamber(const Frame<K>& f, const Chamber<K>& c, const Chamber<K>& d) {
  Mat3<K> base = detail::retraction_base(f, c);
  auto fact = iwahori_factorize(base.inverse() * d.rep);
  return Chamber<K>{base * fact.w_hat};
}

// Image of a vertex under the same retraction, reported in frame coordinates.
template <class K>
Coords retract_vertex(const Frame<K>& f, const Chamber<K>& c, const Vertex<K>& v) {
  Mat3<K> base = detail::retraction_base(f, c);
  auto cart = iwahori_cartan_factorize(base.inverse() * v.rep);
  Vertex<K> image{base * Mat3<K>::pi_diag(cart.lambda)};
  auto coords = apartment_membership(f, image);
  if (!coords) throw PreconditionError("retraction image escaped the apartment");
  return *coords;
}

// Building-theoretic projection (gate) of the chamber D onto the vertex V:
// pick the reference chamber E0 = chamber of V.rep (it contains V), take a
// common apartment of E0 and D, split delta(E0, D) = w_V * w_min with w_V
// the longest prefix in the finite parabolic stabilizing V, and step from E0
// by w_V inside that apartment. Choice-independence is property-tested.
template <class K>
Chamber<K> project_to_vertex(const Vertex<K>& v, const Chamber<K>& d) {
  Chamber<K> e0{v.rep};
  auto fact = iwahori_factorize(e0.rep.inverse() * d.rep);
  AffineWeyl w = fact.w;
  AffineWeyl prefix = AffineWeyl::identity();
  for (;;) {
    bool descended = false;
    for (int i : {1, 2}) {
      AffineWeyl s = AffineWeyl::simple(i);
      AffineWeyl sw = s * w;
      if (sw.length() < w.length()) {
        w = sw;
        prefix = prefix * s;
        descended = true;
        break;
      }
    }
    if (!descended) break;
  }
  return Chamber<K>{e0.rep * fact.i1 * monomial_matrix<K>(prefix)};
}

// ---------------------------------------------------------------------------
// Metric projection onto the axes A_f, A_k

// A point of the axis A_g in units of the translation length, with v at 0
// and g^n.v at n. Params are exact rationals.
struct AxisPoint {
  Gen gen;
  Rational param;
};

namespace detail {

// The chambers of Sigma_g crossed by the axis segment [n, n+1]: the axis in
// frame coordinates is s |-> (-s, 0, s); the first half-segment lies in the
// translate f^n of the standard chamber, the second in f^n of its reflection
// through the wall {x0 - x2 = -1}.
template <class K>
std::vector<std::pair<Chamber<K>, std::array<Rational, 2>>> axis_chambers(
    const NamedData<K>& d, Gen g, long lo, long hi) {
  const Mat3<K>& transport = gen_is_f_side(g) ? Mat3<K>::identity() : d.s;
  Mat3<K> step = d.f;  // axis data is shared by g and g^-1; use the forward frame
  Mat3<K> d0 = monomial_matrix<K>(AffineWeyl{{2, 1, 0}, {-1, 0, 1}});
  std::vector<std::pair<Chamber<K>, std::array<Rational, 2>>> out;
  Mat3<K> shift = step.pow(lo);
  for (long n = lo; n <= hi; ++n) {
    out.push_back({Chamber<K>{transport * shift},
                   {Rational(n), Rational(2 * n + 1, 2)}});
    out.push_back({Chamber<K>{transport * shift * d0},
                   {Rational(2 * n + 1, 2), Rational(n + 1)}});
    shift = shift * step;
  }
  return out;
}

inline Rational clamp(const Rational& x, const Rational& lo, const Rational& hi) {
  if (x < lo) return lo;
  if (x > hi) return hi;
  return x;
}

// ceil(sqrt(q)) for a non-negative rational, by integer search.
inline long ceil_sqrt(const Rational& q) {
  long r = 0;
  while (Rational(r * r) < q) ++r;
  return r;
}

}  // namespace detail

// The unique closest point of A_g to the vertex V. Scans the axis chambers
// in a window justified by the 1-Lipschitz retraction bound, computes the
// retraction of V based at each chamber, projects orthogonally in exact
// plane coordinates, clips to the chamber's axis segment, and takes the
// candidate of minimal exact squared distance. Squared distances to points
// inside the base chamber are preserved exactly, so every candidate value is
// the true distance to a point of the axis and the argmin is exact.
template <class K>
AxisPoint metric_project_to_axis(const NamedData<K>& d, Gen g, const Vertex<K>& v) {
  if (g != Gen::F && g != Gen::K)
    throw PreconditionError("axes are attached to f and k");
  const Frame<K>& frame = d.gen_frame(g);
  long w = 1 + detail::ceil_sqrt(vertex_sqdist(d.v, v));
  auto chambers = detail::axis_chambers(d, g, -w - 1, w);

  bool have = false;
  Rational best_q, best_param;
  const std::array<long, 3> dir{-1, 0, 1};
  for (auto& [chamber, span] : chambers) {
    Coords x = retract_vertex(frame, chamber, v);
    // orthogonal parameter of x on the axis line: <x, dir> / |dir|^2, both in
    // the quotient metric; integer coordinates make this exact.
    Rational s_star = Rational(x.a[2] - x.a[0], 2);
    Rational s = detail::clamp(s_star, span[0], span[1]);
    // squared distance from x to the axis point (-s, 0, s)
    Rational along = Rational(x.a[2] - x.a[0]);        // <x, dir>
    Rational q = quotient_sqnorm(x.a) + Rational(2) * s * s - Rational(2) * s * along;
    if (!have || q < best_q || (q == best_q && s < best_param)) {
      if (have && q == best_q && !(s == best_param) &&
          !(detail::clamp(best_param, span[0], span[1]) == best_param))
        throw PreconditionError("metric projection tie across distinct points");
      have = true;
      best_q = q;
      best_param = s;
    }
  }
  return AxisPoint{g, best_param};
}

// The vertex at an integer axis parameter.
template <class K>
Vertex<K> axis_vertex(const NamedData<K>& d, Gen g, long n) {
  const Mat3<K>& base = gen_is_f_side(g) ? d.f : d.k;
  return Vertex<K>{base.pow(n)};
}

}  // namespace sl3pong
