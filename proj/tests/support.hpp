#pragma once

// Shared helpers for the test suites: deterministic random field elements,
// matrices, and small independent oracles. Everything here is test-side code;
// none of it is used by the library implementation it checks.

#include <array>
#include <string>
#include <vector>

#include "sl3pong/field.hpp"
#include "sl3pong/mat.hpp"
#include "sl3pong/poly.hpp"
#include "sl3pong/ratfunc.hpp"
#include "sl3pong/rng.hpp"
#include "sl3pong/weyl.hpp"

namespace sl3pong::testing {

inline const std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2},
                                                       {0, 2, 1},
                                                       {1, 0, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {2, 1, 0}}};

template <class K>
Poly<K> random_poly(Rng& rng, const FieldCtx<K>& ctx, long max_deg, int max_terms,
                    bool nonzero = false) {
  std::vector<typename Poly<K>::Term> terms;
  int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + (nonzero ? 1 : 0);
  for (int i = 0; i < n; ++i) {
    long e = rng.range(0, max_deg);
    long c = rng.range(-4, 4);
    terms.push_back({e, ctx.from_int(c)});
  }
  Poly<K> p = Poly<K>::from_terms(terms);
  if (nonzero && p.is_zero()) p = Poly<K>::monomial(rng.range(0, max_deg), K::one());
  return p;
}

template <class K>
RatFunc<K> random_ratfunc(Rng& rng, const FieldCtx<K>& ctx, long max_deg = 4,
                          int max_terms = 4) {
  Poly<K> num = random_poly(rng, ctx, max_deg, max_terms);
  Poly<K> den = random_poly(rng, ctx, max_deg, max_terms, /*nonzero=*/true);
  return RatFunc<K>(num, den);
}

// Random invertible matrix: product of <= max_factors unit elementary and
// monomial factors with bounded entry degrees.
template <class K>
Mat3<K> random_invertible(Rng& rng, const FieldCtx<K>& ctx, int max_factors = 8,
                          long max_deg = 2) {
  Mat3<K> acc = Mat3<K>::identity();
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_factors)));
  for (int it = 0; it < n; ++it) {
    if (rng.below(3) == 0) {
      std::array<long, 3> u{rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)};
      acc = acc * monomial_matrix<K>(AffineWeyl{kPerms[rng.below(6)], u});
    } else {
      int i = static_cast<int>(rng.below(3));
      int j = static_cast<int>(rng.below(2));
      if (j >= i) ++j;
      long cc = rng.coin() ? (rng.coin() ? 1 : 2) : (rng.coin() ? -1 : -2);
      long dd = rng.range(-max_deg, max_deg);
      acc = acc * Mat3<K>::elementary(i, j, RatFunc<K>::t_power(dd).scaled(ctx.from_int(cc)));
    }
  }
  return acc;
}

// Random Iwahori element: unit diagonal, O entries above, piO entries below.
template <class K>
Mat3<K> random_iwahori(Rng& rng, const FieldCtx<K>& ctx, long max_deg = 2) {
  Mat3<K> m;
  for (int i = 0; i < 3; ++i) {
    RatFunc<K> u = RatFunc<K>::from_coeff(ctx.from_int(rng.coin() ? 1 : -1));
    for (long e = 1; e <= max_deg; ++e)
      u = u + RatFunc<K>::pi(e).scaled(ctx.from_int(rng.range(-2, 2)));
    m.at(i, i) = u;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      long lo = i < j ? 0 : 1;
      RatFunc<K> cc;
      for (long e = lo; e <= max_deg + lo; ++e)
        cc = cc + RatFunc<K>::pi(e).scaled(ctx.from_int(rng.range(-1, 1)));
      m.at(i, j) = cc;
    }
  return m;
}

// Random GL3(O) element: Iwahori times a permutation.
template <class K>
Mat3<K> random_gl3o(Rng& rng, const FieldCtx<K>& ctx, long max_deg = 2) {
  return random_iwahori(rng, ctx, max_deg) *
         monomial_matrix<K>(AffineWeyl{kPerms[rng.below(6)], {0, 0, 0}});
}

}  // namespace sl3pong::testing
