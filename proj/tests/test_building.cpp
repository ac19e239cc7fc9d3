#include "doctest.h"

#include <set>

#include "sl3pong/building.hpp"
#include "sl3pong/data.hpp"

#include "support.hpp"

using namespace sl3pong;

namespace {

const FieldCtx<Rational> Q{};

}  // namespace

TEST_CASE("vertex equality is the lattice-class criterion") {
  auto d = builtin(Q);
  CHECK(vertex_eq(Vertex<Rational>{d.s}, d.v));  // s fixes v
  SUBCASE("homothety invariance") {
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
      auto m = testing::random_invertible<Rational>(rng, Q);
      CHECK(vertex_eq(Vertex<Rational>{m}, Vertex<Rational>{m.scaled(RatFunc<Rational>::pi())}));
    }
  }
  CHECK(!vertex_eq(Vertex<Rational>{d.f}, d.v));
  SUBCASE("equivalence relation on perturbed representatives") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
      auto m = testing::random_invertible<Rational>(rng, Q, 5);
      // same class: right GL3(O) and scalar perturbations
      Vertex<Rational> a{m};
      Vertex<Rational> b{m * testing::random_gl3o(rng, Q)};
      Vertex<Rational> c{(m * testing::random_gl3o(rng, Q)).scaled(RatFunc<Rational>::pi(rng.range(-2, 2)))};
      CHECK(vertex_eq(a, a));
      CHECK(vertex_eq(a, b));
      CHECK(vertex_eq(b, c));
      CHECK(vertex_eq(a, c));  // transitivity across the chain
      CHECK(vertex_eq(b, a));  // symmetry
    }
  }
}

TEST_CASE("vertex types") {
  auto d = builtin(Q);
  CHECK(vertex_type(d.v) == 0);
  CHECK(vertex_type(Vertex<Rational>{Mat3<Rational>::pi_diag({0, 0, 1})}) == 1);
  CHECK(vertex_type(Vertex<Rational>{d.f}) == 0);
}

TEST_CASE("squared distances and adjacency") {
  auto d = builtin(Q);
  Vertex<Rational> fv{d.f}, kv{d.k}, finv_v{d.f_inv};
  CHECK(vertex_sqdist(d.v, d.v).is_zero());
  CHECK(vertex_sqdist(d.v, fv) == Rational(2));
  CHECK(vertex_sqdist(fv, kv) == Rational(6));
  CHECK(vertex_sqdist(fv, finv_v) == Rational(8));
  CHECK(vertex_sqdist(kv, fv) == Rational(6));  // symmetry

  CHECK(vertices_adjacent(d.v, Vertex<Rational>{Mat3<Rational>::pi_diag({0, 0, 1})}));
  CHECK(vertices_adjacent(d.v, Vertex<Rational>{Mat3<Rational>::pi_diag({0, 1, 1})}));
  CHECK(!vertices_adjacent(d.v, fv));  // exponents normalize to (0,1,2)
}

TEST_CASE("apartment membership") {
  auto d = builtin(Q);
  SUBCASE("identity frame") {
    auto c = apartment_membership(d.frame_f, d.v);
    REQUIRE(c.has_value());
    CHECK(*c == Coords::of({0, 0, 0}));
  }
  SUBCASE("v lies in the k-apartment at the origin") {
    auto c = apartment_membership(d.frame_k, d.v);
    REQUIRE(c.has_value());
    CHECK(*c == Coords::of({0, 0, 0}));
  }
  SUBCASE("f^n.v lies in the mixed apartment exactly for n > 0") {
    const Frame<Rational>& mixed = d.frames.at({Gen::F, Gen::K});
    for (long n = -15; n <= 15; ++n) {
      Vertex<Rational> vn{d.f.pow(n)};
      auto c = apartment_membership(mixed, vn);
      if (n > 0) {
        REQUIRE(c.has_value());
        CHECK(*c == Coords::of({-n, 0, n}));
      } else {
        CHECK(!c.has_value());
      }
    }
  }
  SUBCASE("restricted to frame lattice points it is a bijection onto canonical coords") {
    const Frame<Rational>& fr = d.frames.at({Gen::F, Gen::K});
    std::set<Coords> seen;
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c) {
          Coords x = Coords::of({a, b, c});
          auto got = apartment_membership(fr, apartment_vertex(fr, x));
          REQUIRE(got.has_value());
          CHECK(*got == x);
          seen.insert(*got);
        }
    // canonical classes in the box: every class hit exactly once by its lifts
    CHECK(seen.size() > 200);
  }
}

TEST_CASE("shared-apartment distances agree with the quotient metric") {
  auto d = builtin(Q);
  SUBCASE("exhaustive differences on the standard frame, radius 4") {
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c) {
          std::array<long, 3> delta{a, b, c};
          auto w = apartment_vertex(d.frame_f, Coords::of(delta));
          CHECK(vertex_sqdist(d.v, w) == quotient_sqnorm(delta));
        }
  }
  SUBCASE("sampled pairs on a skew frame") {
    const Frame<Rational>& fr = d.frames.at({Gen::Finv, Gen::K});
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
      std::array<long, 3> p{rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4)};
      std::array<long, 3> q{rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4)};
      auto vp = apartment_vertex(fr, Coords::of(p));
      auto vq = apartment_vertex(fr, Coords::of(q));
      std::array<long, 3> delta{p[0] - q[0], p[1] - q[1], p[2] - q[2]};
      CHECK(vertex_sqdist(vp, vq) == quotient_sqnorm(delta));
    }
  }
}

TEST_CASE("sector membership") {
  auto d = builtin(Q);
  const auto& S_f = d.gen_S(Gen::F);
  const auto& T_f = d.gen_T(Gen::F);
  for (long n = 0; n <= 12; ++n)
    CHECK(sector_membership(S_f, Vertex<Rational>{d.f.pow(n)}));
  CHECK(sector_membership(S_f, d.v));
  CHECK(!sector_membership(T_f, d.v));
  CHECK(!sector_membership(S_f, Vertex<Rational>{d.f_inv}));
  // T_f contains the forward ray from f.v
  for (long n = 1; n <= 12; ++n)
    CHECK(sector_membership(T_f, Vertex<Rational>{d.f.pow(n)}));
}

TEST_CASE("chamber equality") {
  auto d = builtin(Q);
  Chamber<Rational> std_chamber{Mat3<Rational>::identity()};
  Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    Chamber<Rational> twisted{std_chamber.rep * testing::random_iwahori<Rational>(rng, Q)};
    CHECK(chamber_eq(std_chamber, twisted));
  }
  CHECK(chamber_eq(std_chamber, Chamber<Rational>{std_chamber.rep.scaled(RatFunc<Rational>::pi())}));
  CHECK(!chamber_eq(d.gen_G(Gen::F), d.gen_C(Gen::F)));  // f has a valuation -1 entry
}

TEST_CASE("chamber vertices are pairwise adjacent with all three types") {
  Rng rng(25);
  for (int i = 0; i < 40; ++i) {
    Chamber<Rational> c{testing::random_invertible<Rational>(rng, Q)};
    auto vs = chamber_vertices(c);
    std::set<int> types;
    for (auto& v : vs) types.insert(vertex_type(v));
    CHECK(types.size() == 3);
    CHECK(vertices_adjacent(vs[0], vs[1]));
    CHECK(vertices_adjacent(vs[0], vs[2]));
    CHECK(vertices_adjacent(vs[1], vs[2]));
  }
}

TEST_CASE("the k-apartment is the s-image of the f-apartment") {
  auto d = builtin(Q);
  Rng rng(26);
  for (int i = 0; i < 80; ++i) {
    Vertex<Rational> x{testing::random_invertible<Rational>(rng, Q, 5)};
    Vertex<Rational> sx{d.s_inv * x.rep};
    auto mk = apartment_membership(d.frame_k, x);
    auto mf = apartment_membership(d.frame_f, sx);
    CHECK(mk.has_value() == mf.has_value());
    if (mk && mf) CHECK(*mk == *mf);
  }
  // and on-apartment points hit both with equal coordinates
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      Coords x = Coords::of({a, b, 0});
      auto vx = apartment_vertex(d.frame_k, x);
      auto mf = apartment_membership(d.frame_f, Vertex<Rational>{d.s_inv * vx.rep});
      REQUIRE(mf.has_value());
      CHECK(*mf == x);
    }
}

TEST_CASE("opposition at infinity") {
  auto d = builtin(Q);
  const auto& xf = d.xi[static_cast<std::size_t>(Gen::F)];
  CHECK(!chambers_at_infinity_opposite(xf, xf));
  // all six unordered pairs among the four limit flags are opposite
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(chambers_at_infinity_opposite(d.xi[static_cast<std::size_t>(i)],
                                          d.xi[static_cast<std::size_t>(j)]));
}

TEST_CASE("comparison angles at v") {
  auto d = builtin(Q);
  Vertex<Rational> fv{d.f}, kv{d.k}, fi{d.f_inv}, ki{d.k_inv};
  Rational minus_half(-1, 2);
  CHECK(comparison_cosine(d.v, fv, kv) == minus_half);
  CHECK(comparison_cosine(d.v, fv, ki) == minus_half);
  CHECK(comparison_cosine(d.v, fi, kv) == minus_half);
  CHECK(comparison_cosine(d.v, fi, ki) == minus_half);
  CHECK(comparison_cosine(d.v, fv, fi) == Rational(-1));
  CHECK(comparison_cosine(d.v, fv, fv) == Rational(1));
  CHECK_THROWS_AS(comparison_cosine(d.v, d.v, d.v), PreconditionError);
}

TEST_CASE("canonical vertex keys collapse a class and separate distinct ones") {
  auto d = builtin(Q);
  Rng rng(27);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_invertible<Rational>(rng, Q, 5);
    Vertex<Rational> a{m};
    Vertex<Rational> b{(m * testing::random_gl3o(rng, Q)).scaled(RatFunc<Rational>::pi(rng.range(-1, 1)))};
    CHECK(canonical_vertex_key(a) == canonical_vertex_key(b));
  }
  std::set<std::string> keys;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      Coords x = Coords::of({a, b, 0});
      keys.insert(canonical_vertex_key(apartment_vertex(d.frame_k, x)));
    }
  std::set<Coords> classes;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) classes.insert(Coords::of({a, b, 0}));
  CHECK(keys.size() == classes.size());
}
