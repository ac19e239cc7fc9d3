#include "doctest.h"

#include "sl3pong/field.hpp"
#include "sl3pong/parse.hpp"
#include "sl3pong/poly.hpp"
#include "sl3pong/ratfunc.hpp"

#include "support.hpp"

using namespace sl3pong;

namespace {

const FieldCtx<Rational> Q{};

RatFunc<Rational> rq(const char* text) { return parse_ratfunc<Rational>(text, Q); }

}  // namespace

TEST_CASE("field arithmetic on canonical forms") {
  auto t = RatFunc<Rational>::t_power(1);
  auto ti = RatFunc<Rational>::t_power(-1);

  SUBCASE("add(t, t^-1) = (t^2+1)/t, cross-checked at t = 2") {
    auto sum = t + ti;
    CHECK(sum == rq("(t^2 + 1)/t"));
    // independent oracle: evaluate both sides at t = 2 over the rationals
    Rational lhs = sum.num().eval(Rational(2)) / sum.den().eval(Rational(2));
    CHECK(lhs == Rational(5, 2));
  }
  SUBCASE("mul by one is the identity") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      auto x = testing::random_ratfunc(rng, Q);
      CHECK(x * RatFunc<Rational>::one() == x);
    }
  }
  SUBCASE("self-division") { CHECK(t / t == RatFunc<Rational>::one()); }
  SUBCASE("division by zero is a typed error") {
    CHECK_THROWS_AS(t / RatFunc<Rational>::zero(), DivisionByZero);
    CHECK_THROWS_AS(RatFunc<Rational>::zero().inv(), DivisionByZero);
  }
  SUBCASE("canonical form: monic denominator, reduced") {
    auto x = RatFunc<Rational>(Poly<Rational>::monomial(1, Rational(2)),
                               Poly<Rational>::monomial(0, Rational(4)));
    CHECK(x == rq("1/2*t"));
    CHECK(x.den().is_one());
  }
}

TEST_CASE("valuation at infinity") {
  CHECK(RatFunc<Rational>::pi().val() == Valuation::of(1));
  CHECK(RatFunc<Rational>::zero().val().is_infinite());
  // degree-difference oracle: deg den - deg num = 3 - 2
  CHECK(rq("(t^2+1)/t^3").val() == Valuation::of(1));
  CHECK(rq("t").val() == Valuation::of(-1));
}

TEST_CASE("valuation laws on 1000 seeded random pairs") {
  Rng rng(1001);
  for (int i = 0; i < 1000; ++i) {
    auto x = testing::random_ratfunc(rng, Q);
    auto y = testing::random_ratfunc(rng, Q);
    CHECK((x * y).val() == x.val() + y.val());
    auto sum = (x + y).val();
    auto lo = Valuation::min(x.val(), y.val());
    CHECK(sum >= lo);
    if (x.val() != y.val()) CHECK(sum == lo);
  }
}

TEST_CASE("pi-adic expansion") {
  SUBCASE("geometric series: 1/(1 - pi)") {
    auto x = RatFunc<Rational>::one() / (RatFunc<Rational>::one() - RatFunc<Rational>::pi());
    auto got = x.pi_expansion(3);
    // oracle: 1 + pi + pi^2 + ...
    REQUIRE(got.size() == 3);
    for (long e = 0; e < 3; ++e) {
      CHECK(got[static_cast<std::size_t>(e)].first == e);
      CHECK(got[static_cast<std::size_t>(e)].second == Rational(1));
    }
  }
  SUBCASE("zero expands to nothing") { CHECK(RatFunc<Rational>::zero().pi_expansion(5).empty()); }
  SUBCASE("t = pi^-1 exactly") {
    auto got = rq("t").pi_expansion(0);
    REQUIRE(got.size() == 1);
    CHECK(got[0].first == -1);
    CHECK(got[0].second == Rational(1));
  }
  SUBCASE("truncation error has valuation >= order, 1000 random values") {
    Rng rng(2002);
    for (int i = 0; i < 1000; ++i) {
      auto x = testing::random_ratfunc(rng, Q);
      long order = rng.range(-3, 6);
      auto terms = x.pi_expansion(order);
      auto rem = x - RatFunc<Rational>::from_pi_terms(terms);
      CHECK(rem.val().ge(order));
    }
  }
}

TEST_CASE("parser") {
  SUBCASE("a matrix entry of k") {
    auto x = rq("t^-2 + t^-1 + 1 + t");
    auto expect = RatFunc<Rational>::t_power(-2) + RatFunc<Rational>::t_power(-1) +
                  RatFunc<Rational>::one() + RatFunc<Rational>::t_power(1);
    CHECK(x == expect);
  }
  SUBCASE("zero") { CHECK(rq("0").is_zero()); }
  SUBCASE("product expansion, checked by evaluation at t = 3") {
    auto x = rq("(1-t)*(1-t^-1)");
    CHECK(x == rq("2 - t - t^-1"));
    Rational v = x.num().eval(Rational(3)) / x.den().eval(Rational(3));
    CHECK(v == Rational(-4, 3));  // (1-3)(1-1/3)
  }
  SUBCASE("syntax errors carry a position") {
    try {
      rq("t^-2 + ");
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.pos >= 7);
    }
    CHECK_THROWS_AS(rq("(1+t"), ParseError);
    CHECK_THROWS_AS(rq("1 + q"), ParseError);
    CHECK_THROWS_AS(rq("[1, 2; 3]"), ParseError);
  }
  SUBCASE("coefficient not valid in the configured field") {
    FieldCtx<GFp> F2{2};
    CHECK_THROWS_AS(parse_ratfunc<GFp>("1/2", F2), CoefficientError);
    // fine over F_3
    FieldCtx<GFp> F3{3};
    CHECK(parse_ratfunc<GFp>("1/2", F3) == parse_ratfunc<GFp>("2", F3));
  }
  SUBCASE("matrices parse as bracketed rows") {
    Parser<Rational> p("[1, 0; t, t^-1]", Q);
    auto m = p.parse_matrix_literal();
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    CHECK(m.at(1, 0) == rq("t"));
  }
}

TEST_CASE("print/parse round trip on 1000 random values") {
  Rng rng(3003);
  for (int i = 0; i < 1000; ++i) {
    auto x = testing::random_ratfunc(rng, Q);
    CHECK(rq(x.str().c_str()) == x);
  }
}

TEST_CASE("round trip over a prime field") {
  FieldCtx<GFp> F3{3};
  Rng rng(4004);
  for (int i = 0; i < 300; ++i) {
    auto x = testing::random_ratfunc(rng, F3);
    CHECK(parse_ratfunc<GFp>(x.str(), F3) == x);
  }
}

TEST_CASE("prime field arithmetic is exact") {
  FieldCtx<GFp> F3{3};
  GFp a = F3.from_int(2), b = F3.from_int(2);
  CHECK(a + b == F3.from_int(1));
  CHECK(a * b == F3.from_int(1));
  CHECK(a.inv() == F3.from_int(2));
  CHECK_THROWS_AS(F3.from_int(0).inv(), DivisionByZero);
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(!is_prime(1));
  CHECK(!is_prime(6));
}
