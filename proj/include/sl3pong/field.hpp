#pragma once

// Exact coefficient fields for the function-field engine: arbitrary-precision
// rationals (characteristic 0) and prime fields F_p (characteristic p).
//
// Both types model the same concept: default construction gives 0, statics
// zero()/one() give the identities, and all arithmetic is exact. A GFp value
// normally carries its modulus; the identities are modulus-free literals that
// get absorbed on first contact with a carried value, so that generic code
// (polynomials, matrices) can mint identities without a field context.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sl3pong/base.hpp"

namespace sl3pong {

class Rational {
 public:
  Rational() : q_(0) {}
  explicit Rational(long v) : q_(v) {}
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DivisionByZero();
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  static Rational from_decimal(std::string_view digits) {
    return Rational(mpq_class(mpz_class(std::string(digits), 10)));
  }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  Rational inv() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / q_));
  }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  int sign() const { return sgn(q_); }

  // Lowest-terms decimal form: "7", "-3/2".
  std::string str() const { return q_.get_str(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

// Prime-field element. p_ == 0 marks a small integer literal not yet reduced
// (produced only by zero()/one() and arithmetic among such literals); any
// operation with a carried value adopts its modulus.
class GFp {
 public:
  GFp() : v_(0), p_(0) {}
  GFp(long long v, long long p) : v_(v), p_(p) { normalize(); }

  static GFp zero() { return GFp(); }
  static GFp one() { return GFp(1, 0); }

  static GFp from_decimal(std::string_view digits, long long p) {
    long long v = 0;
    for (char c : digits) v = (v * 10 + (c - '0')) % p;
    return GFp(v, p);
  }

  long long modulus() const { return p_; }
  long long residue() const { return v_; }

  bool is_zero() const { return p_ ? v_ == 0 : v_ == 0; }
  bool is_one() const { return p_ ? v_ == 1 : v_ == 1; }

  GFp operator-() const { return GFp(p_ ? p_ - v_ : -v_, p_); }
  GFp operator+(const GFp& o) const {
    long long p = join(o);
    return GFp(red(v_, p) + red(o.v_, p), p);
  }
  GFp operator-(const GFp& o) const {
    long long p = join(o);
    return GFp(red(v_, p) - red(o.v_, p), p);
  }
  GFp operator*(const GFp& o) const {
    long long p = join(o);
    if (p == 0) return GFp(v_ * o.v_, 0);
    return GFp(static_cast<long long>(
                   static_cast<__int128>(red(v_, p)) * red(o.v_, p) % p),
               p);
  }
  GFp operator/(const GFp& o) const { return *this * o.inv(); }
  GFp& operator+=(const GFp& o) { return *this = *this + o; }
  GFp& operator-=(const GFp& o) { return *this = *this - o; }
  GFp& operator*=(const GFp& o) { return *this = *this * o; }

  GFp inv() const {
    if (is_zero()) throw DivisionByZero();
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw CoefficientError("cannot invert unreduced literal without a modulus");
    }
    // extended Euclid mod p_
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long tmp = a - q * b; a = b; b = tmp;
      tmp = x0 - q * x1; x0 = x1; x1 = tmp;
    }
    return GFp(x0, p_);
  }

  bool operator==(const GFp& o) const {
    long long p = p_ ? p_ : o.p_;
    if (p == 0) return v_ == o.v_;
    return red(v_, p) == red(o.v_, p);
  }
  bool operator!=(const GFp& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }

 private:
  long long v_;
  long long p_;

  static long long red(long long v, long long p) {
    if (p == 0) return v;
    v %= p;
    return v < 0 ? v + p : v;
  }
  void normalize() { v_ = red(v_, p_); }
  long long join(const GFp& o) const {
    if (p_ && o.p_ && p_ != o.p_)
      throw CoefficientError("mixed prime-field moduli");
    return p_ ? p_ : o.p_;
  }
};

// Per-engine field configuration: how integer literals become coefficients.
template <class K>
struct FieldCtx;

template <>
struct FieldCtx<Rational> {
  long long characteristic() const { return 0; }
  Rational from_int(long long v) const { return Rational(static_cast<long>(v)); }
  Rational from_decimal(std::string_view digits) const { return Rational::from_decimal(digits); }
};

template <>
struct FieldCtx<GFp> {
  long long p = 2;
  long long characteristic() const { return p; }
  GFp from_int(long long v) const { return GFp(v, p); }
  GFp from_decimal(std::string_view digits) const { return GFp::from_decimal(digits, p); }
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace sl3pong
