#pragma once

// Elements of the rational function field K = k0(t), kept in canonical form:
// gcd(num, den) = 1, den monic, zero represented as 0/1. Equality is
// structural. The valuation is the one at infinity, nu = deg den - deg num,
// with uniformizer pi = t^-1.

#include <string>
#include <utility>
#include <vector>

#include "sl3pong/base.hpp"
#include "sl3pong/poly.hpp"

namespace sl3pong {

struct Valuation {
  bool inf;
  long v;

  static Valuation infinity() { return {true, 0}; }
  static Valuation of(long x) { return {false, x}; }

  bool is_infinite() const { return inf; }
  long finite() const {
    if (inf) throw PreconditionError("valuation of zero has no finite value");
    return v;
  }

  Valuation operator+(const Valuation& o) const {
    if (inf || o.inf) return infinity();
    return of(v + o.v);
  }
  static Valuation min(const Valuation& a, const Valuation& b) {
    if (a.inf) return b;
    if (b.inf) return a;
    return of(a.v < b.v ? a.v : b.v);
  }
  bool operator==(const Valuation& o) const {
    return inf == o.inf && (inf || v == o.v);
  }
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  // Comparisons treat +infinity as larger than every finite value.
  bool operator<(const Valuation& o) const {
    if (inf) return false;
    if (o.inf) return true;
    return v < o.v;
  }
  bool operator>=(const Valuation& o) const { return !(*this < o); }
  bool ge(long x) const { return inf || v >= x; }

  std::string str() const { return inf ? "inf" : std::to_string(v); }
};

template <class K>
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly<K>::one()) {}

  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
  }

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return from_poly(Poly<K>::one()); }
  static RatFunc from_poly(Poly<K> p) {
    RatFunc r;
    r.num_ = std::move(p);
    return r;
  }
  static RatFunc from_coeff(const K& c) { return from_poly(Poly<K>::monomial(0, c)); }

  // t^k for any integer k (k may be negative: t^-1 = pi).
  static RatFunc t_power(long k) {
    if (k >= 0) return from_poly(Poly<K>::monomial(k, K::one()));
    RatFunc r;
    r.num_ = Poly<K>::one();
    r.den_ = Poly<K>::monomial(-k, K::one());
    return r;
  }
  static RatFunc pi(long k = 1) { return t_power(-k); }

  // Sum of c_e * pi^e over the given (e, c) pairs.
  static RatFunc from_pi_terms(const std::vector<std::pair<long, K>>& terms) {
    RatFunc acc;
    for (auto& [e, c] : terms) acc = acc + t_power(-e).scaled(c);
    return acc;
  }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }
  RatFunc inv() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
  }
  RatFunc scaled(const K& c) const {
    RatFunc r;
    r.num_ = num_.scaled(c);
    if (r.num_.is_zero()) return r;
    r.den_ = den_;
    return r;
  }
  RatFunc pow(long e) const {
    RatFunc base = *this;
    if (e < 0) {
      base = inv();
      e = -e;
    }
    RatFunc acc = one();
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Valuation at infinity: nu(x) = deg den - deg num, nu(0) = +infinity.
  Valuation val() const {
    if (is_zero()) return Valuation::infinity();
    return Valuation::of(den_.degree() - num_.degree());
  }
  bool in_O() const { return val().ge(0); }      // valuation ring
  bool in_piO() const { return val().ge(1); }    // maximal ideal
  bool is_O_unit() const { return !is_zero() && val().finite() == 0; }

  // Coefficients of the pi-adic Laurent expansion for exponents
  // nu(x) <= e < order, as (exponent, coefficient) pairs with nonzero
  // coefficients only. The expansion of 0 is empty.
  std::vector<std::pair<long, K>> pi_expansion(long order) const {
    std::vector<std::pair<long, K>> out;
    if (is_zero()) return out;
    long v = val().finite();
    if (v >= order) return out;
    // In the variable pi: num(t) = pi^(-dn) * N(pi), den(t) = pi^(-dd) * D(pi)
    // with N, D power series (polynomials) of nonzero constant term; then
    // x = pi^v * N(pi)/D(pi), and we divide formal power series.
    long dn = num_.degree(), dd = den_.degree();
    long count = order - v;
    std::vector<K> N(static_cast<std::size_t>(count), K::zero());
    std::vector<K> D(static_cast<std::size_t>(count), K::zero());
    for (auto& [e, c] : num_.terms()) {
      long j = dn - e;
      if (j < count) N[static_cast<std::size_t>(j)] = c;
    }
    for (auto& [e, c] : den_.terms()) {
      long j = dd - e;
      if (j < count) D[static_cast<std::size_t>(j)] = c;
    }
    K d0_inv = D[0].inv();
    std::vector<K> c(static_cast<std::size_t>(count), K::zero());
    for (long j = 0; j < count; ++j) {
      K acc = N[static_cast<std::size_t>(j)];
      for (long i = 0; i < j; ++i)
        acc = acc - c[static_cast<std::size_t>(i)] * D[static_cast<std::size_t>(j - i)];
      c[static_cast<std::size_t>(j)] = acc * d0_inv;
      if (!c[static_cast<std::size_t>(j)].is_zero())
        out.push_back({v + j, c[static_cast<std::size_t>(j)]});
    }
    return out;
  }

  // Canonical text form. Laurent polynomials (denominator a power of t) print
  // as descending powers of t; a general quotient prints as (num)/(den).
  std::string str() const {
    if (is_zero()) return "0";
    if (den_.terms().size() == 1) {
      long shift = den_.degree();
      return laurent_str(num_, -shift);
    }
    return "(" + laurent_str(num_, 0) + ")/(" + laurent_str(den_, 0) + ")";
  }

 private:
  Poly<K> num_, den_;

  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly<K>::one();
      return;
    }
    Poly<K> g = Poly<K>::gcd(num_, den_);
    if (!g.is_one()) {
      Poly<K> q, r;
      Poly<K>::divmod(num_, g, q, r);
      num_ = q;
      Poly<K>::divmod(den_, g, q, r);
      den_ = q;
    }
    K lc = den_.leading_coeff();
    if (!lc.is_one()) {
      K inv = lc.inv();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  static std::string coeff_str(const K& c) { return c.str(); }

  static std::string laurent_str(const Poly<K>& p, long shift) {
    std::string out;
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
      long e = it->first + shift;
      std::string cs = coeff_str(it->second);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit_coeff = cs == "1";
      if (e == 0) {
        out += cs;
      } else {
        if (!unit_coeff) out += cs + "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }
};

}  // namespace sl3pong
