#pragma once

// Sparse univariate polynomials over an exact coefficient field, stored as
// (exponent, coefficient) pairs in ascending exponent order with no zero
// coefficients. Exponents are non-negative; Laurent behaviour lives in
// RatFunc, which keeps a polynomial numerator and denominator.

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>
#include <vector>

#include "sl3pong/base.hpp"

namespace sl3pong {

template <class K>
class Poly {
 public:
  using Term = std::pair<long, K>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly one() { return monomial(0, K::one()); }
  static Poly monomial(long exp, const K& c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({exp, c});
    return p;
  }

  static Poly from_terms(std::vector<Term> terms) {
    std::map<long, K> acc;
    for (auto& [e, c] : terms) {
      auto it = acc.find(e);
      if (it == acc.end()) acc.emplace(e, c);
      else it->second += c;
    }
    Poly p;
    for (auto& [e, c] : acc)
      if (!c.is_zero()) p.t_.push_back({e, c});
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second.is_one(); }

  // Degree of the zero polynomial is not represented; callers check is_zero().
  long degree() const {
    assert(!t_.empty());
    return t_.back().first;
  }
  long low_exponent() const {
    assert(!t_.empty());
    return t_.front().first;
  }
  const K& leading_coeff() const {
    assert(!t_.empty());
    return t_.back().second;
  }
  K coeff(long exp) const {
    for (auto& [e, c] : t_)
      if (e == exp) return c;
    return K::zero();
  }

  const std::vector<Term>& terms() const { return t_; }

  Poly operator-() const {
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& [e, c] : t_) r.t_.push_back({e, -c});
    return r;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
      if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
        r.t_.push_back(t_[i++]);
      } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
        r.t_.push_back(o.t_[j++]);
      } else {
        K c = t_[i].second + o.t_[j].second;
        if (!c.is_zero()) r.t_.push_back({t_[i].first, c});
        ++i; ++j;
      }
    }
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::map<long, K> acc;
    for (auto& [e1, c1] : t_)
      for (auto& [e2, c2] : o.t_) {
        K prod = c1 * c2;
        auto it = acc.find(e1 + e2);
        if (it == acc.end()) acc.emplace(e1 + e2, prod);
        else it->second += prod;
      }
    Poly r;
    for (auto& [e, c] : acc)
      if (!c.is_zero()) r.t_.push_back({e, c});
    return r;
  }

  Poly scaled(const K& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (auto& [e, k] : t_) {
      K prod = k * c;
      if (!prod.is_zero()) r.t_.push_back({e, prod});
    }
    return r;
  }

  Poly shifted(long dexp) const {
    Poly r = *this;
    for (auto& [e, c] : r.t_) e += dexp;
    return r;
  }

  // Euclidean division by a nonzero divisor: *this = q*d + r, deg r < deg d.
  static void divmod(const Poly& a, const Poly& d, Poly& q, Poly& r) {
    if (d.is_zero()) throw DivisionByZero();
    q = Poly();
    r = a;
    K lc_inv = d.leading_coeff().inv();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      long e = r.degree() - d.degree();
      K c = r.leading_coeff() * lc_inv;
      Poly t = Poly::monomial(e, c);
      q = q + t;
      r = r - d * t;
    }
  }

  // Monic greatest common divisor; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading_coeff().inv());
  }

  K eval(const K& x) const {
    // Horner on the sparse ladder.
    K acc = K::zero();
    long prev = -1;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (prev >= 0) {
        for (long j = it->first; j < prev; ++j) acc = acc * x;
      }
      acc = acc + it->second;
      prev = it->first;
    }
    if (!t_.empty())
      for (long j = 0; j < t_.front().first; ++j) acc = acc * x;
    return acc;
  }

  bool operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (t_[i].first != o.t_[i].first || !(t_[i].second == o.t_[i].second)) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  std::vector<Term> t_;
};

}  // namespace sl3pong
