#pragma once

// Exact 3x3 linear algebra over the function field.

#include <array>
#include <string>
#include <vector>

#include "sl3pong/base.hpp"
#include "sl3pong/parse.hpp"
#include "sl3pong/ratfunc.hpp"

namespace sl3pong {

template <class K>
class Mat3 {
 public:
  Mat3() = default;

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.at(i, i) = RatFunc<K>::one();
    return m;
  }

  static Mat3 diag(const RatFunc<K>& a, const RatFunc<K>& b, const RatFunc<K>& c) {
    Mat3 m;
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    return m;
  }

  // diag(pi^u0, pi^u1, pi^u2)
  static Mat3 pi_diag(const std::array<long, 3>& u) {
    return diag(RatFunc<K>::pi(u[0]), RatFunc<K>::pi(u[1]), RatFunc<K>::pi(u[2]));
  }

  // Unit elementary matrix I + c*E_(i,j), i != j.
  static Mat3 elementary(int i, int j, const RatFunc<K>& c) {
    Mat3 m = identity();
    m.at(i, j) = c;
    return m;
  }

  static Mat3 from_parsed(const ParsedMatrix<K>& p) {
    if (p.rows != 3 || p.cols != 3) throw PreconditionError("matrix literal is not 3x3");
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = p.at(i, j);
    return m;
  }

  static Mat3 parse(std::string_view text, const FieldCtx<K>& ctx) {
    return from_parsed(Parser<K>(text, ctx).parse_matrix_literal());
  }

  RatFunc<K>& at(int i, int j) { return e_[static_cast<std::size_t>(i * 3 + j)]; }
  const RatFunc<K>& at(int i, int j) const { return e_[static_cast<std::size_t>(i * 3 + j)]; }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        RatFunc<K> acc;
        for (int k = 0; k < 3; ++k) acc = acc + at(i, k) * o.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }

  Mat3 scaled(const RatFunc<K>& c) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e_[static_cast<std::size_t>(i)] = e_[static_cast<std::size_t>(i)] * c;
    return r;
  }

  RatFunc<K> det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }

  // Minor with row i and column j removed.
  RatFunc<K> minor2(int i, int j) const {
    int r0 = (i == 0) ? 1 : 0, r1 = (i == 2) ? 1 : 2;
    int c0 = (j == 0) ? 1 : 0, c1 = (j == 2) ? 1 : 2;
    return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
  }

  // All k x k minors, k = 1, 2, 3.
  std::vector<RatFunc<K>> minors(int k) const {
    std::vector<RatFunc<K>> out;
    if (k == 1) {
      for (int i = 0; i < 9; ++i) out.push_back(e_[static_cast<std::size_t>(i)]);
    } else if (k == 2) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.push_back(minor2(i, j));
    } else if (k == 3) {
      out.push_back(det());
    } else {
      throw PreconditionError("minor order must be 1, 2 or 3");
    }
    return out;
  }

  Mat3 inverse() const {
    RatFunc<K> d = det();
    if (d.is_zero()) throw SingularMatrix();
    RatFunc<K> dinv = d.inv();
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        RatFunc<K> cof = minor2(j, i);
        if ((i + j) % 2 == 1) cof = -cof;
        r.at(i, j) = cof * dinv;
      }
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j && !at(i, j).is_one()) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    return true;
  }

  bool operator==(const Mat3& o) const {
    for (int i = 0; i < 9; ++i)
      if (e_[static_cast<std::size_t>(i)] != o.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  bool operator!=(const Mat3& o) const { return !(*this == o); }

  // Row_i += c * Row_r  (left multiplication by elementary(i, r, c)).
  void row_addmul(int i, int r, const RatFunc<K>& c) {
    for (int j = 0; j < 3; ++j) at(i, j) = at(i, j) + c * at(r, j);
  }
  // Col_j += c * Col_c  (right multiplication by elementary(c, j, c)).
  void col_addmul(int j, int c, const RatFunc<K>& m) {
    for (int i = 0; i < 3; ++i) at(i, j) = at(i, j) + m * at(i, c);
  }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < 3; ++i) {
      if (i) out += "; ";
      for (int j = 0; j < 3; ++j) {
        if (j) out += ", ";
        out += at(i, j).str();
      }
    }
    return out + "]";
  }

  Mat3 pow(long e) const {
    Mat3 base = *this;
    if (e < 0) {
      base = inverse();
      e = -e;
    }
    Mat3 acc = identity();
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

 private:
  std::array<RatFunc<K>, 9> e_;
};

// Minimum valuation over all entries (infinite for the zero matrix).
template <class K>
Valuation min_entry_val(const Mat3<K>& m) {
  Valuation v = Valuation::infinity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v = Valuation::min(v, m.at(i, j).val());
  return v;
}

}  // namespace sl3pong
