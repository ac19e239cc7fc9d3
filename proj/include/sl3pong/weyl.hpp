#pragma once

// The extended affine Weyl group of type A2~ for our monomial matrices:
// elements are pairs (perm, shift) standing for the class of the monomial
// matrix diag(pi^shift) * P_perm modulo scalar pi-powers. The permutation
// matrix P_perm sends e_j to e_(perm(j)); scalars act by adding (1,1,1) to
// the shift, so the canonical representative has shift sum in {0,1,2}.
//
// Composition: (s,u)(t,v) = (st, u + v o s^-1), acting on apartment
// coordinates by x |-> u + x o perm^-1.

#include <array>
#include <cstdlib>
#include <string>

#include "sl3pong/mat.hpp"

namespace sl3pong {

struct AffineWeyl {
  std::array<int, 3> perm{0, 1, 2};    // j -> perm[j]
  std::array<long, 3> shift{0, 0, 0};  // canonical: sum in {0,1,2}

  static AffineWeyl identity() { return {}; }

  static AffineWeyl make(std::array<int, 3> p, std::array<long, 3> u) {
    AffineWeyl w{p, u};
    w.canonicalize();
    return w;
  }

  static AffineWeyl translation(std::array<long, 3> u) { return make({0, 1, 2}, u); }

  // Simple reflections for the standard chamber of the Iwahori convention:
  // s1 and s2 are the transpositions (0 1) and (1 2); s0 is the affine
  // reflection through the wall {x0 - x2 = -1}.
  static AffineWeyl simple(int i) {
    switch (i) {
      case 1: return make({1, 0, 2}, {0, 0, 0});
      case 2: return make({0, 2, 1}, {0, 0, 0});
      default: return make({2, 1, 0}, {-1, 0, 1});
    }
  }

  void canonicalize() {
    long s = shift[0] + shift[1] + shift[2];
    long r = ((s % 3) + 3) % 3;
    long c = (s - r) / 3;
    for (auto& x : shift) x -= c;
  }

  bool is_identity() const {
    return perm == std::array<int, 3>{0, 1, 2} && shift == std::array<long, 3>{0, 0, 0};
  }
  bool is_translation() const { return perm == std::array<int, 3>{0, 1, 2}; }

  std::array<int, 3> perm_inv() const {
    std::array<int, 3> q{};
    for (int j = 0; j < 3; ++j) q[perm[j]] = j;
    return q;
  }

  AffineWeyl operator*(const AffineWeyl& o) const {
    std::array<int, 3> p{};
    for (int j = 0; j < 3; ++j) p[j] = perm[o.perm[j]];
    std::array<int, 3> inv = perm_inv();
    std::array<long, 3> u{};
    for (int i = 0; i < 3; ++i) u[i] = shift[i] + o.shift[inv[i]];
    return make(p, u);
  }

  AffineWeyl inverse() const {
    std::array<int, 3> inv = perm_inv();
    std::array<long, 3> u{};
    for (int i = 0; i < 3; ++i) u[i] = -shift[perm[i]];
    return make(inv, u);
  }

  // Action on apartment coordinate classes.
  std::array<long, 3> act(const std::array<long, 3>& x) const {
    std::array<int, 3> inv = perm_inv();
    std::array<long, 3> y{};
    for (int i = 0; i < 3; ++i) y[i] = shift[i] + x[inv[i]];
    return y;
  }

  // Gallery length: the number of affine walls separating the fundamental
  // alcove from its image, summed over the positive roots e_i - e_j (i < j):
  //   l(w) = sum |<shift, e_i - e_j> + [perm^-1 inverts (i, j)]|.
  long length() const {
    std::array<int, 3> inv = perm_inv();
    long l = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        long x = shift[i] - shift[j] + (inv[i] > inv[j] ? 1 : 0);
        l += std::labs(x);
      }
    return l;
  }

  bool operator==(const AffineWeyl& o) const { return perm == o.perm && shift == o.shift; }
  bool operator!=(const AffineWeyl& o) const { return !(*this == o); }
  bool operator<(const AffineWeyl& o) const {
    if (perm != o.perm) return perm < o.perm;
    return shift < o.shift;
  }

  std::string str() const {
    std::string s = "perm(";
    for (int j = 0; j < 3; ++j) s += std::to_string(perm[j]);
    s += ") shift(";
    for (int i = 0; i < 3; ++i) {
      if (i) s += ",";
      s += std::to_string(shift[i]);
    }
    return s + ")";
  }
};

// The monomial representative diag(pi^shift) * P_perm.
template <class K>
Mat3<K> monomial_matrix(const AffineWeyl& w) {
  Mat3<K> m;
  for (int j = 0; j < 3; ++j) m.at(w.perm[j], j) = RatFunc<K>::pi(w.shift[w.perm[j]]);
  return m;
}

}  // namespace sl3pong
