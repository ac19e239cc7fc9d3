#pragma once

// Valuation-ring structure of matrices: membership in GL3(O) and in the
// Iwahori subgroup, invariant-factor exponents, and the two constructive
// decompositions the building layer runs on,
//
//   g = i1 * w^ * i2          (Iwahori-Bruhat; i1, i2 in I, w^ monomial)
//   g = i  * diag(pi^l) * m   (Iwahori-Cartan; i in I, m in GL3(O)),
//
// both exact, no scalar correction needed.
//
// Iwahori convention: I = { g in GL3(O) : entries below the diagonal in piO },
// i.e. upper triangular mod pi. Pivoting in both routines picks an entry of
// globally minimal valuation, bottom-most row first, then left-most column;
// that choice makes every elimination multiplier land in O (ops toward
// earlier rows/columns) or in piO (ops toward later rows) and so keeps the
// accumulated flanks inside I by construction. Correctness is nailed down by
// the reconstruction property tests, not by the pivot order itself.

#include <array>

#include "sl3pong/mat.hpp"
#include "sl3pong/weyl.hpp"

namespace sl3pong {

template <class K>
bool is_in_GL3O(const Mat3<K>& g) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!g.at(i, j).in_O()) return false;
  Valuation d = g.det().val();
  return !d.is_infinite() && d.finite() == 0;
}

template <class K>
bool is_in_iwahori(const Mat3<K>& g) {
  if (!is_in_GL3O(g)) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (!g.at(i, j).in_piO()) return false;
  return true;
}

// Elementary-divisor exponents e1 <= e2 <= e3 over the valuation ring:
// with d_k the minimal valuation over all k x k minors, e1 = d1,
// e2 = d2 - d1, e3 = d3 - d2. Invariant under GL3(O) on both sides.
template <class K>
std::array<long, 3> invariant_exponents(const Mat3<K>& g) {
  Valuation d3 = g.det().val();
  if (d3.is_infinite()) throw SingularMatrix();
  Valuation d1 = Valuation::infinity(), d2 = Valuation::infinity();
  for (auto& m : g.minors(1)) d1 = Valuation::min(d1, m.val());
  for (auto& m : g.minors(2)) d2 = Valuation::min(d2, m.val());
  return {d1.finite(), d2.finite() - d1.finite(), d3.finite() - d2.finite()};
}

template <class K>
struct IwahoriFactorization {
  Mat3<K> i1;
  AffineWeyl w;
  Mat3<K> w_hat;  // monomial representative of w, pure pi-powers
  Mat3<K> i2;
};

namespace detail {

// Global pivot for the elimination schemes: minimal valuation over the
// active submatrix, bottom-most row among minima, then left-most column.
template <class K>
inline void pick_pivot(const Mat3<K>& h, const std::array<bool, 3>& row_active,
                       const std::array<bool, 3>& col_active, int& pr, int& pc) {
  Valuation best = Valuation::infinity();
  pr = -1;
  pc = -1;
  for (int i = 0; i < 3; ++i) {
    if (!row_active[i]) continue;
    for (int j = 0; j < 3; ++j) {
      if (!col_active[j]) continue;
      Valuation v = h.at(i, j).val();
      if (v.is_infinite()) continue;
      if (pr < 0 || v < best || (v == best && (i > pr || (i == pr && j < pc)))) {
        best = v;
        pr = i;
        pc = j;
      }
    }
  }
  if (pr < 0) throw SingularMatrix();
}

}  // namespace detail

// Affine Bruhat decomposition g = i1 * w^ * i2 with i1, i2 in I and w^ the
// pi-power monomial matrix of the (unique) cell of g.
template <class K>
IwahoriFactorization<K> iwahori_factorize(const Mat3<K>& g) {
  if (g.det().is_zero()) throw SingularMatrix();
  Mat3<K> h = g;
  Mat3<K> i1 = Mat3<K>::identity();
  Mat3<K> i2 = Mat3<K>::identity();
  std::array<bool, 3> row_active{true, true, true}, col_active{true, true, true};
  std::array<int, 3> pivot_row_of_col{-1, -1, -1};

  for (int step = 0; step < 3; ++step) {
    int r, c;
    detail::pick_pivot(h, row_active, col_active, r, c);
    const RatFunc<K> pinv = h.at(r, c).inv();
    // Clear column c with row operations from row r: h <- E*h with
    // E = elementary(i, r, m), so i1 absorbs E^-1 on the right.
    for (int i = 0; i < 3; ++i) {
      if (i == r || h.at(i, c).is_zero()) continue;
      RatFunc<K> m = -(h.at(i, c) * pinv);
      h.row_addmul(i, r, m);
      i1.col_addmul(r, i, -m);
    }
    // Clear row r with column operations from column c: h <- h*E with
    // E = elementary(c, j, m), so i2 absorbs E^-1 on the left.
    for (int j = 0; j < 3; ++j) {
      if (j == c || h.at(r, j).is_zero()) continue;
      RatFunc<K> m = -(h.at(r, j) * pinv);
      h.col_addmul(j, c, m);
      i2.row_addmul(c, j, -m);
    }
    row_active[r] = false;
    col_active[c] = false;
    pivot_row_of_col[c] = r;
  }

  // h is now monomial with arbitrary unit leads; peel units into i2.
  std::array<int, 3> perm{};
  std::array<long, 3> shift{};
  Mat3<K> units;
  for (int j = 0; j < 3; ++j) {
    int r = pivot_row_of_col[j];
    perm[j] = r;
    long a = h.at(r, j).val().finite();
    shift[r] = a;
    units.at(j, j) = h.at(r, j) * RatFunc<K>::pi(-a);
  }
  IwahoriFactorization<K> out;
  out.i1 = i1;
  out.w = AffineWeyl::make(perm, shift);
  out.w_hat = monomial_matrix<K>(AffineWeyl{perm, shift});  // uncanonicalized shifts
  out.i2 = units * i2;
  return out;
}

template <class K>
struct IwahoriCartan {
  Mat3<K> i;                    // Iwahori flank
  std::array<long, 3> lambda;   // g = i * diag(pi^lambda) * m
  Mat3<K> m;                    // GL3(O) flank
};

// Iwahori-Cartan decomposition g = i * diag(pi^lambda) * m. The coordinate
// vector lambda is the vertex retraction datum: it is the image of the
// lattice class of g under the retraction onto the standard apartment based
// at the standard chamber.
template <class K>
IwahoriCartan<K> iwahori_cartan_factorize(const Mat3<K>& g) {
  if (g.det().is_zero()) throw SingularMatrix();
  Mat3<K> h = g;
  Mat3<K> i1 = Mat3<K>::identity();
  Mat3<K> m2 = Mat3<K>::identity();
  std::array<bool, 3> row_active{true, true, true}, col_active{true, true, true};
  std::array<int, 3> pivot_col_of_row{-1, -1, -1};

  for (int step = 0; step < 3; ++step) {
    int r, c;
    detail::pick_pivot(h, row_active, col_active, r, c);
    const RatFunc<K> pinv = h.at(r, c).inv();
    // Clear row r with column operations (multipliers in O, any direction).
    for (int j = 0; j < 3; ++j) {
      if (j == c || h.at(r, j).is_zero()) continue;
      RatFunc<K> m = -(h.at(r, j) * pinv);
      h.col_addmul(j, c, m);
      m2.row_addmul(c, j, -m);
    }
    // Clear column c with Iwahori row operations.
    for (int i = 0; i < 3; ++i) {
      if (i == r || h.at(i, c).is_zero()) continue;
      RatFunc<K> m = -(h.at(i, c) * pinv);
      h.row_addmul(i, r, m);
      i1.col_addmul(r, i, -m);
    }
    row_active[r] = false;
    col_active[c] = false;
    pivot_col_of_row[r] = c;
  }

  // h = diag(pi^lambda) * q with q the unit-monomial part, absorbed into m.
  IwahoriCartan<K> out;
  Mat3<K> q;
  for (int r = 0; r < 3; ++r) {
    int c = pivot_col_of_row[r];
    long a = h.at(r, c).val().finite();
    out.lambda[r] = a;
    q.at(r, c) = h.at(r, c) * RatFunc<K>::pi(-a);
  }
  out.i = i1;
  out.m = q * m2;
  return out;
}

}  // namespace sl3pong
