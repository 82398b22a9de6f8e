#pragma once

#include <optional>
#include <vector>

#include "metcomp/gf.hpp"
#include "metcomp/rational.hpp"

namespace metcomp {

// Field adapters share the interface used by Matrix<F>:
//   Elem, zero(), one(), add, sub, mul, div, neg, is_zero, eq, str.

struct RatField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.str(); }
};

struct GFField {
  const GFTable* t;
  using Elem = long long;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return t->add(a, b); }
  Elem sub(Elem a, Elem b) const { return t->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return t->mul(a, b); }
  Elem div(Elem a, Elem b) const { return t->div(a, b); }
  Elem neg(Elem a) const { return t->neg(a); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return t->elem_str(a); }
};

template <class F>
struct Matrix {
  using Elem = typename F::Elem;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(int r, int c, Elem fill) : rows(r), cols(c), a((size_t)r * c, fill) {}

  Elem& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Elem& at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

template <class F>
Matrix<F> mat_zero(const F& f, int r, int c) {
  return Matrix<F>(r, c, f.zero());
}

template <class F>
Matrix<F> mat_identity(const F& f, int n) {
  Matrix<F> m(n, n, f.zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
  Matrix<F> C(A.rows, B.cols, f.zero());
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (f.is_zero(A.at(i, k))) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = f.add(C.at(i, j), f.mul(A.at(i, k), B.at(k, j)));
    }
  return C;
}

template <class F>
Matrix<F> mat_transpose(const F&, const Matrix<F>& A) {
  Matrix<F> T;
  T.rows = A.cols;
  T.cols = A.rows;
  T.a.resize(A.a.size());
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

template <class F>
bool mat_eq(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
  if (A.rows != B.rows || A.cols != B.cols) return false;
  for (size_t i = 0; i < A.a.size(); ++i)
    if (!f.eq(A.a[i], B.a[i])) return false;
  return true;
}

// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<int> rref(const F& f, Matrix<F>& M) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < M.cols && row < M.rows; ++col) {
    int sel = -1;
    for (int i = row; i < M.rows; ++i)
      if (!f.is_zero(M.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(row, j));
    auto piv = M.at(row, col);
    for (int j = 0; j < M.cols; ++j) M.at(row, j) = f.div(M.at(row, j), piv);
    for (int i = 0; i < M.rows; ++i) {
      if (i == row || f.is_zero(M.at(i, col))) continue;
      auto c = M.at(i, col);
      for (int j = 0; j < M.cols; ++j)
        M.at(i, j) = f.sub(M.at(i, j), f.mul(c, M.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int mat_rank(const F& f, Matrix<F> M) {
  return (int)rref(f, M).size();
}

// Columns of the result form a basis of { x : A x = 0 }.
template <class F>
Matrix<F> nullspace(const F& f, Matrix<F> A) {
  auto pivots = rref(f, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<F> N(A.cols, (int)free_cols.size(), f.zero());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    N.at(fc, (int)k) = f.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      N.at(pivots[r], (int)k) = f.neg(A.at((int)r, fc));
  }
  return N;
}

// One solution of A x = b, if any.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, const Matrix<F>& A,
                                                   const std::vector<typename F::Elem>& b) {
  Matrix<F> M(A.rows, A.cols + 1, f.zero());
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols) = b[i];
  }
  auto pivots = rref(f, M);
  for (int c : pivots)
    if (c == A.cols) return std::nullopt;
  std::vector<typename F::Elem> x(A.cols, f.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M.at((int)r, A.cols);
  return x;
}

}  // namespace metcomp
