#pragma once

#include <map>
#include <type_traits>
#include <vector>

#include "metcomp/indec.hpp"
#include "metcomp/linalg.hpp"

namespace metcomp {

// Explicit Kronecker representation: two matrices A, B : V2 -> V1 for the
// quiver with two arrows from vertex 2 to vertex 1. A has shape d1 x d2.
template <class F>
struct KronRep {
  Matrix<F> A, B;
  int d2() const { return A.cols; }
  int d1() const { return A.rows; }
};

// Polynomial model: Preprojective(n) is (forms of degree n-1, forms of
// degree n) with A = multiplication by x, B = multiplication by y, basis
// x^deg, x^{deg-1}y, ..., y^deg.
template <class F>
KronRep<F> canonical_rep(const F& f, const Indecomposable& m) {
  KronRep<F> r;
  if (m.kind == IndKind::Preprojective) {
    int n = (int)m.n;
    r.A = mat_zero(f, n + 1, n);
    r.B = mat_zero(f, n + 1, n);
    for (int j = 0; j < n; ++j) {
      r.A.at(j, j) = f.one();
      r.B.at(j + 1, j) = f.one();
    }
    return r;
  }
  if (m.kind == IndKind::Preinjective) {
    int n = (int)m.n;
    r.A = mat_zero(f, n, n + 1);
    r.B = mat_zero(f, n, n + 1);
    for (int j = 0; j < n; ++j) {
      r.A.at(j, j) = f.one();
      r.B.at(j, j + 1) = f.one();
    }
    return r;
  }
  require(m.kind == IndKind::Regular, Err::WrongRing,
          "not a Kronecker module shape");
  int d = (int)m.qlen;
  r.A = mat_zero(f, d, d);
  r.B = mat_zero(f, d, d);
  if (m.point.kind == ProjPoint::Kind::ZeroOne) {
    // (0:1): A nilpotent Jordan, B identity
    for (int i = 0; i < d; ++i) {
      r.B.at(i, i) = f.one();
      if (i + 1 < d) r.A.at(i, i + 1) = f.one();
    }
    return r;
  }
  typename F::Elem c;
  if constexpr (std::is_same_v<F, RatField>) {
    require(m.point.kind == ProjPoint::Kind::RatC, Err::UnsupportedField,
            "point " + m.point.str() + " has no rational coordinates");
    c = m.point.crat;
  } else {
    require(m.point.kind == ProjPoint::Kind::GFC, Err::UnsupportedField,
            "point " + m.point.str() + " has no finite-field coordinates");
    c = m.point.cgf;
  }
  for (int i = 0; i < d; ++i) {
    r.A.at(i, i) = f.one();
    r.B.at(i, i) = c;
    if (i + 1 < d) r.B.at(i, i + 1) = f.one();
  }
  return r;
}

template <class F>
KronRep<F> direct_sum(const F& f, const std::vector<KronRep<F>>& parts) {
  int d2 = 0, d1 = 0;
  for (const auto& p : parts) {
    d2 += p.d2();
    d1 += p.d1();
  }
  KronRep<F> r;
  r.A = mat_zero(f, d1, d2);
  r.B = mat_zero(f, d1, d2);
  int r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.d1(); ++i)
      for (int j = 0; j < p.d2(); ++j) {
        r.A.at(r0 + i, c0 + j) = p.A.at(i, j);
        r.B.at(r0 + i, c0 + j) = p.B.at(i, j);
      }
    r0 += p.d1();
    c0 += p.d2();
  }
  return r;
}

template <class F>
bool intertwines(const F& f, const KronRep<F>& src, const KronRep<F>& tgt,
                 const Matrix<F>& f2, const Matrix<F>& f1) {
  if (f2.rows != tgt.d2() || f2.cols != src.d2()) return false;
  if (f1.rows != tgt.d1() || f1.cols != src.d1()) return false;
  return mat_eq(f, mat_mul(f, f1, src.A), mat_mul(f, tgt.A, f2)) &&
         mat_eq(f, mat_mul(f, f1, src.B), mat_mul(f, tgt.B, f2));
}

// dim Hom(X, Y) = nullity of the intertwining system
//   f1 A_X - A_Y f2 = 0,  f1 B_X - B_Y f2 = 0
// in the unknowns (entries of f2, entries of f1).
template <class F>
long long hom_dim_reps(const F& f, const KronRep<F>& X, const KronRep<F>& Y) {
  int n2 = Y.d2() * X.d2();
  int n1 = Y.d1() * X.d1();
  int rows = 2 * Y.d1() * X.d2();
  Matrix<F> S = mat_zero(f, rows, n2 + n1);
  auto idx2 = [&](int i, int j) { return i * X.d2() + j; };        // f2[i][j]
  auto idx1 = [&](int i, int j) { return n2 + i * X.d1() + j; };   // f1[i][j]
  int eq = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const Matrix<F>& MX = pass == 0 ? X.A : X.B;
    const Matrix<F>& MY = pass == 0 ? Y.A : Y.B;
    for (int i = 0; i < Y.d1(); ++i)
      for (int j = 0; j < X.d2(); ++j) {
        // (f1 MX)_{ij} - (MY f2)_{ij} = 0
        for (int k = 0; k < X.d1(); ++k)
          S.at(eq, idx1(i, k)) = f.add(S.at(eq, idx1(i, k)), MX.at(k, j));
        for (int k = 0; k < Y.d2(); ++k)
          S.at(eq, idx2(k, j)) = f.sub(S.at(eq, idx2(k, j)), MY.at(i, k));
        ++eq;
      }
  }
  return (n2 + n1) - mat_rank(f, S);
}

// Reflection at the sink then at the source; acts as the AR translate on
// representations without projective summands and kills projectives.
template <class F>
KronRep<F> coxeter_plus(const F& f, const KronRep<F>& M) {
  int r2 = M.d2(), r1 = M.d1();
  Matrix<F> phi = mat_zero(f, r1, 2 * r2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j) {
      phi.at(i, j) = M.A.at(i, j);
      phi.at(i, r2 + j) = M.B.at(i, j);
    }
  Matrix<F> W = nullspace(f, phi);  // 2 r2 x w
  int w = W.cols;
  Matrix<F> C = mat_zero(f, r2, w), D = mat_zero(f, r2, w);
  for (int i = 0; i < r2; ++i)
    for (int j = 0; j < w; ++j) {
      C.at(i, j) = W.at(i, j);
      D.at(i, j) = W.at(r2 + i, j);
    }
  Matrix<F> psi = mat_zero(f, r2, 2 * w);
  for (int i = 0; i < r2; ++i)
    for (int j = 0; j < w; ++j) {
      psi.at(i, j) = C.at(i, j);
      psi.at(i, w + j) = D.at(i, j);
    }
  Matrix<F> V = nullspace(f, psi);  // 2 w x v
  int v = V.cols;
  KronRep<F> out;
  out.A = mat_zero(f, w, v);
  out.B = mat_zero(f, w, v);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < v; ++j) {
      out.A.at(i, j) = V.at(i, j);
      out.B.at(i, j) = V.at(w + i, j);
    }
  return out;
}

namespace kron_detail {

// rows of the result form a basis of the left null space: Q T = 0
template <class F>
Matrix<F> left_null(const F& f, const Matrix<F>& T) {
  return mat_transpose(f, nullspace(f, mat_transpose(f, T)));
}

}  // namespace kron_detail

template <class F>
KronRep<F> coxeter_minus(const F& f, const KronRep<F>& M) {
  int r2 = M.d2(), r1 = M.d1();
  Matrix<F> theta = mat_zero(f, 2 * r1, r2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j) {
      theta.at(i, j) = M.A.at(i, j);
      theta.at(r1 + i, j) = M.B.at(i, j);
    }
  Matrix<F> Q = kron_detail::left_null(f, theta);  // c x 2 r1
  int c = Q.rows;
  Matrix<F> Cm = mat_zero(f, c, r1), Dm = mat_zero(f, c, r1);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < r1; ++j) {
      Cm.at(i, j) = Q.at(i, j);
      Dm.at(i, j) = Q.at(i, r1 + j);
    }
  Matrix<F> theta2 = mat_zero(f, 2 * c, r1);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < r1; ++j) {
      theta2.at(i, j) = Cm.at(i, j);
      theta2.at(c + i, j) = Dm.at(i, j);
    }
  Matrix<F> Q2 = kron_detail::left_null(f, theta2);  // c2 x 2c
  int c2 = Q2.rows;
  KronRep<F> out;
  out.A = mat_zero(f, c2, c);
  out.B = mat_zero(f, c2, c);
  for (int i = 0; i < c2; ++i)
    for (int j = 0; j < c; ++j) {
      out.A.at(i, j) = Q2.at(i, j);
      out.B.at(i, j) = Q2.at(i, c + j);
    }
  return out;
}

template <class F>
typename F::Elem det(const F& f, Matrix<F> M) {
  require(M.rows == M.cols, Err::InvalidDescriptor, "determinant of non-square");
  typename F::Elem d = f.one();
  for (int col = 0; col < M.cols; ++col) {
    int sel = -1;
    for (int i = col; i < M.rows; ++i)
      if (!f.is_zero(M.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) return f.zero();
    if (sel != col) {
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(col, j));
      d = f.neg(d);
    }
    d = f.mul(d, M.at(col, col));
    for (int i = col + 1; i < M.rows; ++i) {
      if (f.is_zero(M.at(i, col))) continue;
      auto c = f.div(M.at(i, col), M.at(col, col));
      for (int j = col; j < M.cols; ++j)
        M.at(i, j) = f.sub(M.at(i, j), f.mul(c, M.at(col, j)));
    }
  }
  return d;
}

// Rational roots of a polynomial with rational coefficients (index =
// degree), with multiplicities; also reports the degree left after removing
// them.
struct RootReport {
  std::map<Rat, int> roots;
  int remainder_degree = 0;
};
RootReport rational_roots(std::vector<Rat> coeffs);

// The tube points supporting the regular pencil (square A, B), over Q.
// Raises NotSplitOverField when an eigenvalue is irrational.
std::vector<ProjPoint> pencil_support_rational(const KronRep<RatField>& reg);

// Decomposition of an explicit representation into catalog indecomposables,
// by Hom-dimension sieves against canonical representations. Over Q the
// regular support points come from reflection-stripping plus the pencil
// characteristic polynomial; over a finite field all points are tested.
template <class F>
std::vector<Indecomposable> decompose_rep(const F& f, const FieldDescriptor& fd,
                                          const KronRep<F>& M);

std::vector<Indecomposable> decompose_rational(const KronRep<RatField>& M);
std::vector<Indecomposable> decompose_finite(const FieldDescriptor& fd,
                                             const KronRep<GFField>& M);

// Coefficients of the linear form -b x + a y vanishing at lambda = (a : b);
// multiplication by it is the inclusion P_{n-1} -> P_n with cokernel
// Regular(lambda, 1).
template <class F>
std::pair<typename F::Elem, typename F::Elem> linear_form_coeffs(
    const F& f, const ProjPoint& lambda) {
  // lambda = (a : b) normalized; the form is alpha x + beta y with
  // (alpha, beta) = (-b, a)
  if (lambda.kind == ProjPoint::Kind::ZeroOne)
    return {f.neg(f.one()), f.zero()};  // (0:1): -x
  if constexpr (std::is_same_v<F, RatField>) {
    require(lambda.kind == ProjPoint::Kind::RatC, Err::UnsupportedField,
            "point " + lambda.str() + " has no rational coordinates");
    return {f.neg(lambda.crat), f.one()};  // (1:c): -c x + y
  } else {
    require(lambda.kind == ProjPoint::Kind::GFC, Err::UnsupportedField,
            "point " + lambda.str() + " has no finite-field coordinates");
    return {f.neg(lambda.cgf), f.one()};
  }
}

// Matrices of multiplication by alpha x + beta y from degree-(d-1) forms to
// degree-d forms (basis x^d, x^{d-1} y, ..., y^d): shape (d+1) x d.
template <class F>
Matrix<F> mult_form_matrix(const F& f, typename F::Elem alpha,
                           typename F::Elem beta, int d) {
  Matrix<F> m = mat_zero(f, d + 1, d);
  for (int j = 0; j < d; ++j) {
    m.at(j, j) = f.add(m.at(j, j), alpha);
    m.at(j + 1, j) = f.add(m.at(j + 1, j), beta);
  }
  return m;
}

}  // namespace metcomp
