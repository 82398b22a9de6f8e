#include "metcomp/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

namespace metcomp {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    raise(Err::BoundsExceeded, "integer addition overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    raise(Err::BoundsExceeded, "integer multiplication overflow");
  return r;
}

IMat IMat::identity(int n) {
  IMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IMat imat_mul(const IMat& A, const IMat& B) {
  require(A.cols == B.rows, Err::BoundsExceeded, "matrix shape mismatch");
  IMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = checked_add(C.at(i, j), checked_mul(A.at(i, k), B.at(k, j)));
    }
  return C;
}

bool imat_eq(const IMat& A, const IMat& B) {
  return A.rows == B.rows && A.cols == B.cols && A.a == B.a;
}

IMat imat_transpose(const IMat& A) {
  IMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

namespace {

void row_swap(IMat& M, int i, int j) {
  for (int c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
}
void col_swap(IMat& M, int i, int j) {
  for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
}
// row i += f * row j
void row_axpy(IMat& M, int i, int j, long long f) {
  for (int c = 0; c < M.cols; ++c)
    M.at(i, c) = checked_add(M.at(i, c), checked_mul(f, M.at(j, c)));
}
void col_axpy(IMat& M, int i, int j, long long f) {
  for (int r = 0; r < M.rows; ++r)
    M.at(r, i) = checked_add(M.at(r, i), checked_mul(f, M.at(r, j)));
}
void row_neg(IMat& M, int i) {
  for (int c = 0; c < M.cols; ++c) M.at(i, c) = -M.at(i, c);
}

}  // namespace

SmithForm smith_normal_form(IMat A) {
  SmithForm sf;
  sf.U = IMat::identity(A.rows);
  sf.V = IMat::identity(A.cols);
  int t = 0;
  int lim = std::min(A.rows, A.cols);
  while (t < lim) {
    // find a nonzero entry in the remaining block, smallest magnitude first
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < A.rows; ++i)
      for (int j = t; j < A.cols; ++j) {
        long long v = std::llabs(A.at(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      row_swap(A, pi, t);
      row_swap(sf.U, pi, t);
    }
    if (pj != t) {
      col_swap(A, pj, t);
      col_swap(sf.V, pj, t);
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < A.rows; ++i) {
        if (A.at(i, t) == 0) continue;
        long long qd = A.at(i, t) / A.at(t, t);
        row_axpy(A, i, t, -qd);
        row_axpy(sf.U, i, t, -qd);
        if (A.at(i, t) != 0) {
          // remainder is strictly smaller; swap it into the pivot and retry
          row_swap(A, i, t);
          row_swap(sf.U, i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < A.cols; ++j) {
        if (A.at(t, j) == 0) continue;
        long long qd = A.at(t, j) / A.at(t, t);
        col_axpy(A, j, t, -qd);
        col_axpy(sf.V, j, t, -qd);
        if (A.at(t, j) != 0) {
          col_swap(A, j, t);
          col_swap(sf.V, j, t);
          dirty = true;
        }
      }
    }
    // pivot must divide every remaining entry; if not, fold the offender in
    bool retry = false;
    for (int i = t + 1; i < A.rows && !retry; ++i)
      for (int j = t + 1; j < A.cols && !retry; ++j)
        if (A.at(i, j) % A.at(t, t) != 0) {
          row_axpy(A, t, i, 1);
          row_axpy(sf.U, t, i, 1);
          retry = true;
        }
    if (retry) continue;
    if (A.at(t, t) < 0) {
      row_neg(A, t);
      row_neg(sf.U, t);
    }
    ++t;
  }
  sf.D = A;
  for (int i = 0; i < lim; ++i)
    if (A.at(i, i) != 0) sf.diag.push_back(A.at(i, i));
  return sf;
}

IMat integer_kernel(const IMat& A) {
  // U A V = D, so A (V e_j) = U^{-1} D e_j; kernel basis = columns of V past
  // the nonzero part of D.
  SmithForm sf = smith_normal_form(A);
  int r = (int)sf.diag.size();
  IMat K(A.cols, A.cols - r);
  for (int j = r; j < A.cols; ++j)
    for (int i = 0; i < A.cols; ++i) K.at(i, j - r) = sf.V.at(i, j);
  return K;
}

bool integer_solve(const IMat& A, const std::vector<long long>& b,
                   std::vector<long long>& x) {
  SmithForm sf = smith_normal_form(A);
  std::vector<long long> ub(A.rows, 0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.rows; ++j)
      ub[i] = checked_add(ub[i], checked_mul(sf.U.at(i, j), b[j]));
  std::vector<long long> y(A.cols, 0);
  int r = (int)sf.diag.size();
  for (int i = 0; i < A.rows; ++i) {
    if (i < r) {
      if (ub[i] % sf.diag[i] != 0) return false;
      y[i] = ub[i] / sf.diag[i];
    } else if (ub[i] != 0) {
      return false;
    }
  }
  x.assign(A.cols, 0);
  for (int i = 0; i < A.cols; ++i)
    for (int j = 0; j < A.cols; ++j)
      x[i] = checked_add(x[i], checked_mul(sf.V.at(i, j), y[j]));
  return true;
}

std::string AbGroup::str() const {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (long long d : torsion) append("Z/" + std::to_string(d));
  return s.empty() ? "0" : s;
}

std::vector<std::pair<long long, int>> AbGroup::primary() const {
  std::vector<std::pair<long long, int>> out;
  for (long long d : torsion) {
    long long m = d;
    for (long long p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbGroup ab_direct_sum(const AbGroup& a, const AbGroup& b) {
  AbGroup r;
  r.free_rank = a.free_rank + b.free_rank;
  // rebuild invariant factors from the combined primary decomposition
  auto pa = a.primary(), pb = b.primary();
  pa.insert(pa.end(), pb.begin(), pb.end());
  std::map<long long, std::vector<int>> by_prime;
  for (auto [p, e] : pa) by_prime[p].push_back(e);
  size_t layers = 0;
  for (auto& [p, es] : by_prime) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    layers = std::max(layers, es.size());
  }
  std::vector<long long> factors;
  for (size_t i = 0; i < layers; ++i) {
    long long d = 1;
    for (auto& [p, es] : by_prime)
      if (i < es.size())
        for (int t = 0; t < es[i]; ++t) d = checked_mul(d, p);
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  r.torsion = std::move(factors);
  return r;
}

AbGroup group_from_presentation(int gens, const IMat& rels) {
  require(rels.rows == gens || rels.cols == 0, Err::BoundsExceeded,
          "presentation shape mismatch");
  AbGroup g;
  if (rels.cols == 0) {
    g.free_rank = gens;
    return g;
  }
  SmithForm sf = smith_normal_form(rels);
  g.free_rank = gens - (long long)sf.diag.size();
  for (long long d : sf.diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbGroup lattice_quotient(const IMat& K_gens, const IMat& I_gens) {
  int n = K_gens.rows;
  require(I_gens.rows == n, Err::BoundsExceeded, "ambient rank mismatch");
  // basis of im(K_gens) from its Smith form: A = U^{-1} D V^{-1}, so the
  // columns d_i * (U^{-1} e_i) form a basis; coordinates of any v in im(A)
  // are ((U v)_i / d_i).
  SmithForm sf = smith_normal_form(K_gens);
  int r = (int)sf.diag.size();
  IMat coords(r, I_gens.cols);
  for (int c = 0; c < I_gens.cols; ++c) {
    std::vector<long long> uv(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        uv[i] = checked_add(uv[i], checked_mul(sf.U.at(i, j), I_gens.at(j, c)));
    for (int i = 0; i < n; ++i) {
      if (i < r) {
        require(uv[i] % sf.diag[i] == 0, Err::BoundsExceeded,
                "generators do not lie in the target lattice");
        coords.at(i, c) = uv[i] / sf.diag[i];
      } else {
        require(uv[i] == 0, Err::BoundsExceeded,
                "generators do not lie in the target lattice");
      }
    }
  }
  return group_from_presentation(r, coords);
}

}  // namespace metcomp
