#pragma once

#include <string>
#include <vector>

#include "metcomp/errors.hpp"

namespace metcomp {

// Dense integer matrix with overflow-checked arithmetic (BoundsExceeded on
// 64-bit overflow, never silent wraparound).
struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

  long long& at(int i, int j) { return a[(size_t)i * cols + j]; }
  long long at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static IMat identity(int n);
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

IMat imat_mul(const IMat& A, const IMat& B);
bool imat_eq(const IMat& A, const IMat& B);
IMat imat_transpose(const IMat& A);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IMat D;
  IMat U;
  IMat V;
  std::vector<long long> diag;  // nonzero invariant factors, in order
};

SmithForm smith_normal_form(IMat A);

// Basis of { x in Z^cols : A x = 0 }, as matrix columns.
IMat integer_kernel(const IMat& A);

// One integer solution of A x = b, if any.
bool integer_solve(const IMat& A, const std::vector<long long>& b,
                   std::vector<long long>& x);

// Finitely generated abelian group, invariant factor form.
struct AbGroup {
  long long free_rank = 0;
  std::vector<long long> torsion;  // d_1 | d_2 | ..., all >= 2

  bool operator==(const AbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
  // Primary decomposition as (prime, exponent) multiset, sorted.
  std::vector<std::pair<long long, int>> primary() const;
};

AbGroup ab_direct_sum(const AbGroup& a, const AbGroup& b);

// Z^gens / column span of rels (rels has `gens` rows).
AbGroup group_from_presentation(int gens, const IMat& rels);

// Structure of K / I for sublattices I <= K <= Z^n given by generating
// columns. Raises if the containment fails.
AbGroup lattice_quotient(const IMat& K_gens, const IMat& I_gens);

}  // namespace metcomp
