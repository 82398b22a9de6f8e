#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "metcomp/intmat.hpp"

using namespace metcomp;

static IMat make(int r, int c, std::initializer_list<long long> vals) {
  IMat m(r, c);
  int i = 0;
  for (long long v : vals) m.a[i++] = v;
  return m;
}

TEST_CASE("smith normal form: diagonal, divisibility, unimodular factors") {
  IMat A = make(2, 2, {2, 4, 6, 8});
  SmithForm s = smith_normal_form(A);
  REQUIRE(s.diag.size() == 2);
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 4);
  CHECK(s.diag[1] % s.diag[0] == 0);
  CHECK(imat_eq(imat_mul(imat_mul(s.U, A), s.V), s.D));

  // rank-deficient
  IMat B = make(2, 3, {1, 2, 3, 2, 4, 6});
  SmithForm t = smith_normal_form(B);
  REQUIRE(t.diag.size() == 1);
  CHECK(t.diag[0] == 1);
  CHECK(imat_eq(imat_mul(imat_mul(t.U, B), t.V), t.D));

  // zero and empty matrices
  CHECK(smith_normal_form(IMat(2, 2)).diag.empty());
  CHECK(smith_normal_form(IMat(0, 3)).diag.empty());
}

TEST_CASE("integer kernel: basis columns annihilate the matrix") {
  IMat A = make(2, 3, {1, 2, 3, 2, 4, 6});
  IMat K = integer_kernel(A);
  CHECK(K.cols == 2);
  for (int j = 0; j < K.cols; ++j)
    for (int i = 0; i < A.rows; ++i) {
      long long acc = 0;
      for (int k = 0; k < A.cols; ++k) acc += A.at(i, k) * K.at(k, j);
      CHECK(acc == 0);
    }
  CHECK(integer_kernel(IMat::identity(3)).cols == 0);
  CHECK(integer_kernel(IMat(0, 4)).cols == 4);
}

TEST_CASE("integer solve: solvable and unsolvable systems") {
  IMat A = make(2, 2, {2, 0, 0, 3});
  std::vector<long long> x;
  CHECK(integer_solve(A, {4, 9}, x));
  CHECK(x == std::vector<long long>({2, 3}));
  CHECK(!integer_solve(A, {1, 0}, x));  // 2x = 1 has no integer solution

  IMat B = make(1, 2, {2, 3});
  CHECK(integer_solve(B, {1}, x));
  CHECK(2 * x[0] + 3 * x[1] == 1);
}

TEST_CASE("group presentations: invariant factors and primary parts") {
  // Z^2 / <(2,0),(0,3)> = Z/6
  AbGroup g = group_from_presentation(2, make(2, 2, {2, 0, 0, 3}));
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<long long>({6}));
  CHECK(g.str() == "Z/6");
  CHECK(g.primary() ==
        std::vector<std::pair<long long, int>>({{2, 1}, {3, 1}}));

  // Z^2 / <(2,0)> = Z + Z/2
  AbGroup h = group_from_presentation(2, make(2, 1, {2, 0}));
  CHECK(h.free_rank == 1);
  CHECK(h.torsion == std::vector<long long>({2}));
  CHECK(h.str() == "Z + Z/2");

  // no relations
  AbGroup f = group_from_presentation(3, IMat(3, 0));
  CHECK(f.free_rank == 3);
  CHECK(f.torsion.empty());

  CHECK(group_from_presentation(0, IMat(0, 0)).is_zero());
}

TEST_CASE("direct sums merge into invariant factor form") {
  AbGroup z2{0, {2}}, z3{0, {3}}, z4{0, {4}};
  CHECK(ab_direct_sum(z2, z3) == AbGroup{0, {6}});
  CHECK(ab_direct_sum(z2, z4) == AbGroup{0, {2, 4}});
  AbGroup mix = ab_direct_sum(AbGroup{1, {2}}, AbGroup{2, {6}});
  CHECK(mix.free_rank == 3);
  CHECK(mix.torsion == std::vector<long long>({2, 6}));
}

TEST_CASE("lattice quotients") {
  // <e1, 2e2> / <2e1, 2e2> = Z/2
  IMat K = make(2, 2, {1, 0, 0, 2});
  IMat I = make(2, 2, {2, 0, 0, 2});
  CHECK(lattice_quotient(K, I) == AbGroup{0, {2}});

  // K / K = 0
  CHECK(lattice_quotient(K, K).is_zero());

  // <e1, e2> / <2e1, 6e2> = Z/2 + Z/6
  AbGroup q = lattice_quotient(IMat::identity(2), make(2, 2, {2, 0, 0, 6}));
  CHECK(q.torsion == std::vector<long long>({2, 6}));

  // non-containment raises
  CHECK_THROWS_AS(lattice_quotient(make(2, 1, {2, 0}), make(2, 1, {1, 1})),
                  MathError);
}

TEST_CASE("checked arithmetic rejects 64-bit overflow") {
  CHECK(checked_add(1, 2) == 3);
  CHECK(checked_mul(-4, 5) == -20);
  long long big = 5000000000000000000LL;
  CHECK_THROWS_AS(checked_add(big, big), MathError);
  CHECK_THROWS_AS(checked_mul(big, 3), MathError);
}
