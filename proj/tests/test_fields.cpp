#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "metcomp/field.hpp"
#include "metcomp/linalg.hpp"

using namespace metcomp;

TEST_CASE("finite field tables: field axioms on every element") {
  for (long long q : {2LL, 3LL, 4LL, 5LL, 8LL, 9LL}) {
    const GFTable& t = gf_table_for_order(q);
    CHECK(t.q() == q);
    for (long long a = 0; a < q; ++a) {
      CHECK(t.add(a, 0) == a);
      CHECK(t.mul(a, 1) == a);
      CHECK(t.add(a, t.neg(a)) == 0);
      if (a != 0) CHECK(t.mul(a, t.inv(a)) == 1);
      for (long long b = 0; b < q; ++b) {
        CHECK(t.add(a, b) == t.add(b, a));
        CHECK(t.mul(a, b) == t.mul(b, a));
        for (long long c = 0; c < q; ++c)
          CHECK(t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c)));
      }
    }
  }
  CHECK_THROWS_AS(FieldDescriptor::finite(6), MathError);
  CHECK_THROWS_AS(FieldDescriptor::finite(1), MathError);
}

TEST_CASE("GF(4) is not mod-4 arithmetic") {
  const GFTable& t = gf_table_for_order(4);
  CHECK(t.p() == 2);
  CHECK(t.k() == 2);
  CHECK(t.add(1, 1) == 0);          // characteristic 2
  CHECK(t.mul(2, 2) != 0);          // x^2 != 0: the table is a field
  CHECK(t.mul(t.mul(2, 2), 2) != t.mul(2, 2));
}

TEST_CASE("rational field arithmetic") {
  RatField f;
  Rat half(1, 2), third(1, 3);
  CHECK(f.add(half, third) == Rat(5, 6));
  CHECK(f.mul(half, third) == Rat(1, 6));
  CHECK(f.div(half, third) == Rat(3, 2));
  CHECK(f.is_zero(f.sub(half, half)));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
}

TEST_CASE("rref, rank, nullspace, solve over the rationals") {
  RatField f;
  Matrix<RatField> A(2, 3, f.zero());
  // rows (1 2 3), (2 4 6): rank 1
  A.at(0, 0) = Rat(1); A.at(0, 1) = Rat(2); A.at(0, 2) = Rat(3);
  A.at(1, 0) = Rat(2); A.at(1, 1) = Rat(4); A.at(1, 2) = Rat(6);
  CHECK(mat_rank(f, A) == 1);
  Matrix<RatField> N = nullspace(f, A);
  CHECK(N.cols == 2);
  Matrix<RatField> Z = mat_mul(f, A, N);
  CHECK(mat_eq(f, Z, mat_zero(f, 2, 2)));

  Matrix<RatField> B(2, 2, f.zero());
  B.at(0, 0) = Rat(2); B.at(0, 1) = Rat(1);
  B.at(1, 0) = Rat(1); B.at(1, 1) = Rat(1);
  auto x = solve(f, B, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(1));

  Matrix<RatField> C(2, 1, f.zero());
  C.at(0, 0) = Rat(1); C.at(1, 0) = Rat(1);
  CHECK(!solve(f, C, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("linear algebra over a finite field") {
  GFField f{&gf_table_for_order(2)};
  Matrix<GFField> A(2, 2, f.zero());
  A.at(0, 0) = 1; A.at(0, 1) = 1;
  A.at(1, 0) = 1; A.at(1, 1) = 1;
  CHECK(mat_rank(f, A) == 1);
  CHECK(nullspace(f, A).cols == 1);
}

TEST_CASE("projective line enumeration round-trips") {
  for (auto fld : {FieldDescriptor::rational(), FieldDescriptor::finite(5),
                   FieldDescriptor::finite(4), FieldDescriptor::symbolic()}) {
    long long n = fld.kind == FieldKind::Finite ? fld.proj_line_size() : 12;
    std::vector<ProjPoint> pts = first_points(fld, n);
    REQUIRE((long long)pts.size() == n);
    for (long long i = 0; i < n; ++i) {
      CHECK(point_index(fld, pts[i]) == i);
      CHECK(point_at_index(fld, i) == pts[i]);
      for (long long j = i + 1; j < n; ++j) CHECK(pts[i] != pts[j]);
    }
  }
  // finite lines clamp
  CHECK(first_points(FieldDescriptor::finite(3), 100).size() == 4);
  // free symbolic labels sit off the enumeration
  CHECK(point_index(FieldDescriptor::symbolic(), ProjPoint::labeled("mu")) == -1);
}

TEST_CASE("projective point normal forms") {
  CHECK(ProjPoint::rat_coords(Rat(0), Rat(7)) == ProjPoint::zero_one());
  CHECK(ProjPoint::rat_coords(Rat(2), Rat(3)) == ProjPoint::rat(Rat(3, 2)));
  CHECK_THROWS_AS(ProjPoint::rat_coords(Rat(0), Rat(0)), MathError);
  const GFTable& t = gf_table_for_order(5);
  CHECK(ProjPoint::gf_coords(t, 2, 3) == ProjPoint::gf(4));  // 3 * inv(2) = 3*3 = 4
  CHECK(ProjPoint::zero_one().str() == "(0:1)");
  CHECK(ProjPoint::rat(Rat(1, 2)).str() == "(1:1/2)");
  CHECK(ProjPoint::labeled("mu").str() == "[mu]");
}

TEST_CASE("field descriptor basics") {
  CHECK(FieldDescriptor::rational().str() == "Q");
  CHECK(FieldDescriptor::finite(9).str() == "F9");
  CHECK(FieldDescriptor::symbolic().str() == "K(symbolic)");
  CHECK(FieldDescriptor::symbolic().is_uncountable());
  CHECK(!FieldDescriptor::rational().is_uncountable());
  CHECK(FieldDescriptor::finite(7).proj_line_size() == 8);
  CHECK(FieldDescriptor::rational().proj_line_size() == -1);
}
