#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "metcomp/indec.hpp"
#include "metcomp/oracle.hpp"

using namespace metcomp;

static const RingDescriptor Z = RingDescriptor::integers();
static const RingDescriptor KQ =
    RingDescriptor::kronecker(FieldDescriptor::rational());

TEST_CASE("abelian Hom/Ext types for cyclic pairs") {
  auto rec = [](const Indecomposable& x, const Indecomposable& y) {
    return hom_invariants(Z, x, y);
  };
  Indecomposable free = Indecomposable::z_free();
  Indecomposable z2 = Indecomposable::z_torsion(2, 1);
  Indecomposable z4 = Indecomposable::z_torsion(2, 2);
  Indecomposable z3 = Indecomposable::z_torsion(3, 1);
  Indecomposable z5 = Indecomposable::z_torsion(5, 1);

  CHECK(rec(free, free).hom_group == AbGroup{1, {}});
  CHECK(rec(free, free).ext_is_zero());
  CHECK(rec(free, z5).hom_group == AbGroup{0, {5}});
  CHECK(rec(free, z5).ext_is_zero());
  CHECK(rec(z5, free).hom_is_zero());
  CHECK(rec(z5, free).ext_group == AbGroup{0, {5}});
  CHECK(rec(z4, z2).hom_group == AbGroup{0, {2}});
  CHECK(rec(z4, z2).ext_group == AbGroup{0, {2}});
  CHECK(rec(z2, z4).hom_group == AbGroup{0, {2}});
  CHECK(rec(z2, z4).ext_group == AbGroup{0, {2}});
  CHECK(rec(z2, z3).hom_is_zero());
  CHECK(rec(z2, z3).ext_is_zero());
}

TEST_CASE("abelian Hom/Ext agrees with the Smith route on a catalog") {
  OracleConfig cfg;
  std::vector<Indecomposable> cat = {
      Indecomposable::z_free(),        Indecomposable::z_torsion(2, 1),
      Indecomposable::z_torsion(2, 2), Indecomposable::z_torsion(3, 1),
      Indecomposable::z_torsion(3, 2), Indecomposable::z_torsion(5, 1)};
  for (const auto& x : cat)
    for (const auto& y : cat) {
      auto [h, e] = snf_hom_ext(cfg, ZPresentation::of_modules({x}),
                                ZPresentation::of_modules({y}));
      HomExtRecord r = hom_invariants(Z, x, y);
      CHECK(h == r.hom_group);
      CHECK(e == r.ext_group);
    }
  // additivity of both routes on a direct sum
  auto [h, e] = snf_hom_ext(
      cfg, ZPresentation::of_modules({cat[0], cat[2]}),
      ZPresentation::of_modules({cat[1], cat[3]}));
  AbGroup want_h, want_e;
  for (const auto& x : {cat[0], cat[2]})
    for (const auto& y : {cat[1], cat[3]}) {
      HomExtRecord r = hom_invariants(Z, x, y);
      want_h = ab_direct_sum(want_h, r.hom_group);
      want_e = ab_direct_sum(want_e, r.ext_group);
    }
  CHECK(h == want_h);
  CHECK(e == want_e);
}

static std::vector<Indecomposable> kron_catalog(const FieldDescriptor& f,
                                                long long max_dim) {
  std::vector<Indecomposable> cat;
  for (long long n = 0; 2 * n + 1 <= max_dim; ++n) {
    cat.push_back(Indecomposable::preprojective(n));
    cat.push_back(Indecomposable::preinjective(n));
  }
  for (const ProjPoint& p : first_points(f, 3))
    for (long long l = 1; 2 * l <= max_dim; ++l)
      cat.push_back(Indecomposable::regular(p, l));
  return cat;
}

TEST_CASE("Kronecker Hom/Ext dimension table spot values") {
  auto d = [](const Indecomposable& x, const Indecomposable& y) {
    HomExtRecord r = hom_invariants(KQ, x, y);
    return std::pair<long long, long long>{r.hom_dim, r.ext_dim};
  };
  Indecomposable p0 = Indecomposable::preprojective(0);
  Indecomposable p1 = Indecomposable::preprojective(1);
  Indecomposable q0 = Indecomposable::preinjective(0);
  Indecomposable r01 = Indecomposable::regular(ProjPoint::zero_one(), 1);
  Indecomposable r10 = Indecomposable::regular(ProjPoint::rat(Rat(0)), 1);

  CHECK(d(p0, p1) == std::pair<long long, long long>{2, 0});
  CHECK(d(p1, p0) == std::pair<long long, long long>{0, 0});
  CHECK(d(p0, p0) == std::pair<long long, long long>{1, 0});
  CHECK(d(q0, p0) == std::pair<long long, long long>{0, 2});
  CHECK(d(p0, q0) == std::pair<long long, long long>{0, 0});
  CHECK(d(r01, r01) == std::pair<long long, long long>{1, 1});
  CHECK(d(r01, r10) == std::pair<long long, long long>{0, 0});
  CHECK(d(p0, r01) == std::pair<long long, long long>{1, 0});
  CHECK(d(r01, q0) == std::pair<long long, long long>{1, 0});
}

TEST_CASE("Kronecker Hom/Ext agrees with the intertwining systems") {
  OracleConfig cfg;
  for (auto fld : {FieldDescriptor::rational(), FieldDescriptor::finite(5)}) {
    RingDescriptor ring = RingDescriptor::kronecker(fld);
    auto cat = kron_catalog(fld, 6);
    for (const auto& x : cat)
      for (const auto& y : cat) {
        auto [h, e] = intertwiner_dims(cfg, ring, x, y);
        HomExtRecord r = hom_invariants(ring, x, y);
        CHECK(h == r.hom_dim);
        CHECK(e == r.ext_dim);
      }
  }
}

TEST_CASE("Euler form equals hom minus ext on the catalog") {
  auto cat = kron_catalog(FieldDescriptor::rational(), 6);
  for (const auto& x : cat)
    for (const auto& y : cat) {
      HomExtRecord r = hom_invariants(KQ, x, y);
      CHECK(r.hom_dim - r.ext_dim ==
            euler_form(KQ, dim_vector(KQ, x), dim_vector(KQ, y)));
    }
}

TEST_CASE("AR translate and the Serre duality identity") {
  Indecomposable p0 = Indecomposable::preprojective(0);
  Indecomposable p1 = Indecomposable::preprojective(1);
  Indecomposable p2 = Indecomposable::preprojective(2);
  Indecomposable q0 = Indecomposable::preinjective(0);
  Indecomposable q2 = Indecomposable::preinjective(2);
  Indecomposable reg = Indecomposable::regular(ProjPoint::rat(Rat(1)), 2);

  CHECK(tau(KQ, p2) == p0);
  CHECK(tau(KQ, q0) == q2);
  CHECK(tau(KQ, reg) == reg);
  CHECK(tau_inverse(KQ, p0) == p2);
  CHECK(tau_inverse(KQ, q2) == q0);
  CHECK_THROWS_AS(tau(KQ, p0), MathError);
  CHECK_THROWS_AS(tau(KQ, p1), MathError);
  CHECK_THROWS_AS(tau_inverse(KQ, q0), MathError);

  // ext(X, Y) = hom(Y, tau X) for X nonprojective
  auto cat = kron_catalog(FieldDescriptor::rational(), 6);
  for (const auto& x : cat) {
    if (x.kind == IndKind::Preprojective && x.n <= 1) continue;
    for (const auto& y : cat)
      CHECK(hom_invariants(KQ, x, y).ext_dim ==
            hom_invariants(KQ, y, tau(KQ, x)).hom_dim);
  }
}

TEST_CASE("defect separates the three families") {
  CHECK(defect(KQ, dim_vector(KQ, Indecomposable::preprojective(3))) == -1);
  CHECK(defect(KQ, dim_vector(KQ, Indecomposable::preinjective(3))) == 1);
  CHECK(defect(KQ, dim_vector(KQ, Indecomposable::regular(
                                      ProjPoint::zero_one(), 4))) == 0);
  CHECK(dim_vector(KQ, Indecomposable::preprojective(1)).entries ==
        std::vector<long long>({1, 2}));
  CHECK(dim_vector(KQ, Indecomposable::preinjective(1)).entries ==
        std::vector<long long>({2, 1}));
}

TEST_CASE("exceptional modules and sequences") {
  Indecomposable p0 = Indecomposable::preprojective(0);
  Indecomposable p1 = Indecomposable::preprojective(1);
  Indecomposable reg = Indecomposable::regular(ProjPoint::zero_one(), 1);
  CHECK(is_exceptional(KQ, p0));
  CHECK(is_exceptional(KQ, Indecomposable::preinjective(2)));
  CHECK(!is_exceptional(KQ, reg));  // tubes have self-extensions
  CHECK(is_exceptional_sequence(KQ, {p0, p1}));
  CHECK(!is_exceptional_sequence(KQ, {p1, p0}));
  CHECK(!is_exceptional_sequence(KQ, {p0, reg}));
}

TEST_CASE("interval calculus over A_n") {
  Indecomposable i13 = Indecomposable::interval(1, 3);
  Indecomposable i22 = Indecomposable::interval(2, 2);
  Indecomposable i23 = Indecomposable::interval(2, 3);
  Indecomposable i12 = Indecomposable::interval(1, 2);

  // nonzero map [a,b] -> [c,d] iff c <= a <= d <= b
  CHECK(interval_hom_nonzero(i13, i12));
  CHECK(!interval_hom_nonzero(i12, i13));
  CHECK(interval_hom_nonzero(i13, i13));
  CHECK(!interval_hom_nonzero(i22, i13));

  CHECK(interval_kernel(i13, i12) == std::vector<Indecomposable>({Indecomposable::interval(3, 3)}));
  CHECK(interval_cokernel(i23, i12) == std::vector<Indecomposable>({Indecomposable::interval(1, 1)}));
  CHECK(interval_kernel(i13, i13).empty());

  RingDescriptor A3 = RingDescriptor::dynkin(3);
  HomExtRecord r = hom_invariants(A3, i13, i12);
  CHECK(r.hom_dim == 1);
  HomExtRecord s = hom_invariants(A3, i22, i13);
  CHECK(s.hom_dim == 0);
}

TEST_CASE("catalog validation rejects foreign shapes") {
  CHECK_THROWS_AS(check_in_catalog(Z, Indecomposable::preprojective(1)),
                  MathError);
  CHECK_THROWS_AS(check_in_catalog(KQ, Indecomposable::z_torsion(2, 1)),
                  MathError);
  CHECK_THROWS_AS(
      check_in_catalog(RingDescriptor::dynkin(2), Indecomposable::interval(1, 3)),
      MathError);
  // localized ring drops the inverted torsion
  RingDescriptor zloc = RingDescriptor::localized(PrimeSet::finite({2}));
  CHECK_THROWS_AS(check_in_catalog(zloc, Indecomposable::z_torsion(2, 1)),
                  MathError);
  check_in_catalog(zloc, Indecomposable::z_torsion(3, 1));
}
