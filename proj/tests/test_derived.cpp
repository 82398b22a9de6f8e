#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "metcomp/derived.hpp"
#include "metcomp/oracle.hpp"

using namespace metcomp;

static const RingDescriptor Z = RingDescriptor::integers();
static const RingDescriptor KQ =
    RingDescriptor::kronecker(FieldDescriptor::rational());

static IMat make(int r, int c, std::initializer_list<long long> vals) {
  IMat m(r, c);
  int i = 0;
  for (long long v : vals) m.a[i++] = v;
  return m;
}

static SplitObject at(const RingDescriptor& ring, long long deg,
                      std::vector<Indecomposable> mods) {
  return SplitObject::concentrated(ring, std::move(mods), deg);
}

TEST_CASE("split objects: normalization, shift, display") {
  SplitObject x = at(Z, 0, {Indecomposable::z_free()});
  CHECK(x.str() == "Z");
  CHECK(shift(x, 1).summands[0].first == -1);
  CHECK(shift(x, 1).str() == "Z[1]");
  CHECK(shift(shift(x, 3), -3) == x);
  CHECK(SplitObject::zero(Z).str() == "0");
  CHECK(SplitObject::zero(Z).degree_span() == std::pair<long long, long long>{0, -1});

  SplitObject y = x.direct_sum(at(Z, 2, {Indecomposable::z_torsion(2, 1)}));
  CHECK(y.summands.size() == 2);
  CHECK(y.degree_span() == std::pair<long long, long long>{0, 2});
  // multisets are sorted, so equality is isomorphism
  SplitObject y2 = at(Z, 2, {Indecomposable::z_torsion(2, 1)}).direct_sum(x);
  CHECK(y == y2);
}

TEST_CASE("cones of integer module maps") {
  Indecomposable free = Indecomposable::z_free();
  Indecomposable z4 = Indecomposable::z_torsion(2, 2);

  // multiplication by 2 on Z: cone is Z/2 in degree 0
  SplitObject c2 = cone_of_module_map(ModuleMap::multiplication(Z, 2, 1));
  CHECK(c2 == at(Z, 0, {Indecomposable::z_torsion(2, 1)}));
  CHECK(c2.str() == "Z/2");

  // identity cone vanishes
  CHECK(cone_of_module_map(ModuleMap::identity(Z, {free, z4})).is_zero());

  // zero map: cone = target + shifted source
  SplitObject cz = cone_of_module_map(
      ModuleMap::z_map(Z, {z4}, {free}, make(1, 1, {0})));
  CHECK(cz == at(Z, 0, {free}).direct_sum(at(Z, -1, {z4})));

  // multiplication by 2 on Z/4: kernel and cokernel both Z/2
  SplitObject c42 = cone_of_module_map(
      ModuleMap::z_map(Z, {z4}, {z4}, make(1, 1, {2})));
  CHECK(c42 == at(Z, 0, {Indecomposable::z_torsion(2, 1)})
                   .direct_sum(at(Z, -1, {Indecomposable::z_torsion(2, 1)})));

  // diag(2, 3) on Z^2: cokernel Z/6 splits into primary pieces
  SplitObject cd = cone_of_module_map(
      ModuleMap::z_map(Z, {free, free}, {free, free}, make(2, 2, {2, 0, 0, 3})));
  CHECK(cd == at(Z, 0, {Indecomposable::z_torsion(2, 1),
                        Indecomposable::z_torsion(3, 1)}));
}

TEST_CASE("cone homology matches the literal resolution route") {
  OracleConfig cfg;
  Indecomposable free = Indecomposable::z_free();
  Indecomposable z4 = Indecomposable::z_torsion(2, 2);
  Indecomposable z2 = Indecomposable::z_torsion(2, 1);
  Indecomposable z8 = Indecomposable::z_torsion(2, 3);
  std::vector<Indecomposable> src = {free, z4}, tgt = {z2, z8};
  IMat f = make(2, 2, {1, 1, 3, 2});

  SplitObject cone = cone_of_module_map(ModuleMap::z_map(Z, src, tgt, f));
  auto hom = mapping_cone_homology(
      cfg, ZMapPresentation::of(ZPresentation::of_modules(src),
                                ZPresentation::of_modules(tgt), f));
  std::map<long long, AbGroup> by_degree;
  for (const auto& [d, m] : cone.summands) {
    AbGroup g = m.kind == IndKind::ZFree
                    ? AbGroup{1, {}}
                    : AbGroup{0, {z_annihilator(m)}};
    AbGroup& slot = by_degree[d];
    slot = ab_direct_sum(slot, g);
  }
  std::map<long long, AbGroup> oracle_deg(hom.begin(), hom.end());
  CHECK(by_degree == oracle_deg);
}

TEST_CASE("invalid matrix data is rejected") {
  Indecomposable free = Indecomposable::z_free();
  Indecomposable z2 = Indecomposable::z_torsion(2, 1);
  Indecomposable z4 = Indecomposable::z_torsion(2, 2);
  // torsion cannot map to free
  CHECK_THROWS_AS(ModuleMap::z_map(Z, {z2}, {free}, make(1, 1, {1})), MathError);
  // Z/2 -> Z/4 must land in the 2-torsion: entry * 2 = 0 mod 4
  CHECK_THROWS_AS(ModuleMap::z_map(Z, {z2}, {z4}, make(1, 1, {1})), MathError);
  ModuleMap::z_map(Z, {z2}, {z4}, make(1, 1, {2}));
  // shape mismatch
  CHECK_THROWS_AS(ModuleMap::z_map(Z, {free}, {free}, make(2, 2, {1, 0, 0, 1})),
                  MathError);
}

TEST_CASE("canonical preprojective steps have length-one tube cones") {
  for (const ProjPoint& lambda :
       {ProjPoint::zero_one(), ProjPoint::rat(Rat(0)), ProjPoint::rat(Rat(1)),
        ProjPoint::rat(Rat(2, 3))}) {
    for (long long n = 1; n <= 5; ++n) {
      ModuleMap step = ModuleMap::canonical_p_step(KQ, lambda, n);
      CHECK(step.source ==
            std::vector<Indecomposable>({Indecomposable::preprojective(n - 1)}));
      CHECK(step.target ==
            std::vector<Indecomposable>({Indecomposable::preprojective(n)}));
      SplitObject c = cone_of_module_map(step);
      CHECK(c == at(KQ, 0, {Indecomposable::regular(lambda, 1)}));
    }
  }
}

TEST_CASE("canonical steps over a finite field") {
  RingDescriptor K5 = RingDescriptor::kronecker(FieldDescriptor::finite(5));
  ProjPoint lam = ProjPoint::gf(3);
  SplitObject c = cone_of_module_map(ModuleMap::canonical_p_step(K5, lam, 2));
  CHECK(c == at(K5, 0, {Indecomposable::regular(lam, 1)}));
}

TEST_CASE("graded hom of split objects") {
  SplitObject x = at(Z, 0, {Indecomposable::z_torsion(2, 1)});
  auto g = graded_hom(x, x);
  REQUIRE(g.count(0) == 1);
  REQUIRE(g.count(1) == 1);
  CHECK(g.at(0).hom_group == AbGroup{0, {2}});
  CHECK(g.at(1).ext_group == AbGroup{0, {2}});
  CHECK(g.size() == 2);

  // a two-degree gap kills everything
  auto far = graded_hom(x, shift(x, 5));
  CHECK(!far.empty());  // the pair realigns at j = -5
  CHECK(far.count(-5) == 1);
  CHECK(graded_hom(x, at(Z, 0, {Indecomposable::z_torsion(3, 1)})).empty());
}

TEST_CASE("support and summand splitting") {
  SplitObject x = at(Z, 0, {Indecomposable::z_torsion(2, 1)})
                      .direct_sum(at(Z, 3, {Indecomposable::z_torsion(5, 2)}));
  SpecSubset s = support_Z(x);
  CHECK(!s.all);
  CHECK(s.primes == std::set<long long>({2, 5}));
  CHECK(support_Z(at(Z, 0, {Indecomposable::z_free()})).all);

  auto parts = z_summands_of(AbGroup{1, {6}});
  CHECK(parts == std::vector<Indecomposable>({Indecomposable::z_free(),
                                              Indecomposable::z_torsion(2, 1),
                                              Indecomposable::z_torsion(3, 1)}));
}
