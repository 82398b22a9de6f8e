#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "metcomp/metric.hpp"

using namespace metcomp;

static const RingDescriptor Z = RingDescriptor::integers();
static const RingDescriptor KQ =
    RingDescriptor::kronecker(FieldDescriptor::rational());

TEST_CASE("edge schedules walk strictly outward") {
  EdgeSchedule low = EdgeSchedule::arithmetic(true, -1, 2);
  CHECK(*low.at(1) == -1);
  CHECK(*low.at(3) == -5);
  EdgeSchedule high = EdgeSchedule::stepped(false, {1, 1, 4}, 3);
  CHECK(*high.at(2) == 1);
  CHECK(*high.at(4) == 7);
  CHECK(!EdgeSchedule::unbounded(true).at(9).has_value());
  // a non-monotone explicit prefix violates shift closure
  CHECK_THROWS_AS(mk_nf(Z, EdgeSchedule::stepped(true, {-2, -1}, 1),
                        EdgeSchedule::unbounded(false),
                        ChainSchedule::constant(ThickDescriptor::zero(Z))),
                  MathError);
  // windows must straddle 0
  CHECK_THROWS_AS(mk_nf(Z, EdgeSchedule::arithmetic(true, 2, 1),
                        EdgeSchedule::unbounded(false),
                        ChainSchedule::constant(ThickDescriptor::zero(Z))),
                  MathError);
}

TEST_CASE("chain schedules descend and expose their limits") {
  ThickDescriptor t23 = ThickDescriptor::torsion(Z, PrimeSet::finite({2, 3}));
  ThickDescriptor t2 = ThickDescriptor::torsion(Z, PrimeSet::finite({2}));
  ChainSchedule pre = ChainSchedule::prefix_then_constant({t23}, t2);
  CHECK(pre.at(1) == t23);
  CHECK(pre.at(2) == t2);
  CHECK(pre.limit() == t2);
  CHECK(pre.eventually_constant().has_value());
  CHECK_THROWS_AS(ChainSchedule::prefix_then_constant({t2}, t23), MathError);

  ChainSchedule tail = ChainSchedule::prime_tail(Z);
  CHECK(tail.at(1) == ThickDescriptor::torsion(Z, PrimeSet::tail(2)));
  CHECK(tail.at(3) == ThickDescriptor::torsion(Z, PrimeSet::tail(3)));
  CHECK(tail.limit() == ThickDescriptor::zero(Z));
  CHECK(!tail.eventually_constant().has_value());

  // tube tails over a finite field run off the line and fold to constant
  RingDescriptor K5 = RingDescriptor::kronecker(FieldDescriptor::finite(5));
  ChainSchedule gtail = ChainSchedule::tube_tail(K5);
  CHECK(gtail.eventually_constant().has_value());
  CHECK(gtail.limit() == ThickDescriptor::zero(K5));
}

TEST_CASE("canonical metrics: kernel and uniform convergence") {
  ThickDescriptor t2 = ThickDescriptor::torsion(Z, PrimeSet::finite({2}));
  MetricNF mc = mk_constant(t2);
  CHECK(kernel_B(mc) == t2);
  CHECK(converges_uniformly(mc));

  MetricNF tail = mk_nf(Z, EdgeSchedule::unbounded(true),
                        EdgeSchedule::unbounded(false),
                        ChainSchedule::prime_tail(Z));
  CHECK(kernel_B(tail) == ThickDescriptor::zero(Z));
  CHECK(!converges_uniformly(tail));

  CHECK(kernel_B(mk_t_structure(Z)) == ThickDescriptor::zero(Z));
  CHECK(converges_uniformly(mk_t_structure(Z)));
  CHECK(converges_uniformly(mk_nf(Z, EdgeSchedule::arithmetic(true, -1, 1),
                                  EdgeSchedule::arithmetic(false, 1, 1),
                                  ChainSchedule::constant(t2))));
}

TEST_CASE("join of aisle and coaisle is the t-structure metric") {
  for (const auto& ring : {Z, KQ, RingDescriptor::dynkin(3)}) {
    MetricNF j = join(mk_aisle(ring), mk_coaisle(ring));
    CHECK(j == mk_t_structure(ring));
    CHECK(equivalent(j, mk_t_structure(ring)));
    CHECK(finer_leq(mk_aisle(ring), mk_t_structure(ring)));
    CHECK(!finer_leq(mk_t_structure(ring), mk_aisle(ring)));
  }
}

TEST_CASE("t-structure submetric") {
  ThickDescriptor t2 = ThickDescriptor::torsion(Z, PrimeSet::finite({2}));
  MetricNF mc = mk_constant(t2);
  MetricNF sub = t_submetric(mc);
  CHECK(equivalent(sub, meet(mc, mk_t_structure(Z))));
  CHECK(sub.inner.at(5) == ThickDescriptor::zero(Z));
  CHECK(sub.down.at(5) == t2);
  CHECK(*sub.low.at(3) == -3);
  CHECK(*sub.high.at(3) == 3);
  CHECK(t_submetric(mk_t_structure(Z)) == mk_t_structure(Z));
  CHECK(kernel_B(sub) == ThickDescriptor::zero(Z));
}

TEST_CASE("ball membership over the integers is two-valued") {
  MetricNF tail = mk_nf(Z, EdgeSchedule::unbounded(true),
                        EdgeSchedule::unbounded(false),
                        ChainSchedule::prime_tail(Z));
  SplitObject z2 = SplitObject::concentrated(Z, {Indecomposable::z_torsion(2, 1)});
  CHECK(ball_contains(tail, 3, z2).verdict == BallMembership::Verdict::Out);
  CHECK(ball_contains(tail, 1, SplitObject::zero(Z)).verdict ==
        BallMembership::Verdict::In);
  SplitObject z5 = SplitObject::concentrated(Z, {Indecomposable::z_torsion(5, 1)});
  CHECK(ball_contains(tail, 3, z5).verdict == BallMembership::Verdict::In);

  // degree -5 free part lies below low(2) = -2 of the t-structure window
  SplitObject zf = SplitObject::concentrated(Z, {Indecomposable::z_free()}, -5);
  CHECK(ball_contains(mk_t_structure(Z), 2, zf).verdict ==
        BallMembership::Verdict::In);
}

TEST_CASE("window edges over Kronecker quarantine to BoundaryUnknown") {
  MetricNF kt = mk_t_structure(KQ);
  SplitObject p0deep =
      SplitObject::concentrated(KQ, {Indecomposable::preprojective(0)}, -2);
  CHECK(ball_contains(kt, 2, p0deep).verdict == BallMembership::Verdict::In);
  SplitObject p0 =
      SplitObject::concentrated(KQ, {Indecomposable::preprojective(0)}, 0);
  CHECK(ball_contains(kt, 1, p0).verdict ==
        BallMembership::Verdict::BoundaryUnknown);
  CHECK(ball_contains(kt, 3, p0).verdict == BallMembership::Verdict::Out);
}

TEST_CASE("reindexed tails are equivalent") {
  MetricNF a = mk_nf(Z, EdgeSchedule::unbounded(true),
                     EdgeSchedule::unbounded(false), ChainSchedule::prime_tail(Z));
  MetricNF b = mk_nf(Z, EdgeSchedule::unbounded(true),
                     EdgeSchedule::unbounded(false),
                     ChainSchedule::prime_tail(Z, 2));
  CHECK(equivalent(a, b));
  CHECK(kernel_B(a) == kernel_B(b));
  MetricNF zero = mk_constant(ThickDescriptor::zero(Z));
  CHECK(finer_leq(zero, a));
  CHECK(!finer_leq(mk_constant(ThickDescriptor::torsion(Z, PrimeSet::all())),
                   mk_constant(ThickDescriptor::torsion(Z, PrimeSet::finite({2})))));
}

// ---------------------------------------------------------------- generators

struct MetricGen {
  std::mt19937 rng;
  explicit MetricGen(unsigned seed) : rng(seed) {}

  long long pick(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }

  ThickDescriptor thick(const RingDescriptor& ring) {
    if (ring.is_integerish()) {
      switch (pick(0, 4)) {
        case 0: return ThickDescriptor::zero(ring);
        case 1: return ThickDescriptor::all(ring);
        case 2: return ThickDescriptor::torsion(ring, PrimeSet::all());
        case 3: return ThickDescriptor::torsion(ring, PrimeSet::tail(nth_prime(pick(0, 4))));
        default: {
          std::set<long long> ps;
          for (int i = pick(1, 3); i > 0; --i) ps.insert(nth_prime(pick(0, 5)));
          return ThickDescriptor::torsion(ring, PrimeSet::finite(ps));
        }
      }
    }
    if (ring.kind == RingKind::Kronecker) {
      switch (pick(0, 3)) {
        case 0: return ThickDescriptor::zero(ring);
        case 1: return ThickDescriptor::all(ring);
        case 2: return ThickDescriptor::regular_part(ring, PointSet::all(ring.field));
        default: {
          std::set<ProjPoint> pts;
          for (int i = pick(1, 3); i > 0; --i)
            pts.insert(point_at_index(ring.field, pick(0, 5)));
          return ThickDescriptor::regular_part(ring,
                                               PointSet::finite(ring.field, pts));
        }
      }
    }
    std::vector<Indecomposable> gens;
    for (int i = pick(0, 3); i > 0; --i) {
      int a = (int)pick(1, ring.an_n);
      gens.push_back(Indecomposable::interval(a, (int)pick(a, ring.an_n)));
    }
    return ThickDescriptor::interval_closure(ring, gens);
  }

  EdgeSchedule edge(bool low) {
    if (pick(0, 2) == 0) return EdgeSchedule::unbounded(low);
    long long start = pick(1, 3), step = pick(1, 2);
    return EdgeSchedule::arithmetic(low, low ? -start : start, step);
  }

  ChainSchedule chain(const RingDescriptor& ring) {
    ThickDescriptor base = thick(ring);
    switch (pick(0, 2)) {
      case 0: return ChainSchedule::constant(base);
      case 1: {
        ThickDescriptor top = join(base, thick(ring));
        return ChainSchedule::prefix_then_constant({top}, base);
      }
      default:
        if (ring.is_integerish())
          return ChainSchedule::prime_tail(ring, pick(1, 2), pick(0, 2));
        if (ring.kind == RingKind::Kronecker)
          return ChainSchedule::tube_tail(ring, pick(1, 2), pick(0, 2));
        return ChainSchedule::constant(base);
    }
  }

  MetricNF metric(const RingDescriptor& ring) {
    switch (pick(0, 5)) {
      case 0: return mk_constant(thick(ring));
      case 1: return mk_aisle(ring);
      case 2: return mk_coaisle(ring);
      case 3: return mk_t_structure(ring);
      default: return mk_nf(ring, edge(true), edge(false), chain(ring));
    }
  }
};

TEST_CASE("lattice laws on random metric pairs") {
  for (const auto& ring : {Z, KQ, RingDescriptor::dynkin(3)}) {
    MetricGen gen(20260815);
    for (int trial = 0; trial < 220; ++trial) {
      MetricNF a = gen.metric(ring), b = gen.metric(ring);
      MetricNF m = meet(a, b), j = join(a, b);
      CHECK(equivalent(meet(a, a), a));
      CHECK(equivalent(join(a, a), a));
      CHECK(equivalent(m, meet(b, a)));
      CHECK(equivalent(j, join(b, a)));
      CHECK(equivalent(meet(a, j), a));
      CHECK(equivalent(join(a, m), a));
      CHECK(finer_leq(m, a));
      CHECK(finer_leq(m, b));
      CHECK(finer_leq(a, j));
      CHECK(finer_leq(b, j));
      CHECK(finer_leq(a, a));
      if (finer_leq(a, b) && finer_leq(b, a)) {
        CHECK(equivalent(a, b));
        CHECK(kernel_B(a) == kernel_B(b));
      }
    }
  }
}

TEST_CASE("finer_leq is transitive on random triples") {
  for (const auto& ring : {Z, KQ}) {
    MetricGen gen(777);
    int seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
      MetricNF a = gen.metric(ring), b = gen.metric(ring), c = gen.metric(ring);
      if (finer_leq(a, b) && finer_leq(b, c)) {
        CHECK(finer_leq(a, c));
        ++seen;
      }
    }
    CHECK(seen > 10);  // the sample actually exercises the law
  }
}

TEST_CASE("meet and join are greatest lower / least upper bounds") {
  for (const auto& ring : {Z, KQ}) {
    MetricGen gen(424242);
    for (int trial = 0; trial < 150; ++trial) {
      MetricNF a = gen.metric(ring), b = gen.metric(ring), c = gen.metric(ring);
      if (finer_leq(c, a) && finer_leq(c, b)) CHECK(finer_leq(c, meet(a, b)));
      if (finer_leq(a, c) && finer_leq(b, c)) CHECK(finer_leq(join(a, b), c));
    }
  }
}

TEST_CASE("Dynkin metrics decompose over the indecomposables") {
  RingDescriptor A2 = RingDescriptor::dynkin(2);
  std::vector<Indecomposable> ind = {Indecomposable::interval(1, 1),
                                     Indecomposable::interval(2, 2),
                                     Indecomposable::interval(1, 2)};
  MetricGen gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    MetricNF n = gen.metric(A2);
    MetricNF acc = mk_constant(ThickDescriptor::zero(A2));
    for (const auto& m : ind)
      acc = join(acc, meet(n, mk_constant(ThickDescriptor::interval_closure(
                                  A2, {m}))));
    CHECK(equivalent(n, acc));
  }
}
