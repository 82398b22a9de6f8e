#pragma once

#include <optional>

#include "metcomp/thick.hpp"

namespace metcomp {

// One side of a window schedule, indexed by n >= 1: either unconstrained at
// every level, or an explicit prefix followed by an arithmetic tail. The low
// side walks down (step subtracts), the high side walks up (step adds).
struct EdgeSchedule {
  bool infinite = true;
  bool low_side = true;
  std::vector<long long> vals;  // values at n = 1..len; nonempty when finite
  long long step = 1;           // tail step, >= 1

  static EdgeSchedule unbounded(bool low) {
    EdgeSchedule e;
    e.low_side = low;
    return e;
  }
  static EdgeSchedule arithmetic(bool low, long long start, long long step);
  static EdgeSchedule stepped(bool low, std::vector<long long> vals,
                              long long step);

  // nullopt encodes the infinite side
  std::optional<long long> at(long long n) const;
  void canonicalize();
  bool operator==(const EdgeSchedule& o) const {
    if (infinite != o.infinite || low_side != o.low_side) return false;
    if (infinite) return true;
    return vals == o.vals && step == o.step;
  }
  std::string str() const;
};

// pointwise extremes of two same-side edges; meet and join of windows
EdgeSchedule edge_pointwise_max(const EdgeSchedule& a, const EdgeSchedule& b);
EdgeSchedule edge_pointwise_min(const EdgeSchedule& a, const EdgeSchedule& b);

// Descending schedule n >= 1 of thick descriptors: an explicit prefix, then
//   Constant   C, C, C, ...
//   PrimeTail  Torsion(extra + {p prime : p >= step*n + offset})
//   TubeTail   Regular(extra + {tube points of enumeration index >=
//              step*n + offset})
// Tube tails over a finite field die out and normalize to Constant.
struct ChainSchedule {
  enum class TailKind { Constant, PrimeTail, TubeTail };

  RingDescriptor ring;
  std::vector<ThickDescriptor> prefix;
  TailKind tail = TailKind::Constant;
  ThickDescriptor tail_const;
  long long tail_step = 1;
  long long tail_offset = 0;
  PrimeSet extra_primes;  // PrimeTail
  PointSet extra_points;  // TubeTail

  static ChainSchedule constant(const ThickDescriptor& c);
  static ChainSchedule prefix_then_constant(std::vector<ThickDescriptor> pre,
                                            const ThickDescriptor& c);
  static ChainSchedule prime_tail(const RingDescriptor& r, long long step = 1,
                                  long long offset = 0,
                                  const PrimeSet& extra = PrimeSet::none());
  static ChainSchedule tube_tail(const RingDescriptor& r, long long step = 1,
                                 long long offset = 0);

  ThickDescriptor at(long long n) const;
  ThickDescriptor limit() const;
  // value from some level on, when the schedule is eventually constant
  std::optional<ThickDescriptor> eventually_constant() const;
  long long horizon() const;  // all prefixes and finite data lie below this

  void canonicalize();
  bool operator==(const ChainSchedule& o) const;
  std::string str() const;
};

// exact pointwise lattice operations; the family is closed under both
ChainSchedule chain_meet(const ChainSchedule& a, const ChainSchedule& b);
ChainSchedule chain_join(const ChainSchedule& a, const ChainSchedule& b);
bool chain_leq_pointwise(const ChainSchedule& a, const ChainSchedule& b);
// exists m with a(m) <= b; decidable since a descends
bool eventually_leq(const ChainSchedule& a, const ThickDescriptor& b);

// Normal-form additive good metric. Ball n is the additive extension
// closure of the degreewise set
//   { Sigma^{-i} M :  M in wide(down(n))   for i <= low(n)
//                     M in wide(inner(n))  for low(n) < i <= high(n)
//                     M in wide(up(n))     for i > high(n) }
// Degreewise membership is exact over Z (Serre wide parts); over the quiver
// algebras it can under-report within one degree of a finite window edge,
// which ball_contains quarantines as BoundaryUnknown.
//
// Invariants: window sides straddle 0 and walk strictly outward when
// finite; the three chains descend; inner <= down and inner <= up at every
// level; an infinite window side copies inner into its outer chain.
struct MetricNF {
  RingDescriptor ring;
  EdgeSchedule low = EdgeSchedule::unbounded(true);
  EdgeSchedule high = EdgeSchedule::unbounded(false);
  ChainSchedule down, up, inner;

  ThickDescriptor allowed(long long degree, long long n) const;
  bool operator==(const MetricNF& o) const {
    return ring == o.ring && low == o.low && high == o.high &&
           down == o.down && up == o.up && inner == o.inner;
  }
  std::string str() const;
};

MetricNF mk_constant(const ThickDescriptor& c);
MetricNF mk_aisle(const RingDescriptor& r);
MetricNF mk_coaisle(const RingDescriptor& r);
MetricNF mk_t_structure(const RingDescriptor& r);
// spec form: everything outside the window is allowed, the chain rules the
// middle
MetricNF mk_nf(const RingDescriptor& r, const EdgeSchedule& low,
               const EdgeSchedule& high, const ChainSchedule& chain);
// general form with all three chains, validated and canonicalized
MetricNF mk_nf_full(const RingDescriptor& r, const EdgeSchedule& low,
                    const EdgeSchedule& high, const ChainSchedule& down,
                    const ChainSchedule& up, const ChainSchedule& inner);

struct BallMembership {
  enum class Verdict { In, Out, BoundaryUnknown };
  Verdict verdict = Verdict::In;
  std::string detail;
};

BallMembership ball_contains(const MetricNF& m, long long n,
                             const SplitObject& x);

MetricNF meet(const MetricNF& a, const MetricNF& b);
MetricNF join(const MetricNF& a, const MetricNF& b);

// for every n some ball of a fits inside ball n of b
bool finer_leq(const MetricNF& a, const MetricNF& b);
bool equivalent(const MetricNF& a, const MetricNF& b);

MetricNF t_submetric(const MetricNF& m);

// the intersection of all balls
ThickDescriptor kernel_B(const MetricNF& m);

// whether the metric splits as (t-structure part) join (constant kernel):
// exactly when the inner chain stabilizes at its limit
bool converges_uniformly(const MetricNF& m);

}  // namespace metcomp
