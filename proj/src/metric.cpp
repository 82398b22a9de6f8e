#include "metcomp/metric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace metcomp {

namespace {

void check_ball_index(long long n) {
  require(n >= 1, Err::InvalidSchedule, "ball index must be >= 1");
}

void validate_edge(const EdgeSchedule& e) {
  if (e.infinite) return;
  require(!e.vals.empty(), Err::InvalidSchedule,
          "finite window side needs at least one value");
  require(e.step >= 1, Err::InvalidSchedule, "window step must be >= 1");
  for (size_t i = 0; i < e.vals.size(); ++i) {
    if (e.low_side)
      require(e.vals[i] <= 0, Err::InvalidSchedule,
              "low window values must be <= 0");
    else
      require(e.vals[i] >= 0, Err::InvalidSchedule,
              "high window values must be >= 0");
    if (i + 1 < e.vals.size()) {
      bool mono = e.low_side ? e.vals[i + 1] <= e.vals[i]
                             : e.vals[i + 1] >= e.vals[i];
      require(mono, Err::InvalidSchedule,
              "window sides must move outward monotonically");
    }
  }
}

// levels past which two finite edges are both in their arithmetic tails and
// past any crossing
long long edge_pair_horizon(const EdgeSchedule& a, const EdgeSchedule& b) {
  long long la = a.infinite ? 0 : (long long)a.vals.size();
  long long lb = b.infinite ? 0 : (long long)b.vals.size();
  long long h = la + lb + 4;
  if (!a.infinite && !b.infinite) {
    long long gap = std::llabs(*a.at(la + lb + 1) - *b.at(la + lb + 1));
    h += gap;
  }
  return h;
}

long long prime_set_datum(const PrimeSet& s) {
  long long m = 0;
  for (long long p : s.elems) m = std::max(m, p);
  return m;
}

long long point_set_datum(const PointSet& s) {
  long long m = 0;
  for (const auto& p : s.elems)
    m = std::max(m, std::max(0LL, point_index(s.field, p)));
  if (s.kind == PointSet::Kind::TailUnion || s.kind == PointSet::Kind::CoTail)
    m = std::max(m, s.tail_from);
  return m;
}

long long descriptor_datum(const ThickDescriptor& d) {
  switch (d.kind) {
    case ThickDescriptor::Kind::Torsion: return prime_set_datum(d.primes);
    case ThickDescriptor::Kind::RegularPart: return point_set_datum(d.points);
    default: return 0;
  }
}

// whether d eventually contains every set {index >= x}; such descriptors
// absorb a moving tail
bool swallows_tails(const ThickDescriptor& d, ChainSchedule::TailKind k) {
  if (d.kind == ThickDescriptor::Kind::All) return true;
  if (k == ChainSchedule::TailKind::PrimeTail)
    return d.kind == ThickDescriptor::Kind::Torsion && d.primes.cofinite;
  if (k == ChainSchedule::TailKind::TubeTail)
    return d.kind == ThickDescriptor::Kind::RegularPart &&
           (d.points.kind == PointSet::Kind::Cofinite ||
            d.points.kind == PointSet::Kind::TailUnion);
  return false;
}

PrimeSet prime_part(const ThickDescriptor& d) {
  switch (d.kind) {
    case ThickDescriptor::Kind::Zero: return PrimeSet::none();
    case ThickDescriptor::Kind::All: return PrimeSet::all();
    case ThickDescriptor::Kind::Torsion: return d.primes;
    default:
      raise(Err::NotRepresentable, "descriptor has no prime-set part");
  }
}

PointSet point_part(const ThickDescriptor& d, const FieldDescriptor& f) {
  switch (d.kind) {
    case ThickDescriptor::Kind::Zero: return PointSet::none(f);
    case ThickDescriptor::Kind::All: return PointSet::all(f);
    case ThickDescriptor::Kind::RegularPart: return d.points;
    default:
      raise(Err::NotRepresentable, "descriptor has no point-set part");
  }
}

void validate_chain(const ChainSchedule& c) {
  for (const auto& d : c.prefix)
    require(d.ring == c.ring, Err::MixedRings,
            "chain entry over a different ring");
  switch (c.tail) {
    case ChainSchedule::TailKind::Constant:
      require(c.tail_const.ring == c.ring, Err::MixedRings,
              "chain tail over a different ring");
      break;
    case ChainSchedule::TailKind::PrimeTail:
      require(c.ring.is_integerish(), Err::WrongRing,
              "prime tails live over Z or a localization of Z");
      break;
    case ChainSchedule::TailKind::TubeTail:
      require(c.ring.kind == RingKind::Kronecker, Err::WrongRing,
              "tube tails live over the Kronecker algebra");
      break;
  }
  require(c.tail_step >= 1, Err::InvalidSchedule, "tail step must be >= 1");
  for (long long n = 1; n <= (long long)c.prefix.size() + 1; ++n)
    require(leq(c.at(n + 1), c.at(n)), Err::InvalidSchedule,
            "chain values must descend");
}

}  // namespace

// ---------------------------------------------------------------------------
// edges

EdgeSchedule EdgeSchedule::arithmetic(bool low, long long start,
                                      long long step) {
  EdgeSchedule e;
  e.infinite = false;
  e.low_side = low;
  e.vals = {start};
  e.step = step;
  validate_edge(e);
  return e;
}

EdgeSchedule EdgeSchedule::stepped(bool low, std::vector<long long> vals,
                                   long long step) {
  EdgeSchedule e;
  e.infinite = false;
  e.low_side = low;
  e.vals = std::move(vals);
  e.step = step;
  validate_edge(e);
  e.canonicalize();
  return e;
}

std::optional<long long> EdgeSchedule::at(long long n) const {
  check_ball_index(n);
  if (infinite) return std::nullopt;
  long long len = (long long)vals.size();
  if (n <= len) return vals[n - 1];
  long long drift = step * (n - len);
  return low_side ? vals.back() - drift : vals.back() + drift;
}

void EdgeSchedule::canonicalize() {
  if (infinite) {
    vals.clear();
    step = 1;
    return;
  }
  while (vals.size() >= 2) {
    long long expect = low_side ? vals[vals.size() - 2] - step
                                : vals[vals.size() - 2] + step;
    if (vals.back() == expect)
      vals.pop_back();
    else
      break;
  }
}

std::string EdgeSchedule::str() const {
  if (infinite) return low_side ? "-inf" : "+inf";
  std::ostringstream os;
  for (size_t i = 0; i < vals.size(); ++i)
    os << (i ? "," : "") << vals[i];
  os << " step " << step;
  return os.str();
}

namespace {

// pointwise extreme of two same-side edges, treating the infinite side as
// -inf (low) or +inf (high)
EdgeSchedule edge_extreme(const EdgeSchedule& a, const EdgeSchedule& b,
                          bool want_max) {
  require(a.low_side == b.low_side, Err::InvalidSchedule,
          "cannot mix window sides");
  bool low = a.low_side;
  // infinite = -inf on the low side, +inf on the high side
  bool inf_wins = (low && !want_max) || (!low && want_max);
  if (a.infinite) return inf_wins ? a : b;
  if (b.infinite) return inf_wins ? b : a;
  long long h = edge_pair_horizon(a, b);
  EdgeSchedule r;
  r.infinite = false;
  r.low_side = low;
  for (long long n = 1; n <= h; ++n) {
    long long va = *a.at(n), vb = *b.at(n);
    r.vals.push_back(want_max ? std::max(va, vb) : std::min(va, vb));
  }
  // past the crossing the extreme follows one arithmetic tail
  bool steeper = (low && !want_max) || (!low && want_max);
  r.step = steeper ? std::max(a.step, b.step) : std::min(a.step, b.step);
  r.canonicalize();
  return r;
}

}  // namespace

EdgeSchedule edge_pointwise_max(const EdgeSchedule& a, const EdgeSchedule& b) {
  return edge_extreme(a, b, true);
}

EdgeSchedule edge_pointwise_min(const EdgeSchedule& a, const EdgeSchedule& b) {
  return edge_extreme(a, b, false);
}

// ---------------------------------------------------------------------------
// chains

ChainSchedule ChainSchedule::constant(const ThickDescriptor& c) {
  ChainSchedule s;
  s.ring = c.ring;
  s.tail = TailKind::Constant;
  s.tail_const = c;
  s.extra_points = PointSet::none(FieldDescriptor::rational());
  validate_chain(s);
  return s;
}

ChainSchedule ChainSchedule::prefix_then_constant(
    std::vector<ThickDescriptor> pre, const ThickDescriptor& c) {
  ChainSchedule s;
  s.ring = c.ring;
  s.prefix = std::move(pre);
  s.tail = TailKind::Constant;
  s.tail_const = c;
  s.extra_points = PointSet::none(FieldDescriptor::rational());
  validate_chain(s);
  s.canonicalize();
  return s;
}

ChainSchedule ChainSchedule::prime_tail(const RingDescriptor& r,
                                        long long step, long long offset,
                                        const PrimeSet& extra) {
  ChainSchedule s;
  s.ring = r;
  s.tail = TailKind::PrimeTail;
  s.tail_step = step;
  s.tail_offset = offset;
  s.extra_primes = extra;
  s.tail_const = ThickDescriptor::zero(r);
  s.extra_points = PointSet::none(FieldDescriptor::rational());
  validate_chain(s);
  s.canonicalize();
  return s;
}

ChainSchedule ChainSchedule::tube_tail(const RingDescriptor& r, long long step,
                                       long long offset) {
  require(r.kind == RingKind::Kronecker, Err::WrongRing,
          "tube tails live over the Kronecker algebra");
  ChainSchedule s;
  s.ring = r;
  s.tail = TailKind::TubeTail;
  s.tail_step = step;
  s.tail_offset = offset;
  s.extra_points = PointSet::none(r.field);
  s.tail_const = ThickDescriptor::zero(r);
  validate_chain(s);
  s.canonicalize();
  return s;
}

namespace {

ThickDescriptor chain_tail_value(const ChainSchedule& c, long long n) {
  switch (c.tail) {
    case ChainSchedule::TailKind::Constant:
      return c.tail_const;
    case ChainSchedule::TailKind::PrimeTail: {
      long long cut = std::max(0LL, c.tail_step * n + c.tail_offset);
      return ThickDescriptor::torsion(
          c.ring, c.extra_primes.set_union(PrimeSet::tail(cut)));
    }
    case ChainSchedule::TailKind::TubeTail: {
      long long cut = std::max(0LL, c.tail_step * n + c.tail_offset);
      return ThickDescriptor::regular_part(
          c.ring, c.extra_points.set_union(
                      PointSet::tail_union(c.ring.field, {}, cut)));
    }
  }
  raise(Err::InvalidSchedule, "unknown tail kind");
}

}  // namespace

ThickDescriptor ChainSchedule::at(long long n) const {
  check_ball_index(n);
  if (n <= (long long)prefix.size()) return prefix[n - 1];
  return chain_tail_value(*this, n);
}

ThickDescriptor ChainSchedule::limit() const {
  switch (tail) {
    case TailKind::Constant: return tail_const;
    case TailKind::PrimeTail:
      return ThickDescriptor::torsion(ring, extra_primes);
    case TailKind::TubeTail:
      return ThickDescriptor::regular_part(ring, extra_points);
  }
  raise(Err::InvalidSchedule, "unknown tail kind");
}

std::optional<ThickDescriptor> ChainSchedule::eventually_constant() const {
  if (tail == TailKind::Constant) return tail_const;
  return std::nullopt;
}

long long ChainSchedule::horizon() const {
  long long h = (long long)prefix.size() + 2;
  if (tail == TailKind::Constant) {
    h += descriptor_datum(tail_const);
  } else {
    h += std::llabs(tail_offset) + tail_step;
    if (tail == TailKind::PrimeTail)
      h += prime_set_datum(extra_primes);
    else
      h += point_set_datum(extra_points);
    if (tail == TailKind::TubeTail && ring.field.kind == FieldKind::Finite)
      h += ring.field.q + 2;
  }
  if (ring.kind == RingKind::LocalizedIntegerRing)
    h += prime_set_datum(ring.inverted);
  return h;
}

void ChainSchedule::canonicalize() {
  // fold tails that stop moving: an absorbing extra set, or a finite-field
  // enumeration that the cutoff walks off
  if (tail != TailKind::Constant) {
    if (ring.kind == RingKind::LocalizedIntegerRing &&
        tail == TailKind::PrimeTail)
      extra_primes = extra_primes.set_intersect(ring.inverted.complement());
    bool absorbing =
        tail == TailKind::PrimeTail
            ? extra_primes.cofinite
            : (extra_points.kind == PointSet::Kind::Cofinite ||
               extra_points.kind == PointSet::Kind::TailUnion);
    bool dies = tail == TailKind::TubeTail &&
                ring.field.kind == FieldKind::Finite;
    if (absorbing || dies) {
      long long h = horizon();
      std::vector<ThickDescriptor> pre;
      for (long long n = 1; n <= h; ++n) pre.push_back(at(n));
      prefix = std::move(pre);
      tail_const = limit();
      tail = TailKind::Constant;
      tail_step = 1;
      tail_offset = 0;
    }
  }
  while (!prefix.empty()) {
    ChainSchedule probe = *this;
    probe.prefix.pop_back();
    if (probe.at((long long)prefix.size()) == prefix.back())
      prefix.pop_back();
    else
      break;
  }
}

bool ChainSchedule::operator==(const ChainSchedule& o) const {
  if (ring != o.ring || prefix != o.prefix || tail != o.tail) return false;
  switch (tail) {
    case TailKind::Constant: return tail_const == o.tail_const;
    case TailKind::PrimeTail:
      return tail_step == o.tail_step && tail_offset == o.tail_offset &&
             extra_primes == o.extra_primes;
    case TailKind::TubeTail:
      return tail_step == o.tail_step && tail_offset == o.tail_offset &&
             extra_points == o.extra_points;
  }
  return false;
}

std::string ChainSchedule::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < prefix.size(); ++i)
    os << (i ? ", " : "") << prefix[i].str();
  os << (prefix.empty() ? "" : "; ");
  switch (tail) {
    case TailKind::Constant:
      os << "const " << tail_const.str();
      break;
    case TailKind::PrimeTail:
      os << "Torsion{p >= " << tail_step << "n" << std::showpos << tail_offset
         << std::noshowpos << "}";
      if (!extra_primes.is_empty()) os << " + " << extra_primes.str();
      break;
    case TailKind::TubeTail:
      os << "Regular{index >= " << tail_step << "n" << std::showpos
         << tail_offset << std::noshowpos << "}";
      if (!extra_points.is_empty()) os << " + " << extra_points.str();
      break;
  }
  os << "]";
  return os.str();
}

namespace {

long long chain_pair_horizon(const ChainSchedule& a, const ChainSchedule& b) {
  return a.horizon() + b.horizon() + 4;
}

bool both_moving_same(const ChainSchedule& a, const ChainSchedule& b) {
  return a.tail != ChainSchedule::TailKind::Constant && a.tail == b.tail;
}

// pointwise meet or join of two descending schedules over one ring
ChainSchedule chain_combine(const ChainSchedule& a, const ChainSchedule& b,
                            bool is_join) {
  require(a.ring == b.ring, Err::MixedRings,
          "chain lattice operations need a common ring");
  auto op = [&](const ThickDescriptor& x, const ThickDescriptor& y) {
    return is_join ? join(x, y) : meet(x, y);
  };
  long long h = chain_pair_horizon(a, b);
  ChainSchedule r;
  r.ring = a.ring;
  r.extra_points = PointSet::none(a.ring.over_field_algebra()
                                      ? a.ring.field
                                      : FieldDescriptor::rational());
  for (long long n = 1; n <= h; ++n) r.prefix.push_back(op(a.at(n), b.at(n)));
  auto ca = a.eventually_constant();
  auto cb = b.eventually_constant();
  auto moving_vs_const = [&](const ChainSchedule& t, const ThickDescriptor& c) {
    // beyond the horizon the moving part and the constant interact only
    // through the extra set and whether c absorbs deep tails
    ThickDescriptor lim = op(t.limit(), c);
    bool keep_tail;
    if (is_join)
      keep_tail = !swallows_tails(c, t.tail) &&
                  (lim.kind == ThickDescriptor::Kind::Zero ||
                   lim.kind == ThickDescriptor::Kind::Torsion ||
                   lim.kind == ThickDescriptor::Kind::RegularPart);
    else
      keep_tail = swallows_tails(c, t.tail);
    if (keep_tail) {
      r.tail = t.tail;
      r.tail_step = t.tail_step;
      r.tail_offset = t.tail_offset;
      if (t.tail == ChainSchedule::TailKind::PrimeTail)
        r.extra_primes = prime_part(lim);
      else
        r.extra_points = point_part(lim, t.ring.field);
    } else {
      r.tail = ChainSchedule::TailKind::Constant;
      r.tail_const = lim;
    }
  };
  if (ca && cb) {
    r.tail = ChainSchedule::TailKind::Constant;
    r.tail_const = op(*ca, *cb);
  } else if (cb) {
    moving_vs_const(a, *cb);
  } else if (ca) {
    moving_vs_const(b, *ca);
  } else {
    require(both_moving_same(a, b), Err::NotRepresentable,
            "mixed moving tails over one ring");
    ThickDescriptor lim = op(a.limit(), b.limit());
    // join keeps the lower cutoff, meet the higher one
    bool pick_a;
    if (a.tail_step != b.tail_step)
      pick_a = is_join ? a.tail_step < b.tail_step : a.tail_step > b.tail_step;
    else
      pick_a = is_join ? a.tail_offset <= b.tail_offset
                       : a.tail_offset >= b.tail_offset;
    const ChainSchedule& t = pick_a ? a : b;
    r.tail = t.tail;
    r.tail_step = t.tail_step;
    r.tail_offset = t.tail_offset;
    if (t.tail == ChainSchedule::TailKind::PrimeTail)
      r.extra_primes = prime_part(lim);
    else
      r.extra_points = point_part(lim, t.ring.field);
  }
  r.canonicalize();
  return r;
}

long long gcdll(long long a, long long b) { return std::gcd(a, b); }

// whether {step*n + t : n large, offset_b <= t < offset_a ... } misses all
// primes: every residue in the window shares a factor with the step
bool prime_window_empty(long long step, long long off_lo, long long off_hi) {
  for (long long t = off_lo; t < off_hi; ++t) {
    long long r = ((t % step) + step) % step;
    if (gcdll(r, step) == 1) return false;
  }
  return true;
}

}  // namespace

ChainSchedule chain_meet(const ChainSchedule& a, const ChainSchedule& b) {
  return chain_combine(a, b, false);
}

ChainSchedule chain_join(const ChainSchedule& a, const ChainSchedule& b) {
  return chain_combine(a, b, true);
}

bool chain_leq_pointwise(const ChainSchedule& a, const ChainSchedule& b) {
  require(a.ring == b.ring, Err::MixedRings,
          "chain comparison needs a common ring");
  long long h = chain_pair_horizon(a, b);
  for (long long n = 1; n <= h + 1; ++n)
    if (!leq(a.at(n), b.at(n))) return false;
  auto ca = a.eventually_constant();
  auto cb = b.eventually_constant();
  if (cb) return true;  // a.at(h+1) <= cb and a only descends
  if (ca) return leq(*ca, b.limit());
  if (!leq(a.limit(), b.limit())) return false;
  if (a.tail_step < b.tail_step) return false;
  if (a.tail_step > b.tail_step) return true;
  if (a.tail_offset >= b.tail_offset) return true;
  // same step, a's cutoff sits below b's: a's tail is strictly wider unless
  // the gap window never meets the index stream
  if (a.tail == ChainSchedule::TailKind::PrimeTail)
    return prime_window_empty(a.tail_step, a.tail_offset, b.tail_offset);
  return false;  // every tube index is realized
}

bool eventually_leq(const ChainSchedule& a, const ThickDescriptor& b) {
  if (auto c = a.eventually_constant()) return leq(*c, b);
  return leq(a.limit(), b) && swallows_tails(b, a.tail);
}

// ---------------------------------------------------------------------------
// normal forms

namespace {

void validate_metric(MetricNF& m) {
  require(m.low.low_side && !m.high.low_side, Err::InvalidSchedule,
          "window sides are swapped");
  validate_edge(m.low);
  validate_edge(m.high);
  require(m.down.ring == m.ring && m.up.ring == m.ring &&
              m.inner.ring == m.ring,
          Err::MixedRings, "chains over a different ring");
  // an unconstrained side has no own zone; its chain mirrors the middle
  if (m.low.infinite) m.down = m.inner;
  if (m.high.infinite) m.up = m.inner;
  validate_chain(m.down);
  validate_chain(m.up);
  validate_chain(m.inner);
  require(chain_leq_pointwise(m.inner, m.down), Err::InvalidSchedule,
          "middle chain must refine the low chain");
  require(chain_leq_pointwise(m.inner, m.up), Err::InvalidSchedule,
          "middle chain must refine the high chain");
  m.low.canonicalize();
  m.high.canonicalize();
  m.down.canonicalize();
  m.up.canonicalize();
  m.inner.canonicalize();
}

}  // namespace

ThickDescriptor MetricNF::allowed(long long degree, long long n) const {
  check_ball_index(n);
  auto lo = low.at(n);
  auto hi = high.at(n);
  if (lo && degree <= *lo) return down.at(n);
  if (hi && degree > *hi) return up.at(n);
  return inner.at(n);
}

std::string MetricNF::str() const {
  std::ostringstream os;
  os << "window(" << low.str() << " | " << high.str() << ")";
  os << " low " << down.str() << " mid " << inner.str() << " high "
     << up.str();
  return os.str();
}

MetricNF mk_constant(const ThickDescriptor& c) {
  MetricNF m;
  m.ring = c.ring;
  m.low = EdgeSchedule::unbounded(true);
  m.high = EdgeSchedule::unbounded(false);
  m.inner = ChainSchedule::constant(c);
  m.down = m.inner;
  m.up = m.inner;
  validate_metric(m);
  return m;
}

MetricNF mk_aisle(const RingDescriptor& r) {
  MetricNF m;
  m.ring = r;
  m.low = EdgeSchedule::arithmetic(true, -1, 1);
  m.high = EdgeSchedule::unbounded(false);
  m.down = ChainSchedule::constant(ThickDescriptor::all(r));
  m.inner = ChainSchedule::constant(ThickDescriptor::zero(r));
  m.up = m.inner;
  validate_metric(m);
  return m;
}

MetricNF mk_coaisle(const RingDescriptor& r) {
  MetricNF m;
  m.ring = r;
  m.low = EdgeSchedule::unbounded(true);
  m.high = EdgeSchedule::arithmetic(false, 1, 1);
  m.up = ChainSchedule::constant(ThickDescriptor::all(r));
  m.inner = ChainSchedule::constant(ThickDescriptor::zero(r));
  m.down = m.inner;
  validate_metric(m);
  return m;
}

MetricNF mk_t_structure(const RingDescriptor& r) {
  MetricNF m;
  m.ring = r;
  m.low = EdgeSchedule::arithmetic(true, -1, 1);
  m.high = EdgeSchedule::arithmetic(false, 1, 1);
  m.down = ChainSchedule::constant(ThickDescriptor::all(r));
  m.up = m.down;
  m.inner = ChainSchedule::constant(ThickDescriptor::zero(r));
  validate_metric(m);
  return m;
}

MetricNF mk_nf(const RingDescriptor& r, const EdgeSchedule& low,
               const EdgeSchedule& high, const ChainSchedule& chain) {
  ChainSchedule all = ChainSchedule::constant(ThickDescriptor::all(r));
  return mk_nf_full(r, low, high, all, all, chain);
}

MetricNF mk_nf_full(const RingDescriptor& r, const EdgeSchedule& low,
                    const EdgeSchedule& high, const ChainSchedule& down,
                    const ChainSchedule& up, const ChainSchedule& inner) {
  MetricNF m;
  m.ring = r;
  m.low = low;
  m.high = high;
  m.down = down;
  m.up = up;
  m.inner = inner;
  validate_metric(m);
  return m;
}

// ---------------------------------------------------------------------------
// ball membership

BallMembership ball_contains(const MetricNF& m, long long n,
                             const SplitObject& x) {
  check_ball_index(n);
  require(x.ring == m.ring, Err::MixedRings,
          "object over a different ring");
  auto lo = m.low.at(n);
  auto hi = m.high.at(n);
  bool saw_boundary = false;
  std::string boundary_note;
  for (const auto& [deg, mod] : x.summands) {
    ThickDescriptor d = m.allowed(deg, n);
    if (contains_module(d, mod)) continue;
    bool near_edge = (lo && (deg == *lo || deg == *lo + 1)) ||
                     (hi && (deg == *hi || deg == *hi + 1));
    std::ostringstream os;
    os << "H^" << deg << " summand " << mod.str() << " is outside "
       << d.str();
    if (m.ring.is_integerish() || !near_edge) {
      // over Z the degreewise parts are Serre subcategories, so the
      // extension closure adds nothing; over the quiver algebras a summand
      // two or more degrees inside a zone cannot be produced by boundary
      // extensions either
      return {BallMembership::Verdict::Out, os.str()};
    }
    saw_boundary = true;
    if (boundary_note.empty())
      boundary_note = os.str() + " but sits within one degree of the window";
  }
  if (saw_boundary)
    return {BallMembership::Verdict::BoundaryUnknown, boundary_note};
  return {BallMembership::Verdict::In, ""};
}

// ---------------------------------------------------------------------------
// lattice operations

namespace {

// chain of values the operand contributes to the outer zone of a meet:
// its own outer chain where its window side touches the common window,
// its middle chain where the common window cuts strictly inside
ChainSchedule meet_zone_contribution(const MetricNF& op,
                                     const EdgeSchedule& edge_p,
                                     bool low_side) {
  const EdgeSchedule& own = low_side ? op.low : op.high;
  const ChainSchedule& outer = low_side ? op.down : op.up;
  if (own == edge_p) return outer;
  if (own.infinite) return op.inner;  // never touches a finite common edge
  long long h = edge_pair_horizon(own, edge_p) + outer.horizon() +
                op.inner.horizon();
  ChainSchedule r;
  r.ring = op.ring;
  r.extra_points = PointSet::none(op.ring.over_field_algebra()
                                      ? op.ring.field
                                      : FieldDescriptor::rational());
  auto touches = [&](long long n) { return own.at(n) == edge_p.at(n); };
  for (long long n = 1; n <= h; ++n)
    r.prefix.push_back(touches(n) ? outer.at(n) : op.inner.at(n));
  const ChainSchedule& src = touches(h + 1) ? outer : op.inner;
  r.tail = src.tail;
  r.tail_const = src.tail_const;
  r.tail_step = src.tail_step;
  r.tail_offset = src.tail_offset;
  r.extra_primes = src.extra_primes;
  if (src.tail == ChainSchedule::TailKind::TubeTail)
    r.extra_points = src.extra_points;
  // splicing two chains of one operand can bump early values upward; pad
  // them up to restore descent (the lattice order ignores finitely many
  // levels, containment is checked from the stable regime on)
  ThickDescriptor acc = r.at((long long)r.prefix.size() + 1);
  for (size_t i = r.prefix.size(); i-- > 0;) {
    r.prefix[i] = join(r.prefix[i], acc);
    acc = r.prefix[i];
  }
  r.canonicalize();
  return r;
}

}  // namespace

MetricNF meet(const MetricNF& a, const MetricNF& b) {
  require(a.ring == b.ring, Err::MixedRings,
          "lattice operations need a common ring");
  EdgeSchedule lo = edge_pointwise_max(a.low, b.low);
  EdgeSchedule hi = edge_pointwise_min(a.high, b.high);
  ChainSchedule down = chain_meet(meet_zone_contribution(a, lo, true),
                                  meet_zone_contribution(b, lo, true));
  ChainSchedule up = chain_meet(meet_zone_contribution(a, hi, false),
                                meet_zone_contribution(b, hi, false));
  ChainSchedule inner = chain_meet(a.inner, b.inner);
  return mk_nf_full(a.ring, lo, hi, down, up, inner);
}

MetricNF join(const MetricNF& a, const MetricNF& b) {
  require(a.ring == b.ring, Err::MixedRings,
          "lattice operations need a common ring");
  EdgeSchedule lo = edge_pointwise_max(a.low, b.low);
  EdgeSchedule hi = edge_pointwise_min(a.high, b.high);
  // on the common outer zones each operand is bounded by its outer chain,
  // on the common middle by its middle chain
  ChainSchedule down = chain_join(a.down, b.down);
  ChainSchedule up = chain_join(a.up, b.up);
  ChainSchedule inner = chain_join(a.inner, b.inner);
  return mk_nf_full(a.ring, lo, hi, down, up, inner);
}

// ---------------------------------------------------------------------------
// the finer order

bool finer_leq(const MetricNF& a, const MetricNF& b) {
  require(a.ring == b.ring, Err::MixedRings,
          "metric comparison needs a common ring");
  // deep in each zone the ball of a at a late level must fit degreewise
  // into the ball of b at level n; window edges always drift far enough,
  // so only the three chain comparisons remain
  long long h = std::max({b.down.horizon(), b.inner.horizon(),
                          b.up.horizon()}) +
                2;
  auto zone_ok = [&](const ChainSchedule& ca, const ChainSchedule& cb) {
    for (long long n = 1; n <= h; ++n)
      if (!eventually_leq(ca, cb.at(n))) return false;
    if (cb.eventually_constant()) return true;  // covered by the loop
    return leq(ca.limit(), cb.limit());
  };
  return zone_ok(a.down, b.down) && zone_ok(a.inner, b.inner) &&
         zone_ok(a.up, b.up);
}

bool equivalent(const MetricNF& a, const MetricNF& b) {
  return finer_leq(a, b) && finer_leq(b, a);
}

MetricNF t_submetric(const MetricNF& m) {
  return meet(m, mk_t_structure(m.ring));
}

ThickDescriptor kernel_B(const MetricNF& m) {
  // every fixed degree lands in the middle zone from some level on
  return m.inner.limit();
}

bool converges_uniformly(const MetricNF& m) {
  return m.inner.eventually_constant().has_value();
}

}  // namespace metcomp
