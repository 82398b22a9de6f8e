#include "metcomp/cauchy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace metcomp {

namespace {

// class in the Grothendieck group: rank over Z (torsion vanishes there),
// dimension vector over the Kronecker algebra, per-vertex dimensions for An
std::vector<long long> k0_of_module(const RingDescriptor& ring,
                                    const Indecomposable& m) {
  if (ring.is_integerish())
    return {m.kind == IndKind::ZFree ? 1LL : 0LL};
  if (ring.kind == RingKind::Kronecker) {
    switch (m.kind) {
      case IndKind::Preprojective:
        return {m.n + 1, m.n};
      case IndKind::Preinjective:
        return {m.n, m.n + 1};
      case IndKind::Regular:
        return {m.qlen, m.qlen};
      default:
        raise(Err::InvalidDescriptor, "not a Kronecker module");
    }
  }
  std::vector<long long> v((size_t)ring.vertex_count(), 0);
  for (long long i = m.a; i <= m.b; ++i) v[(size_t)(i - 1)] += 1;
  return v;
}

std::vector<long long> k0_class(const RingDescriptor& ring,
                                const SplitObject& x) {
  size_t dim = ring.is_integerish()
                   ? 1
                   : (ring.kind == RingKind::Kronecker
                          ? 2
                          : (size_t)ring.vertex_count());
  std::vector<long long> v(dim, 0);
  for (const auto& [deg, m] : x.summands) {
    long long sign = ((deg % 2) + 2) % 2 == 0 ? 1 : -1;
    std::vector<long long> w = k0_of_module(ring, m);
    for (size_t i = 0; i < dim; ++i) v[i] += sign * w[i];
  }
  return v;
}

// matrix witnesses list their modules in the entry's normalized order, so
// each row and column carries the degree of its summand
void require_aligned(const SplitObject& e,
                     const std::vector<Indecomposable>& mods) {
  require(e.summands.size() == mods.size(), Err::InvalidDescriptor,
          "witness modules do not match the entry");
  for (size_t i = 0; i < mods.size(); ++i)
    require(e.summands[i].second.str() == mods[i].str(),
            Err::InvalidDescriptor,
            "witness modules must list the entry's summands in order");
}

// (offset, size) of every summand's block inside the stacked matrices
template <class F>
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
kron_spans(const F& fld, const std::vector<Indecomposable>& mods) {
  std::vector<std::pair<int, int>> s2, s1;
  int o2 = 0, o1 = 0;
  for (const auto& m : mods) {
    KronRep<F> r = canonical_rep(fld, m);
    s2.push_back({o2, r.d2()});
    o2 += r.d2();
    s1.push_back({o1, r.d1()});
    o1 += r.d1();
  }
  return {s2, s1};
}

template <class F>
bool kron_block_nonzero(const F& fld, const Matrix<F>& m,
                        std::pair<int, int> rows, std::pair<int, int> cols) {
  for (int i = 0; i < rows.second; ++i)
    for (int j = 0; j < cols.second; ++j)
      if (!fld.is_zero(m.at(rows.first + i, cols.first + j))) return true;
  return false;
}

template <class F>
void check_graded_kron(const F& fld, const SplitObject& a,
                       const SplitObject& b, const ModuleMap& f,
                       const KronMapData<F>& data) {
  auto [s2, s1] = kron_spans(fld, f.source);
  auto [t2, t1] = kron_spans(fld, f.target);
  for (size_t i = 0; i < f.target.size(); ++i)
    for (size_t j = 0; j < f.source.size(); ++j) {
      if (b.summands[i].first == a.summands[j].first) continue;
      require(!kron_block_nonzero(fld, data.f2, t2[i], s2[j]) &&
                  !kron_block_nonzero(fld, data.f1, t1[i], s1[j]),
              Err::InvalidDescriptor,
              "a degree-0 witness cannot connect summands in different "
              "degrees");
    }
}

// blockwise validity: a degree-0 map of split objects is a direct sum of
// module maps, one per degree, so cross-degree blocks must vanish
void validate_graded(const SplitObject& a, const SplitObject& b,
                     const ModuleMap& f) {
  require_aligned(a, f.source);
  require_aligned(b, f.target);
  if (std::holds_alternative<IMat>(f.data)) {
    const IMat& m0 = std::get<IMat>(f.data);
    for (size_t i = 0; i < f.target.size(); ++i)
      for (size_t j = 0; j < f.source.size(); ++j)
        require(b.summands[i].first == a.summands[j].first ||
                    m0.at((int)i, (int)j) == 0,
                Err::InvalidDescriptor,
                "a degree-0 witness cannot connect summands in different "
                "degrees");
    return;
  }
  if (std::holds_alternative<KronMapData<RatField>>(f.data)) {
    check_graded_kron(RatField{}, a, b, f,
                      std::get<KronMapData<RatField>>(f.data));
    return;
  }
  if (std::holds_alternative<KronMapData<GFField>>(f.data)) {
    GFField fld{&gf_table_for_order(f.ring.field.q)};
    check_graded_kron(fld, a, b, f, std::get<KronMapData<GFField>>(f.data));
    return;
  }
  raise(Err::NonIntertwining, "module map carries no matrix data");
}

// restriction of a map to chosen source columns and target rows
template <class F>
ModuleMap kron_submap(const F& fld, const RingDescriptor& ring,
                      const ModuleMap& f, const KronMapData<F>& data,
                      const std::vector<int>& ks, const std::vector<int>& kt,
                      std::vector<Indecomposable> ns,
                      std::vector<Indecomposable> nt) {
  auto [s2, s1] = kron_spans(fld, f.source);
  auto [t2, t1] = kron_spans(fld, f.target);
  auto expand = [](const std::vector<std::pair<int, int>>& sp,
                   const std::vector<int>& kept) {
    std::vector<int> idx;
    for (int k : kept)
      for (int i = 0; i < sp[(size_t)k].second; ++i)
        idx.push_back(sp[(size_t)k].first + i);
    return idx;
  };
  std::vector<int> c2 = expand(s2, ks), c1 = expand(s1, ks);
  std::vector<int> r2 = expand(t2, kt), r1 = expand(t1, kt);
  auto take = [&](const Matrix<F>& m0, const std::vector<int>& ri,
                  const std::vector<int>& ci) {
    Matrix<F> sub = mat_zero(fld, (int)ri.size(), (int)ci.size());
    for (size_t i = 0; i < ri.size(); ++i)
      for (size_t j = 0; j < ci.size(); ++j)
        sub.at((int)i, (int)j) = m0.at(ri[i], ci[j]);
    return sub;
  };
  Matrix<F> f2 = take(data.f2, r2, c2);
  Matrix<F> f1 = take(data.f1, r1, c1);
  if constexpr (std::is_same_v<F, RatField>)
    return ModuleMap::kron_map_rat(ring, std::move(ns), std::move(nt),
                                   std::move(f2), std::move(f1));
  else
    return ModuleMap::kron_map_gf(ring, std::move(ns), std::move(nt),
                                  std::move(f2), std::move(f1));
}

ModuleMap submap(const RingDescriptor& ring, const ModuleMap& f,
                 const std::vector<int>& ks, const std::vector<int>& kt) {
  std::vector<Indecomposable> ns, nt;
  for (int j : ks) ns.push_back(f.source[(size_t)j]);
  for (int i : kt) nt.push_back(f.target[(size_t)i]);
  if (std::holds_alternative<IMat>(f.data)) {
    const IMat& m0 = std::get<IMat>(f.data);
    IMat sub((int)kt.size(), (int)ks.size());
    for (size_t i = 0; i < kt.size(); ++i)
      for (size_t j = 0; j < ks.size(); ++j)
        sub.at((int)i, (int)j) = m0.at(kt[i], ks[j]);
    return ModuleMap::z_map(ring, std::move(ns), std::move(nt),
                            std::move(sub));
  }
  if (std::holds_alternative<KronMapData<RatField>>(f.data))
    return kron_submap(RatField{}, ring, f,
                       std::get<KronMapData<RatField>>(f.data), ks, kt,
                       std::move(ns), std::move(nt));
  if (std::holds_alternative<KronMapData<GFField>>(f.data)) {
    GFField fld{&gf_table_for_order(ring.field.q)};
    return kron_submap(fld, ring, f, std::get<KronMapData<GFField>>(f.data),
                       ks, kt, std::move(ns), std::move(nt));
  }
  raise(Err::NonIntertwining, "module map carries no matrix data");
}

// a declared cone must match the class [b] - [a] and can only carry
// cohomology where the triangle allows it: H^d(cone) sits between H^d(b)
// and H^{d+1}(a)
void validate_formal(const RingDescriptor& ring, const SplitObject& a,
                     const SplitObject& b, const SplitObject& cone) {
  require(cone.ring == ring, Err::MixedRings,
          "declared cone over a different ring");
  std::vector<long long> want = k0_class(ring, b);
  std::vector<long long> ka = k0_class(ring, a);
  for (size_t i = 0; i < want.size(); ++i) want[i] -= ka[i];
  require(k0_class(ring, cone) == want, Err::UnverifiableWitness,
          "declared cone has the wrong class in the Grothendieck group");
  for (const auto& [d, m] : cone.summands) {
    bool allowed = false;
    for (const auto& [db, mb] : b.summands)
      if (db == d) allowed = true;
    for (const auto& [da, ma] : a.summands)
      if (da == d + 1) allowed = true;
    require(allowed, Err::UnverifiableWitness,
            "declared cone carries cohomology in a degree the triangle "
            "cannot reach");
  }
}

void validate_witness(const RingDescriptor& ring, const SplitObject& a,
                      const SplitObject& b, const MapWitness& w) {
  switch (w.kind) {
    case MapWitness::Kind::Matrix: {
      require(w.map.has_value(), Err::InvalidDescriptor,
              "matrix witness without matrix data");
      require(w.map->ring == ring, Err::MixedRings,
              "witness map over a different ring");
      validate_graded(a, b, *w.map);
      return;
    }
    case MapWitness::Kind::Multiplication: {
      require(ring.is_integerish(), Err::WrongRing,
              "multiplication witnesses live over Z");
      for (const auto& [d, m] : a.summands)
        require(m.kind == IndKind::ZFree, Err::InvalidDescriptor,
                "multiplication witnesses need free entries");
      require(a == b, Err::InvalidDescriptor,
              "multiplication preserves the entry");
      return;
    }
    case MapWitness::Kind::FormalCone:
      validate_formal(ring, a, b, w.declared_cone);
      return;
  }
  raise(Err::InvalidDescriptor, "unknown witness kind");
}

std::string join_strs(const std::vector<Indecomposable>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " + ";
    s += v[i].str();
  }
  return s.empty() ? "0" : s;
}

const char* verdict_name(BallMembership::Verdict v) {
  switch (v) {
    case BallMembership::Verdict::In:
      return "in";
    case BallMembership::Verdict::Out:
      return "out";
    case BallMembership::Verdict::BoundaryUnknown:
      return "boundary-unknown";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// witnesses and sequences

MapWitness MapWitness::matrix(ModuleMap f) {
  MapWitness w;
  w.kind = Kind::Matrix;
  w.map = std::move(f);
  return w;
}

MapWitness MapWitness::multiplication(long long c) {
  MapWitness w;
  w.kind = Kind::Multiplication;
  w.factor = c;
  return w;
}

MapWitness MapWitness::formal_cone(SplitObject cone) {
  MapWitness w;
  w.kind = Kind::FormalCone;
  w.declared_cone = std::move(cone);
  return w;
}

std::string MapWitness::str() const {
  switch (kind) {
    case Kind::Matrix:
      return "matrix map [" + join_strs(map->source) + "] -> [" +
             join_strs(map->target) + "]";
    case Kind::Multiplication:
      return "multiplication by " + std::to_string(factor);
    case Kind::FormalCone:
      return "declared cone " + declared_cone.str();
  }
  return "?";
}

ObjectSequence ObjectSequence::of(const RingDescriptor& ring,
                                  std::vector<SplitObject> entries,
                                  std::vector<MapWitness> maps) {
  require(!entries.empty(), Err::InvalidDescriptor,
          "a sequence needs at least one entry");
  require(maps.size() + 1 == entries.size(), Err::InvalidDescriptor,
          "a sequence with k+1 entries needs exactly k maps");
  for (const auto& e : entries)
    require(e.ring == ring, Err::MixedRings, "entry over a different ring");
  for (size_t i = 0; i < maps.size(); ++i)
    validate_witness(ring, entries[i], entries[i + 1], maps[i]);
  ObjectSequence s;
  s.ring = ring;
  s.entries = std::move(entries);
  s.maps = std::move(maps);
  return s;
}

std::string ObjectSequence::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << "  ->  ";
    os << entries[i].str();
  }
  for (size_t i = 0; i < maps.size(); ++i)
    os << "\n  e_" << (i + 1) << ": " << maps[i].str();
  return os.str();
}

SplitObject cone_at(const ObjectSequence& seq, long long n) {
  require(n >= 1 && n <= seq.length(), Err::BoundsExceeded,
          "map index out of range");
  const MapWitness& w = seq.maps[(size_t)n - 1];
  const SplitObject& a = seq.entries[(size_t)n - 1];
  const SplitObject& b = seq.entries[(size_t)n];
  switch (w.kind) {
    case MapWitness::Kind::Matrix: {
      std::set<long long> degs;
      for (const auto& [d, m] : a.summands) degs.insert(d);
      for (const auto& [d, m] : b.summands) degs.insert(d);
      SplitObject total = SplitObject::zero(seq.ring);
      for (long long d : degs) {
        std::vector<int> ks, kt;
        for (size_t j = 0; j < a.summands.size(); ++j)
          if (a.summands[j].first == d) ks.push_back((int)j);
        for (size_t i = 0; i < b.summands.size(); ++i)
          if (b.summands[i].first == d) kt.push_back((int)i);
        ModuleMap block = submap(seq.ring, *w.map, ks, kt);
        total = total.direct_sum(shift(cone_of_module_map(block), -d));
      }
      return total;
    }
    case MapWitness::Kind::Multiplication: {
      SplitObject total = SplitObject::zero(seq.ring);
      std::map<long long, int> by_deg;
      for (const auto& [d, m] : a.summands) by_deg[d] += 1;
      for (const auto& [d, k] : by_deg) {
        ModuleMap f = ModuleMap::multiplication(seq.ring, w.factor, k);
        total = total.direct_sum(shift(cone_of_module_map(f), -d));
      }
      return total;
    }
    case MapWitness::Kind::FormalCone:
      validate_formal(seq.ring, a, b, w.declared_cone);
      return w.declared_cone;
  }
  raise(Err::InvalidDescriptor, "unknown witness kind");
}

// ---------------------------------------------------------------------------
// cauchy certification

std::string CauchyCertificate::str() const {
  std::ostringstream os;
  os << "horizon " << horizon;
  for (const auto& [m, nm] : stabilization)
    os << "\n  ball " << m << ": cones stay inside from index " << nm;
  for (const auto& [n, cone, mem] : cone_witnesses)
    os << "\n  cone " << n << ": " << cone.str() << " ("
       << verdict_name(mem.verdict) << ")";
  return os.str();
}

CauchyOutcome is_cauchy(const ObjectSequence& seq, const MetricNF& M,
                        long long horizon) {
  require(M.ring == seq.ring, Err::MixedRings,
          "metric over a different ring");
  require(horizon >= 1, Err::InvalidDescriptor, "horizon must be positive");
  require(horizon <= seq.length(), Err::BoundsExceeded,
          "horizon exceeds the built maps; the check is explicitly bounded");

  std::vector<SplitObject> cones;
  for (long long n = 1; n <= horizon; ++n) cones.push_back(cone_at(seq, n));

  CauchyOutcome out;
  CauchyCertificate cert;
  cert.horizon = horizon;
  std::vector<long long> stab((size_t)horizon + 1, 0);
  for (long long m = 1; m <= horizon; ++m) {
    long long nm = horizon + 1;
    BallMembership blocker;
    long long blocked_at = -1;
    for (long long n = horizon; n >= 1; --n) {
      BallMembership b = ball_contains(M, m, cones[(size_t)n - 1]);
      if (b.verdict == BallMembership::Verdict::In) {
        nm = n;
        continue;
      }
      blocker = b;
      blocked_at = n;
      break;
    }
    if (nm > horizon) {
      out.counterexample = blocked_at;
      out.ball = m;
      std::ostringstream os;
      os << "cone of map " << blocked_at << " ("
         << cones[(size_t)blocked_at - 1].str() << ") is "
         << verdict_name(blocker.verdict) << " for ball " << m;
      if (!blocker.detail.empty()) os << ": " << blocker.detail;
      out.reason = os.str();
      return out;
    }
    stab[(size_t)m] = nm;
    cert.stabilization[m] = nm;
  }
  for (long long n = 1; n <= horizon; ++n) {
    long long best = 1;
    for (long long m = 1; m <= horizon; ++m)
      if (stab[(size_t)m] <= n) best = m;
    cert.cone_witnesses.push_back(
        {n, cones[(size_t)n - 1],
         ball_contains(M, best, cones[(size_t)n - 1])});
  }
  out.cauchy = true;
  out.certificate = std::move(cert);
  return out;
}

// ---------------------------------------------------------------------------
// component sequences

namespace {

using KeepFn = std::function<bool(long long, const Indecomposable&)>;

SplitObject strip_object(const SplitObject& x, const KeepFn& keep) {
  SplitObject r = SplitObject::zero(x.ring);
  for (const auto& [d, m] : x.summands)
    if (keep(d, m)) r.summands.push_back({d, m});
  r.normalize();
  return r;
}

// rows and columns survive by the keep decision on the summand they
// correspond to in the flanking entries
MapWitness project_matrix(const RingDescriptor& ring, const SplitObject& a,
                          const SplitObject& b, const ModuleMap& f,
                          const KeepFn& keep) {
  std::vector<int> ks, kt;
  for (size_t j = 0; j < f.source.size(); ++j)
    if (keep(a.summands[j].first, f.source[j])) ks.push_back((int)j);
  for (size_t i = 0; i < f.target.size(); ++i)
    if (keep(b.summands[i].first, f.target[i])) kt.push_back((int)i);
  try {
    return MapWitness::matrix(submap(ring, f, ks, kt));
  } catch (const MathError& e) {
    raise(Err::WitnessLost,
          std::string("projected map failed validation: ") + e.what());
  }
}

ObjectSequence strip_sequence(const ObjectSequence& seq, const KeepFn& keep) {
  std::vector<SplitObject> entries;
  for (const auto& e : seq.entries) entries.push_back(strip_object(e, keep));
  std::vector<MapWitness> maps;
  for (size_t i = 0; i < seq.maps.size(); ++i) {
    const SplitObject& oa = seq.entries[i];
    const SplitObject& ob = seq.entries[i + 1];
    const SplitObject& na = entries[i];
    const SplitObject& nb = entries[i + 1];
    const MapWitness& w = seq.maps[i];
    if (oa == na && ob == nb) {
      maps.push_back(w);
      continue;
    }
    switch (w.kind) {
      case MapWitness::Kind::Matrix:
        maps.push_back(project_matrix(seq.ring, oa, ob, *w.map, keep));
        break;
      case MapWitness::Kind::Multiplication:
        // free summands are kept or dropped uniformly, the factor survives
        maps.push_back(w);
        break;
      case MapWitness::Kind::FormalCone:
        // without map data the restricted cone is only known when one side
        // dies: cone(0 -> Y) = Y, cone(X -> 0) = shifted X
        if (na.is_zero())
          maps.push_back(MapWitness::formal_cone(nb));
        else if (nb.is_zero())
          maps.push_back(MapWitness::formal_cone(shift(na, 1)));
        else
          raise(Err::WitnessLost,
                "a declared cone cannot be projected without map data");
        break;
    }
  }
  return ObjectSequence::of(seq.ring, std::move(entries), std::move(maps));
}

}  // namespace

ObjectSequence trivialize(const ObjectSequence& seq,
                          const ThickDescriptor& B) {
  require(B.ring == seq.ring, Err::MixedRings,
          "class over a different ring");
  return strip_sequence(seq, [&](long long, const Indecomposable& m) {
    return !contains_module(B, m);
  });
}

ObjectSequence bound_cohomology(const ObjectSequence& seq, long long low,
                                long long high) {
  require(low <= high + 1, Err::InvalidDescriptor,
          "empty cohomology window");
  return strip_sequence(seq, [&](long long d, const Indecomposable&) {
    return low <= d && d <= high + 1;
  });
}

// ---------------------------------------------------------------------------
// small object chains

namespace {

// finite sets cycle; infinite ones are visited in growing blocks of the
// ascending enumeration, so every member recurs infinitely often
std::vector<long long> prime_schedule(const PrimeSet& s, long long steps) {
  if (s.is_empty()) return {};
  std::vector<long long> out;
  if (!s.cofinite) {
    std::vector<long long> base(s.elems.begin(), s.elems.end());
    for (long long t = 0; t < steps; ++t)
      out.push_back(base[(size_t)(t % (long long)base.size())]);
    return out;
  }
  auto nth_in_s = [&](long long i) {
    long long k = 0, seen = -1;
    while (true) {
      long long p = nth_prime(k++);
      if (s.contains(p) && ++seen == i) return p;
    }
  };
  long long block = 1, pos = 0;
  for (long long t = 0; t < steps; ++t) {
    out.push_back(nth_in_s(pos));
    if (++pos >= block) {
      block += 1;
      pos = 0;
    }
  }
  return out;
}

std::vector<ProjPoint> point_schedule(const PointSet& s, long long steps) {
  if (s.is_empty()) return {};
  std::vector<ProjPoint> base;
  bool finite = false;
  if (s.kind == PointSet::Kind::Finite) {
    base.assign(s.elems.begin(), s.elems.end());
    finite = true;
  } else if (s.field.kind == FieldKind::Finite) {
    for (long long i = 0; i <= s.field.q; ++i) {
      ProjPoint p = point_at_index(s.field, i);
      if (s.contains(p)) base.push_back(p);
    }
    finite = true;
  }
  std::vector<ProjPoint> out;
  if (finite) {
    for (long long t = 0; t < steps; ++t)
      out.push_back(base[(size_t)(t % (long long)base.size())]);
    return out;
  }
  auto nth = [&](long long i) -> ProjPoint {
    if (s.kind == PointSet::Kind::TailUnion) {
      if (i < (long long)s.elems.size())
        return *std::next(s.elems.begin(), (long long)i);
      return point_at_index(s.field, s.tail_from + i - (long long)s.elems.size());
    }
    long long k = 0, seen = -1;
    while (true) {
      ProjPoint p = point_at_index(s.field, k++);
      if (s.contains(p) && ++seen == i) return p;
    }
  };
  long long block = 1, pos = 0;
  for (long long t = 0; t < steps; ++t) {
    out.push_back(nth(pos));
    if (++pos >= block) {
      block += 1;
      pos = 0;
    }
  }
  return out;
}

MapWitness identity_witness(const RingDescriptor& ring, const SplitObject& x) {
  bool symbolic = ring.kind == RingKind::Kronecker &&
                  ring.field.kind == FieldKind::SymbolicUncountable;
  if (x.is_zero() || symbolic || ring.kind == RingKind::DynkinAn)
    return MapWitness::formal_cone(SplitObject::zero(ring));
  std::vector<Indecomposable> mods;
  for (const auto& [deg, m] : x.summands) mods.push_back(m);
  return MapWitness::matrix(ModuleMap::identity(ring, mods));
}

}  // namespace

ObjectSequence small_object_sequence(const RingDescriptor& ring,
                                     const ThickDescriptor& C,
                                     const SplitObject& start,
                                     long long steps) {
  require(steps >= 1, Err::InvalidDescriptor, "steps must be positive");
  require(start.ring == ring, Err::MixedRings,
          "start object over a different ring");
  require(C.ring == ring, Err::MixedRings,
          "target class over a different ring");

  auto identity_chain = [&]() {
    std::vector<SplitObject> entries((size_t)steps + 1, start);
    std::vector<MapWitness> maps((size_t)steps, identity_witness(ring, start));
    return ObjectSequence::of(ring, std::move(entries), std::move(maps));
  };
  if (C.kind == ThickDescriptor::Kind::Zero) return identity_chain();

  if (ring.is_integerish() && C.kind == ThickDescriptor::Kind::Torsion) {
    for (const auto& [d, m] : start.summands)
      require(m.kind == IndKind::ZFree, Err::UnsupportedStart,
              "the torsion absorption chain needs a free start");
    std::vector<long long> ps = prime_schedule(C.primes, steps);
    if (ps.empty()) return identity_chain();
    std::vector<SplitObject> entries((size_t)steps + 1, start);
    std::vector<MapWitness> maps;
    for (long long p : ps) maps.push_back(MapWitness::multiplication(p));
    return ObjectSequence::of(ring, std::move(entries), std::move(maps));
  }

  if (ring.kind == RingKind::Kronecker &&
      C.kind == ThickDescriptor::Kind::RegularPart) {
    require(C.points.is_countable(), Err::NotCountablyGenerated,
            "the tube set admits no countable enumeration");
    require(start.summands.size() == 1 &&
                start.summands[0].second.kind == IndKind::Preprojective,
            Err::UnsupportedStart,
            "the tube absorption chain starts at one preprojective");
    std::vector<ProjPoint> pts = point_schedule(C.points, steps);
    if (pts.empty()) return identity_chain();
    long long d = start.summands[0].first;
    long long a = start.summands[0].second.n;
    bool symbolic = ring.field.kind == FieldKind::SymbolicUncountable;
    std::vector<SplitObject> entries;
    for (long long t = 0; t <= steps; ++t)
      entries.push_back(SplitObject::concentrated(
          ring, {Indecomposable::preprojective(a + t)}, d));
    std::vector<MapWitness> maps;
    for (long long t = 0; t < steps; ++t) {
      if (symbolic)
        maps.push_back(MapWitness::formal_cone(SplitObject::concentrated(
            ring, {Indecomposable::regular(pts[(size_t)t], 1)}, d)));
      else
        maps.push_back(MapWitness::matrix(
            ModuleMap::canonical_p_step(ring, pts[(size_t)t], a + t + 1)));
    }
    return ObjectSequence::of(ring, std::move(entries), std::move(maps));
  }

  raise(Err::UnsupportedStart,
        "no precover data for this ring/class/start configuration");
}

// ---------------------------------------------------------------------------
// homotopy colimits

namespace {

std::set<long long> prime_factors(long long c) {
  std::set<long long> out;
  if (c < 0) c = -c;
  for (long long p = 2; p * p <= c; ++p)
    while (c % p == 0) {
      out.insert(p);
      c /= p;
    }
  if (c > 1) out.insert(c);
  return out;
}

HocolimModel z_mult_model(const ObjectSequence& seq) {
  const SplitObject& e0 = seq.entries[0];
  require(!e0.is_zero(), Err::UnsupportedFamily,
          "multiplication chains need a nonzero free entry");
  for (const auto& e : seq.entries) {
    require(e == e0, Err::UnsupportedFamily,
            "multiplication chains keep a constant entry");
    for (const auto& [deg, m] : e.summands)
      require(m.kind == IndKind::ZFree, Err::UnsupportedFamily,
              "multiplication chains run over free entries");
  }
  std::vector<long long> factors;
  for (const auto& w : seq.maps) {
    if (w.kind == MapWitness::Kind::Multiplication) {
      factors.push_back(w.factor);
      continue;
    }
    if (w.kind == MapWitness::Kind::Matrix &&
        std::holds_alternative<IMat>(w.map->data)) {
      const IMat& m0 = std::get<IMat>(w.map->data);
      require(m0.rows == m0.cols, Err::UnsupportedFamily,
              "chain maps must be square scalar matrices");
      long long c = m0.rows > 0 ? m0.at(0, 0) : 1;
      for (int i = 0; i < m0.rows; ++i)
        for (int j = 0; j < m0.cols; ++j)
          require(m0.at(i, j) == (i == j ? c : 0), Err::UnsupportedFamily,
                  "chain maps must be scalar multiplications");
      factors.push_back(c);
      continue;
    }
    raise(Err::UnsupportedFamily,
          "chain maps must be integer multiplications");
  }
  PrimeSet inv = seq.ring.inverted;
  std::set<long long> newly;
  for (long long c : factors) {
    require(c != 0, Err::UnsupportedFamily,
            "multiplication by zero never localises to an isomorphism");
    for (long long p : prime_factors(c)) newly.insert(p);
  }
  inv = inv.set_union(PrimeSet::finite(newly));
  RingDescriptor model =
      inv.is_empty() ? RingDescriptor::integers() : RingDescriptor::localized(inv);

  HocolimModel h;
  h.kind = HocolimModel::Kind::LocalizedFree;
  h.object = SplitObject::zero(model);
  for (const auto& [deg, m] : e0.summands)
    h.object.summands.push_back({deg, Indecomposable::z_free()});
  h.object.normalize();
  std::ostringstream fs;
  fs << "structure maps multiply by";
  for (long long c : factors) fs << " " << c;
  h.evidence.push_back(fs.str());
  h.evidence.push_back("every factor is a unit of " + model.str() +
                       ", so all maps localise to isomorphisms");
  h.evidence.push_back("the colimit is the rank-" +
                       std::to_string(e0.summands.size()) + " free module over " +
                       model.str());
  return h;
}

HocolimModel tube_model(const ObjectSequence& seq) {
  const SplitObject& e0 = seq.entries[0];
  require(e0.summands.size() == 1 &&
              e0.summands[0].second.kind == IndKind::Preprojective,
          Err::UnsupportedFamily,
          "tube chains run along single preprojectives");
  long long d = e0.summands[0].first;
  long long a = e0.summands[0].second.n;
  for (size_t i = 0; i < seq.entries.size(); ++i) {
    const SplitObject& e = seq.entries[i];
    bool ok = e.summands.size() == 1 && e.summands[0].first == d &&
              e.summands[0].second.kind == IndKind::Preprojective &&
              e.summands[0].second.n == a + (long long)i;
    require(ok, Err::UnsupportedFamily,
            "tube chains step through consecutive preprojectives");
  }
  std::set<ProjPoint> pts;
  for (long long n = 1; n <= seq.length(); ++n) {
    SplitObject c = cone_at(seq, n);
    bool ok = c.summands.size() == 1 && c.summands[0].first == d &&
              c.summands[0].second.kind == IndKind::Regular &&
              c.summands[0].second.qlen == 1;
    require(ok, Err::UnsupportedFamily,
            "tube chains have length-one tube cones");
    pts.insert(c.summands[0].second.point);
  }
  HocolimModel h;
  h.kind = HocolimModel::Kind::TubeColimit;
  h.object = SplitObject::zero(seq.ring);
  h.tubes = PointSet::finite(seq.ring.field, pts);
  h.generator = "E[" + h.tubes.str() + "]";
  h.evidence.push_back(
      "each structure map has cone a length-one tube at a point of " +
      h.tubes.str());
  h.evidence.push_back(
      "inverting those tubes turns every chain map into an isomorphism");
  h.evidence.push_back("the colimit is the formal generator " + h.generator +
                       " of the localisation");
  return h;
}

}  // namespace

std::string HocolimModel::str() const {
  switch (kind) {
    case Kind::SameObject:
      return object.str();
    case Kind::LocalizedFree: {
      std::ostringstream os;
      os << object.ring.str() << "-free of rank " << object.summands.size();
      auto [lo, hi] = object.degree_span();
      if (!object.summands.empty() && lo == hi && lo != 0)
        os << " in degree " << lo;
      return os.str();
    }
    case Kind::TubeColimit:
      return generator;
  }
  return "?";
}

HocolimModel hocolim_model(const ObjectSequence& seq) {
  if (seq.maps.empty()) {
    HocolimModel h;
    h.kind = HocolimModel::Kind::SameObject;
    h.object = seq.entries[0];
    h.evidence.push_back("a constant one-entry chain is its own colimit");
    return h;
  }
  bool all_zero = true;
  for (long long n = 1; n <= seq.length() && all_zero; ++n)
    if (!cone_at(seq, n).is_zero()) all_zero = false;
  if (all_zero) {
    HocolimModel h;
    h.kind = HocolimModel::Kind::SameObject;
    h.object = seq.entries.back();
    h.evidence.push_back(
        "every structure map has vanishing cone, hence is an isomorphism");
    h.evidence.push_back("the colimit is the common value of the chain");
    return h;
  }
  if (seq.ring.is_integerish()) return z_mult_model(seq);
  if (seq.ring.kind == RingKind::Kronecker) return tube_model(seq);
  raise(Err::UnsupportedFamily, "no colimit model for this ring");
}

}  // namespace metcomp
