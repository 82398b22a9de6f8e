#include "metcomp/thick.hpp"

#include <algorithm>
#include <set>

namespace metcomp {

namespace {

int interval_count(const RingDescriptor& r) {
  return r.an_n * (r.an_n + 1) / 2;
}

void sort_unique(std::vector<Indecomposable>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ThickDescriptor ThickDescriptor::zero(const RingDescriptor& r) {
  ThickDescriptor c;
  c.ring = r;
  c.kind = Kind::Zero;
  return c;
}

ThickDescriptor ThickDescriptor::all(const RingDescriptor& r) {
  ThickDescriptor c;
  c.ring = r;
  c.kind = Kind::All;
  return c;
}

ThickDescriptor ThickDescriptor::torsion(const RingDescriptor& r,
                                         const PrimeSet& s) {
  require(r.is_integerish(), Err::WrongRing,
          "torsion descriptors live over Z");
  PrimeSet eff = s;
  if (r.kind == RingKind::LocalizedIntegerRing)
    eff = eff.set_intersect(r.inverted.complement());
  if (eff.is_empty()) return zero(r);
  ThickDescriptor c;
  c.ring = r;
  c.kind = Kind::Torsion;
  c.primes = eff;
  return c;
}

ThickDescriptor ThickDescriptor::regular_part(const RingDescriptor& r,
                                              const PointSet& s) {
  require(r.kind == RingKind::Kronecker, Err::WrongRing,
          "tube descriptors live over the Kronecker algebra");
  require(s.field == r.field, Err::MixedRings,
          "point set over the wrong field");
  if (s.is_empty()) return zero(r);
  ThickDescriptor c;
  c.ring = r;
  c.kind = Kind::RegularPart;
  c.points = s;
  return c;
}

ThickDescriptor ThickDescriptor::exceptional(
    const RingDescriptor& r, const std::vector<Indecomposable>& seq) {
  require(r.kind == RingKind::Kronecker, Err::WrongRing,
          "exceptional-generated descriptors live over the Kronecker algebra");
  require(!seq.empty() && seq.size() <= 2, Err::InvalidDescriptor,
          "exceptional sequences here have length 1 or 2");
  for (const auto& e : seq) check_in_catalog(r, e);
  require(is_exceptional_sequence(r, seq), Err::InvalidDescriptor,
          "not an exceptional sequence");
  if (seq.size() == 2) return all(r);  // complete sequence generates
  ThickDescriptor c;
  c.ring = r;
  c.kind = Kind::Exceptional;
  c.gen = seq[0];
  return c;
}

ThickDescriptor ThickDescriptor::interval_closure(
    const RingDescriptor& r, const std::vector<Indecomposable>& gens) {
  require(r.kind == RingKind::DynkinAn, Err::WrongRing,
          "interval descriptors live over a type A quiver");
  std::vector<Indecomposable> s = gens;
  for (const auto& m : s) check_in_catalog(r, m);
  sort_unique(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Indecomposable> found;
    for (const auto& x : s)
      for (const auto& y : s) {
        if (interval_hom_nonzero(x, y)) {
          for (const auto& k : interval_kernel(x, y)) found.push_back(k);
          for (const auto& k : interval_cokernel(x, y)) found.push_back(k);
        }
        if (interval_ext_nonzero(x, y))
          for (const auto& k : interval_extension_middle(x, y))
            found.push_back(k);
      }
    for (const auto& k : found)
      if (!std::binary_search(s.begin(), s.end(), k)) {
        s.push_back(k);
        grew = true;
      }
    sort_unique(s);
  }
  if (s.empty()) return zero(r);
  if ((int)s.size() == interval_count(r)) return all(r);
  ThickDescriptor c;
  c.ring = r;
  c.kind = Kind::IntervalSet;
  c.intervals = std::move(s);
  return c;
}

bool ThickDescriptor::operator==(const ThickDescriptor& o) const {
  if (!(ring == o.ring) || kind != o.kind) return false;
  switch (kind) {
    case Kind::Zero:
    case Kind::All: return true;
    case Kind::Torsion: return primes == o.primes;
    case Kind::RegularPart: return points == o.points;
    case Kind::Exceptional: return gen == o.gen;
    case Kind::IntervalSet: return intervals == o.intervals;
  }
  return false;
}

std::string ThickDescriptor::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::All: return "all";
    case Kind::Torsion: return "Torsion(" + primes.str() + ")";
    case Kind::RegularPart: return "Regular(" + points.str() + ")";
    case Kind::Exceptional: return "<" + gen.str() + ">";
    case Kind::IntervalSet: {
      std::string s = "{";
      bool first = true;
      for (const auto& m : intervals) {
        if (!first) s += ", ";
        s += m.str();
        first = false;
      }
      return s + "}";
    }
  }
  return "?";
}

bool contains_module(const ThickDescriptor& c, const Indecomposable& m) {
  check_in_catalog(c.ring, m);
  switch (c.kind) {
    case ThickDescriptor::Kind::Zero: return false;
    case ThickDescriptor::Kind::All: return true;
    case ThickDescriptor::Kind::Torsion:
      return m.kind == IndKind::ZTorsion && c.primes.contains(m.p);
    case ThickDescriptor::Kind::RegularPart:
      return m.kind == IndKind::Regular && c.points.contains(m.point);
    case ThickDescriptor::Kind::Exceptional: return m == c.gen;
    case ThickDescriptor::Kind::IntervalSet:
      return std::binary_search(c.intervals.begin(), c.intervals.end(), m);
  }
  return false;
}

bool contains(const ThickDescriptor& c, const SplitObject& x) {
  check_same_ring(c.ring, x.ring);
  for (const auto& [d, m] : x.summands)
    if (!contains_module(c, m)) return false;
  return true;
}

bool leq(const ThickDescriptor& a, const ThickDescriptor& b) {
  check_same_ring(a.ring, b.ring);
  using K = ThickDescriptor::Kind;
  if (a.kind == K::Zero || b.kind == K::All) return true;
  if (b.kind == K::Zero || a.kind == K::All) return false;
  if (a.kind != b.kind) return false;  // Torsion/RegularPart/Exceptional mixes
  switch (a.kind) {
    case K::Torsion: return a.primes.subset_of(b.primes);
    case K::RegularPart: return a.points.subset_of(b.points);
    case K::Exceptional: return a.gen == b.gen;
    case K::IntervalSet:
      return std::includes(b.intervals.begin(), b.intervals.end(),
                           a.intervals.begin(), a.intervals.end());
    default: return false;
  }
}

ThickDescriptor join(const ThickDescriptor& a, const ThickDescriptor& b) {
  check_same_ring(a.ring, b.ring);
  using K = ThickDescriptor::Kind;
  if (a.kind == K::Zero) return b;
  if (b.kind == K::Zero) return a;
  if (a.kind == K::All || b.kind == K::All)
    return ThickDescriptor::all(a.ring);
  if (a.kind == K::Torsion && b.kind == K::Torsion)
    return ThickDescriptor::torsion(a.ring, a.primes.set_union(b.primes));
  if (a.kind == K::RegularPart && b.kind == K::RegularPart)
    return ThickDescriptor::regular_part(a.ring, a.points.set_union(b.points));
  if (a.kind == K::IntervalSet && b.kind == K::IntervalSet) {
    std::vector<Indecomposable> gens = a.intervals;
    gens.insert(gens.end(), b.intervals.begin(), b.intervals.end());
    return ThickDescriptor::interval_closure(a.ring, gens);
  }
  if (a.kind == K::Exceptional && b.kind == K::Exceptional) {
    if (a.gen == b.gen) return a;
    // two nonisomorphic exceptional generators: the join is not inside the
    // regular part and is not add of one exceptional, so by the thick
    // classification it is everything
    return ThickDescriptor::all(a.ring);
  }
  // Exceptional with a nonzero regular part: same classification argument
  return ThickDescriptor::all(a.ring);
}

ThickDescriptor meet(const ThickDescriptor& a, const ThickDescriptor& b) {
  check_same_ring(a.ring, b.ring);
  using K = ThickDescriptor::Kind;
  if (a.kind == K::All) return b;
  if (b.kind == K::All) return a;
  if (a.kind == K::Zero || b.kind == K::Zero)
    return ThickDescriptor::zero(a.ring);
  if (a.kind == K::Torsion && b.kind == K::Torsion)
    return ThickDescriptor::torsion(a.ring, a.primes.set_intersect(b.primes));
  if (a.kind == K::RegularPart && b.kind == K::RegularPart)
    return ThickDescriptor::regular_part(a.ring, a.points.set_intersect(b.points));
  if (a.kind == K::IntervalSet && b.kind == K::IntervalSet) {
    std::vector<Indecomposable> out;
    std::set_intersection(a.intervals.begin(), a.intervals.end(),
                          b.intervals.begin(), b.intervals.end(),
                          std::back_inserter(out));
    return ThickDescriptor::interval_closure(a.ring, out);
  }
  if (a.kind == K::Exceptional && b.kind == K::Exceptional && a.gen == b.gen)
    return a;
  // exceptional against a tube part, or distinct exceptionals: the wide
  // parts share no indecomposable
  return ThickDescriptor::zero(a.ring);
}

ThickDescriptor right_perp_in_S(const ThickDescriptor& c) {
  using K = ThickDescriptor::Kind;
  if (c.ring.kind == RingKind::DynkinAn) {
    std::vector<Indecomposable> cs;
    if (c.kind == K::All)
      cs = all_intervals(c.ring.an_n);
    else if (c.kind == K::IntervalSet)
      cs = c.intervals;
    std::vector<Indecomposable> perp;
    for (const auto& i : all_intervals(c.ring.an_n)) {
      bool ok = true;
      for (const auto& j : cs)
        if (interval_hom_nonzero(j, i) || interval_ext_nonzero(j, i)) {
          ok = false;
          break;
        }
      if (ok) perp.push_back(i);
    }
    return ThickDescriptor::interval_closure(c.ring, perp);
  }
  switch (c.kind) {
    case K::Zero: return ThickDescriptor::all(c.ring);
    case K::All: return ThickDescriptor::zero(c.ring);
    case K::Torsion:
      // Ext^1(Z/p, Z) != 0 keeps free modules out; cross-prime Hom and Ext
      // vanish
      return ThickDescriptor::torsion(c.ring, c.primes.complement());
    case K::RegularPart:
      // tubes are mutually orthogonal; Hom(R, Q) != 0 and Ext^1(R, P) != 0
      // keep both families out
      return ThickDescriptor::regular_part(c.ring, c.points.complement());
    case K::Exceptional: {
      Indecomposable e;
      if (c.gen.kind == IndKind::Preprojective)
        e = c.gen.n >= 1 ? Indecomposable::preprojective(c.gen.n - 1)
                         : Indecomposable::preinjective(0);
      else
        e = Indecomposable::preinjective(c.gen.n + 1);
      return ThickDescriptor::exceptional(c.ring, {e});
    }
    default: raise(Err::InvalidDescriptor, "unclassified descriptor");
  }
}

bool is_countably_generated(const ThickDescriptor& c) {
  if (c.kind == ThickDescriptor::Kind::RegularPart)
    return c.points.is_countable();
  if (c.kind == ThickDescriptor::Kind::All &&
      c.ring.kind == RingKind::Kronecker)
    return true;  // two exceptional generators
  return true;
}

std::string LocalisationModel::str() const {
  switch (kind) {
    case Kind::RingModel: return "D^b(mod " + ring.str() + ")";
    case Kind::ZeroModel: return "0";
    case Kind::KroneckerModel: {
      std::string s = "<";
      bool first = true;
      for (const auto& g : generators) {
        if (!first) s += ", ";
        s += g;
        first = false;
      }
      return s + ">";
    }
    case Kind::PerpendicularModel: return "perp(" + gen.str() + ")";
  }
  return "?";
}

LocalisationModel localisation_model(const ThickDescriptor& c) {
  require(c.ring.kind != RingKind::DynkinAn, Err::UnsupportedRing,
          "localisation models are provided over Z and the Kronecker algebra");
  require(is_countably_generated(c), Err::NotCountablyGenerated,
          "kernel is not countably generated");
  using K = ThickDescriptor::Kind;
  LocalisationModel m;
  if (c.kind == K::Zero) {
    m.kind = LocalisationModel::Kind::RingModel;
    m.ring = c.ring;
    return m;
  }
  if (c.kind == K::All) {
    m.kind = LocalisationModel::Kind::ZeroModel;
    return m;
  }
  if (c.kind == K::Torsion) {
    PrimeSet inv = c.primes;
    if (c.ring.kind == RingKind::LocalizedIntegerRing)
      inv = inv.set_union(c.ring.inverted);
    m.kind = LocalisationModel::Kind::RingModel;
    m.ring = RingDescriptor::localized(inv);
    return m;
  }
  if (c.kind == K::RegularPart) {
    m.kind = LocalisationModel::Kind::KroneckerModel;
    m.ring = c.ring;
    m.inverted = c.points;
    m.generators.push_back("E[" + c.points.str() + "]");
    PointSet rest = c.points.complement();
    if (rest.kind == PointSet::Kind::Finite) {
      for (const auto& p : rest.elems)
        m.generators.push_back("R(" + p.str() + ")");
    } else if (!rest.is_empty()) {
      m.generators.push_back("R(mu) for mu in " + rest.str());
    }
    return m;
  }
  // exceptional-generated: the completion question is answered by the
  // perpendicular category of the generator
  m.kind = LocalisationModel::Kind::PerpendicularModel;
  m.ring = c.ring;
  m.gen = c.gen;
  m.generators.push_back(right_perp_in_S(c).str());
  return m;
}

}  // namespace metcomp
