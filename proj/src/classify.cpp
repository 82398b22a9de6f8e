#include "metcomp/classify.hpp"

#include <sstream>

namespace metcomp {

// ---------------------------------------------------------------------------
// vanishing predicates

bool hom_vanishes_from(const ThickDescriptor& c, const Indecomposable& m) {
  switch (c.kind) {
    case ThickDescriptor::Kind::Zero:
      return true;
    case ThickDescriptor::Kind::All:
      return false;  // the identity of m never vanishes
    case ThickDescriptor::Kind::Torsion:
      if (m.kind == IndKind::ZFree) return true;
      return !c.primes.contains(m.p);
    case ThickDescriptor::Kind::RegularPart:
      // maps out of tubes hit preinjectives and their own tube only
      if (m.kind == IndKind::Preprojective) return true;
      if (m.kind == IndKind::Preinjective) return false;
      return !c.points.contains(m.point);
    case ThickDescriptor::Kind::Exceptional:
      return hom_invariants(c.ring, c.gen, m).hom_is_zero();
    case ThickDescriptor::Kind::IntervalSet:
      for (const auto& g : c.intervals)
        if (interval_hom_nonzero(g, m)) return false;
      return true;
  }
  return false;
}

bool ext_vanishes_from(const ThickDescriptor& c, const Indecomposable& m) {
  switch (c.kind) {
    case ThickDescriptor::Kind::Zero:
      return true;
    case ThickDescriptor::Kind::All:
      // only ext-injective catalog objects receive nothing at all
      if (c.ring.is_integerish()) return false;
      if (c.ring.kind == RingKind::Kronecker)
        return m.kind == IndKind::Preinjective && m.n <= 1;
      return m.a == 1;  // intervals [1,d] are the injectives
    case ThickDescriptor::Kind::Torsion:
      if (m.kind == IndKind::ZFree) return false;  // Ext(Z/p, Z) = Z/p
      return !c.primes.contains(m.p);
    case ThickDescriptor::Kind::RegularPart:
      // tubes extend preprojectives and themselves, never preinjectives
      if (m.kind == IndKind::Preprojective) return false;
      if (m.kind == IndKind::Preinjective) return true;
      return !c.points.contains(m.point);
    case ThickDescriptor::Kind::Exceptional:
      return hom_invariants(c.ring, c.gen, m).ext_is_zero();
    case ThickDescriptor::Kind::IntervalSet:
      for (const auto& g : c.intervals)
        if (interval_ext_nonzero(g, m)) return false;
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// category descriptors

std::string CategoryDescriptor::str() const {
  switch (kind) {
    case Kind::DerivedOfLocalizedZ:
      return "D^b(mod " + RingDescriptor::localized(inverted).str() + ")";
    case Kind::KroneckerLocalisation: {
      std::ostringstream os;
      os << "localisation of D^b(mod KQ) inverting the tubes at "
         << inverted_tubes.str() << "; generators:";
      for (const auto& g : generators) os << " " << g;
      return os.str();
    }
    case Kind::ThickInsideS:
      return "the thick subcategory " + inside.str() +
             " of the ambient derived category";
    case Kind::PerpOfExceptional: {
      std::ostringstream os;
      os << "right perpendicular of";
      for (const auto& e : seq) os << " " << e.str();
      os << ", with catalog " << perp_catalog.str();
      return os.str();
    }
    case Kind::ZeroCategory:
      return "the zero category";
  }
  return "?";
}

bool is_member(const CategoryDescriptor& cat, const SplitObject& x) {
  switch (cat.kind) {
    case CategoryDescriptor::Kind::ZeroCategory:
      return x.is_zero();
    case CategoryDescriptor::Kind::DerivedOfLocalizedZ: {
      require(x.ring.is_integerish(), Err::WrongRing,
              "membership in a localized derived category needs an object "
              "over Z or its localization");
      RingDescriptor local = RingDescriptor::localized(cat.inverted);
      for (const auto& [deg, mod] : x.summands) {
        if (mod.kind == IndKind::ZTorsion) {
          if (cat.inverted.contains(mod.p)) return false;  // killed
        } else {
          // a rank-one free over the base is not a module over the
          // localization; only the localized catalog's free survives
          if (x.ring != local) return false;
        }
      }
      return true;
    }
    case CategoryDescriptor::Kind::ThickInsideS:
      require(x.ring == cat.inside.ring, Err::WrongRing,
              "object over a different ring");
      return contains(cat.inside, x);
    case CategoryDescriptor::Kind::PerpOfExceptional: {
      require(x.ring == cat.ring, Err::WrongRing,
              "object over a different ring");
      SplitObject e = SplitObject::concentrated(cat.ring, cat.seq);
      return graded_hom(e, x).empty();
    }
    case CategoryDescriptor::Kind::KroneckerLocalisation: {
      require(x.ring == cat.ring, Err::WrongRing,
              "object over a different ring");
      if (cat.inverted_tubes.is_empty()) return true;  // nothing inverted
      for (const auto& [deg, mod] : x.summands) {
        if (mod.kind != IndKind::Regular) return false;  // conservative
        if (cat.inverted_tubes.contains(mod.point)) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// the classifier

namespace {

CategoryDescriptor case_one_category(const RingDescriptor& ring,
                                     const ThickDescriptor& b) {
  LocalisationModel model = localisation_model(b);
  CategoryDescriptor cat;
  cat.ring = ring;
  switch (model.kind) {
    case LocalisationModel::Kind::ZeroModel:
      cat.kind = CategoryDescriptor::Kind::ZeroCategory;
      return cat;
    case LocalisationModel::Kind::RingModel:
      if (ring.is_integerish()) {
        cat.kind = CategoryDescriptor::Kind::DerivedOfLocalizedZ;
        cat.inverted = model.ring.kind == RingKind::LocalizedIntegerRing
                           ? model.ring.inverted
                           : PrimeSet::none();
        return cat;
      }
      // nothing is inverted: the completion is the category itself
      cat.kind = CategoryDescriptor::Kind::KroneckerLocalisation;
      cat.inverted_tubes = PointSet::none(ring.field);
      cat.generators = {"D^b(mod KQ)"};
      return cat;
    case LocalisationModel::Kind::KroneckerModel:
      cat.kind = CategoryDescriptor::Kind::KroneckerLocalisation;
      cat.inverted_tubes = model.inverted;
      cat.generators = model.generators;
      return cat;
    case LocalisationModel::Kind::PerpendicularModel:
      cat.kind = CategoryDescriptor::Kind::PerpOfExceptional;
      cat.seq = {model.gen};
      cat.perp_catalog = right_perp_in_S(b);
      return cat;
  }
  raise(Err::NotRepresentable, "unknown localisation model");
}

}  // namespace

CompletionReport classify(const RingDescriptor& ring, const MetricNF& m) {
  require(ring == m.ring, Err::MixedRings, "metric over a different ring");
  require(ring.kind == RingKind::IntegerRing ||
              ring.kind == RingKind::Kronecker,
          Err::UnsupportedRing,
          "the completion theorems cover Z and the Kronecker algebra");
  CompletionReport rep;
  rep.kernel = kernel_B(m);
  rep.countably_generated = is_countably_generated(rep.kernel);
  rep.converges_uniformly = converges_uniformly(m);
  rep.evidence.push_back("kernel of the metric: B = " + rep.kernel.str());
  rep.evidence.push_back(
      rep.countably_generated
          ? "B is countably generated"
          : "B is not countably generated: it spans uncountably many tubes");
  rep.evidence.push_back(
      rep.converges_uniformly
          ? "the middle chain stabilizes at B, so the balls converge "
            "uniformly and every ball eventually equals an extension "
            "closure around B"
          : "the middle chain strictly shrinks forever, so the metric does "
            "not converge uniformly to its kernel");
  if (rep.converges_uniformly && rep.countably_generated) {
    rep.case_number = 1;
    rep.category = case_one_category(ring, rep.kernel);
    rep.evidence.push_back(
        "the completion is the localisation of the ambient category at B: " +
        rep.category.str());
  } else {
    rep.case_number = 2;
    ThickDescriptor ambient =
        ring.is_integerish()
            ? ThickDescriptor::torsion(ring, PrimeSet::all())
            : ThickDescriptor::regular_part(ring,
                                            PointSet::all(ring.field));
    ThickDescriptor inside = meet(right_perp_in_S(rep.kernel), ambient);
    CategoryDescriptor cat;
    cat.ring = ring;
    if (inside.kind == ThickDescriptor::Kind::Zero) {
      cat.kind = CategoryDescriptor::Kind::ZeroCategory;
    } else {
      cat.kind = CategoryDescriptor::Kind::ThickInsideS;
      cat.inside = inside;
    }
    rep.category = cat;
    rep.evidence.push_back(
        std::string("the completion is the ") +
        (ring.is_integerish() ? "torsion" : "regular") +
        " part perpendicular to B: " + inside.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// compact support

CompactSupport compact_support_index(const SplitObject& x, const MetricNF& m) {
  // x may live over a localisation of the metric's base ring: that is where
  // the limits of Cauchy sequences live, and support of the limit is the
  // question of interest
  bool x_localized = x.ring.kind == RingKind::LocalizedIntegerRing &&
                     m.ring.kind == RingKind::IntegerRing;
  require(x.ring == m.ring || x_localized, Err::MixedRings,
          "object over a different ring");
  if (x.is_zero()) return {1, 1};
  auto [lo_deg, hi_deg] = x.degree_span();
  long long width = hi_deg - lo_deg + 1;
  long long offset = 0;
  if (auto lo = m.low.at(1)) offset += -*lo;
  if (auto hi = m.high.at(1)) offset += *hi;
  // degree bookkeeping alone cannot see how long a moving chain needs to
  // walk past the primes or tube points of x, so the search also covers
  // the chain horizons plus x's own arithmetic data
  long long clearing = std::max({m.down.horizon(), m.inner.horizon(),
                                 m.up.horizon()});
  long long datum = 0;
  for (const auto& [deg, mod] : x.summands) {
    if (mod.kind == IndKind::ZTorsion) datum = std::max(datum, mod.p);
    if (mod.kind == IndKind::Regular)
      datum = std::max(datum, std::max(0LL, point_index(m.ring.field,
                                                        mod.point)));
  }
  long long horizon = std::max(1LL, 2 * width + offset + clearing + datum);
  for (long long n = 1; n <= horizon; ++n) {
    bool ok = true;
    for (const auto& [deg, mod] : x.summands) {
      if (x_localized && mod.kind == IndKind::ZTorsion &&
          x.ring.inverted.contains(mod.p))
        continue;  // the summand is killed by the localisation
      bool hom_ok = hom_vanishes_from(m.allowed(deg, n), mod);
      bool ext_ok;
      if (x_localized && mod.kind == IndKind::ZFree) {
        // Ext(Z/p, Z[S^-1]) = Z[S^-1]/p, zero exactly when p is inverted
        const ThickDescriptor& c = m.allowed(deg - 1, n);
        if (c.kind == ThickDescriptor::Kind::Zero)
          ext_ok = true;
        else if (c.kind == ThickDescriptor::Kind::Torsion)
          ext_ok = c.primes.subset_of(x.ring.inverted);
        else
          ext_ok = false;
      } else {
        ext_ok = ext_vanishes_from(m.allowed(deg - 1, n), mod);
      }
      if (!hom_ok || !ext_ok) {
        ok = false;
        break;
      }
    }
    if (ok) return {n, horizon};
  }
  return {std::nullopt, horizon};
}

}  // namespace metcomp
