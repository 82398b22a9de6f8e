#pragma once

#include "metcomp/metric.hpp"

namespace metcomp {

// Completion of the bounded derived category along a normal-form metric,
// presented with a decidable (conservative where necessary) membership
// test. Variants:
//   DerivedOfLocalizedZ    the derived category of Z with a set of primes
//                          inverted (Q when all are)
//   KroneckerLocalisation  the localisation of the Kronecker derived
//                          category inverting a set of tubes; known
//                          generators are the formal colimit object E and
//                          the surviving tubes
//   ThickInsideS           a thick subcategory of the ambient category
//   PerpOfExceptional      the right perpendicular of an exceptional
//                          generator, with its computed catalog filter
//   ZeroCategory
struct CategoryDescriptor {
  enum class Kind {
    DerivedOfLocalizedZ,
    KroneckerLocalisation,
    ThickInsideS,
    PerpOfExceptional,
    ZeroCategory,
  };
  Kind kind = Kind::ZeroCategory;
  RingDescriptor ring;  // ambient ring the objects live over
  PrimeSet inverted;    // DerivedOfLocalizedZ
  PointSet inverted_tubes =
      PointSet::none(FieldDescriptor::rational());     // KroneckerLocalisation
  std::vector<std::string> generators;                 // display list
  ThickDescriptor inside;                              // ThickInsideS
  std::vector<Indecomposable> seq;                     // PerpOfExceptional
  ThickDescriptor perp_catalog;                        // computed filter

  std::string str() const;
};

// Membership of a split object. Exact for the localized-Z, thick and
// perpendicular variants; conservative for KroneckerLocalisation (true only
// for sums of surviving tube objects, never for the formal colimit).
bool is_member(const CategoryDescriptor& cat, const SplitObject& x);

struct CompletionReport {
  int case_number = 1;  // 1 or 2
  ThickDescriptor kernel;
  bool countably_generated = true;
  bool converges_uniformly = true;
  CategoryDescriptor category;
  std::vector<std::string> evidence;
};

// Decide the completion along m. Case 1 (uniform convergence with countably
// generated kernel): the completion is a genuine localisation; case 2: it
// is the part of the torsion (Z) or regular (Kronecker) objects
// perpendicular to the kernel.
CompletionReport classify(const RingDescriptor& ring, const MetricNF& m);

// Vanishing of Hom / Ext^1 out of an entire wide part into one module, in
// closed form per descriptor kind.
bool hom_vanishes_from(const ThickDescriptor& c, const Indecomposable& m);
bool ext_vanishes_from(const ThickDescriptor& c, const Indecomposable& m);

struct CompactSupport {
  std::optional<long long> index;
  long long horizon = 1;
};

// Smallest ball level whose shifted generators admit no Hom or Ext into x,
// searched up to a horizon tied to the cohomological width of x and the
// window of m; the horizon is reported so absence is never unbounded.
CompactSupport compact_support_index(const SplitObject& x, const MetricNF& m);

}  // namespace metcomp
