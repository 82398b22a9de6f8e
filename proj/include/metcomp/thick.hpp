#pragma once

#include "metcomp/derived.hpp"

namespace metcomp {

// Finitely presented thick subcategory of the bounded derived category,
// recorded by its wide part:
//   Z / localized Z:  Zero | Torsion(prime set) | All
//   Kronecker:        Zero | RegularPart(point set) | Exceptional(one
//                     exceptional module; a complete length-2 sequence
//                     already generates everything and collapses to All) |
//                     All
//   DynkinAn:         explicit interval set closed under kernels, cokernels
//                     and extensions of maps between members
// Factories normalize: empty sets become Zero, the full interval set
// becomes All.
struct ThickDescriptor {
  enum class Kind { Zero, All, Torsion, RegularPart, Exceptional, IntervalSet };

  RingDescriptor ring;
  Kind kind = Kind::Zero;
  PrimeSet primes;                        // Torsion
  PointSet points;                        // RegularPart
  Indecomposable gen;                     // Exceptional
  std::vector<Indecomposable> intervals;  // IntervalSet, sorted

  static ThickDescriptor zero(const RingDescriptor& r);
  static ThickDescriptor all(const RingDescriptor& r);
  static ThickDescriptor torsion(const RingDescriptor& r, const PrimeSet& s);
  static ThickDescriptor regular_part(const RingDescriptor& r,
                                      const PointSet& s);
  static ThickDescriptor exceptional(const RingDescriptor& r,
                                     const std::vector<Indecomposable>& seq);
  // closes the generators under the wide-subcategory axioms
  static ThickDescriptor interval_closure(
      const RingDescriptor& r, const std::vector<Indecomposable>& gens);

  bool operator==(const ThickDescriptor& o) const;
  bool operator!=(const ThickDescriptor& o) const { return !(*this == o); }
  std::string str() const;
};

// module-level membership in the wide part
bool contains_module(const ThickDescriptor& c, const Indecomposable& m);
// object-level: every summand lies in the wide part (shift-invariant)
bool contains(const ThickDescriptor& c, const SplitObject& x);

bool leq(const ThickDescriptor& a, const ThickDescriptor& b);
ThickDescriptor join(const ThickDescriptor& a, const ThickDescriptor& b);
ThickDescriptor meet(const ThickDescriptor& a, const ThickDescriptor& b);

// {X : Hom(Sigma^j C, X) = 0 for all j}, in closed form per ring
ThickDescriptor right_perp_in_S(const ThickDescriptor& c);

bool is_countably_generated(const ThickDescriptor& c);

// Computed model of the universal localisation killing C.
//   RingModel: the derived category of a concrete ring (Z, Z[S^-1], Q, or
//              the starting quiver algebra when C = Zero).
//   ZeroModel: the zero category (C = All).
//   KroneckerModel: generators {E_D} + tubes away from D, where E_D is the
//              homotopy colimit of the preprojective multiplication chain
//              through the tubes of D.
//   PerpendicularModel: C is exceptional-generated; the model is the
//              perpendicular category of the generator.
struct LocalisationModel {
  enum class Kind { RingModel, ZeroModel, KroneckerModel, PerpendicularModel };
  Kind kind = Kind::RingModel;
  RingDescriptor ring;     // RingModel
  PointSet inverted;       // KroneckerModel: the tube points made invertible
  Indecomposable gen;      // PerpendicularModel
  std::vector<std::string> generators;  // display list (truncated if infinite)
  std::string str() const;
};

LocalisationModel localisation_model(const ThickDescriptor& c);

}  // namespace metcomp
