#pragma once

#include "metcomp/classify.hpp"

namespace metcomp {

// One step of a sequence, together with enough data to compute its cone:
//   Matrix          an explicit ModuleMap between consecutive entries
//   Multiplication  multiplication by a fixed integer on free entries
//   FormalCone      the cone is declared, not computed; used where matrix
//                   data is unavailable (symbolic coefficient fields).
//                   Declarations are checked against the class of the flanking
//                   entries in the Grothendieck group and against the degree
//                   window a cone can occupy, and rejected otherwise.
struct MapWitness {
  enum class Kind { Matrix, Multiplication, FormalCone };

  Kind kind = Kind::FormalCone;
  std::optional<ModuleMap> map;  // Matrix
  long long factor = 1;          // Multiplication
  SplitObject declared_cone;     // FormalCone

  static MapWitness matrix(ModuleMap f);
  static MapWitness multiplication(long long c);
  static MapWitness formal_cone(SplitObject cone);

  std::string str() const;
};

// A finite directed system X_0 -> X_1 -> ... -> X_L with witnessed maps.
// Matrix and multiplication witnesses act degreewise on the split entries
// (cross-degree blocks must vanish); formal witnesses only declare their
// cone and are checked against class and degree constraints.
struct ObjectSequence {
  RingDescriptor ring;
  std::vector<SplitObject> entries;
  std::vector<MapWitness> maps;

  // validates shapes: maps.size() + 1 == entries.size(), witness data
  // matches the flanking entries, formal cones pass their checks
  static ObjectSequence of(const RingDescriptor& ring,
                           std::vector<SplitObject> entries,
                           std::vector<MapWitness> maps);

  long long length() const { return (long long)maps.size(); }
  std::string str() const;
};

// cone of the n-th map, n in [1, length()]: computed by cone_of_module_map
// for matrix and multiplication witnesses, taken from the declaration for
// formal ones (after validation)
SplitObject cone_at(const ObjectSequence& seq, long long n);

// Bounded-horizon Cauchy certificate: for every radius m <= horizon,
// stabilization[m] = N(m) is the least index with cone(e_n) inside ball m
// for all N(m) <= n <= horizon. cone_witnesses records, per map index, the
// cone and its membership verdict at the largest radius already stabilized
// there.
struct CauchyCertificate {
  long long horizon = 1;
  std::map<long long, long long> stabilization;
  std::vector<std::tuple<long long, SplitObject, BallMembership>>
      cone_witnesses;

  std::string str() const;
};

struct CauchyOutcome {
  bool cauchy = false;
  CauchyCertificate certificate;  // meaningful when cauchy
  long long counterexample = -1;  // index of the escaping cone otherwise
  long long ball = 0;             // the radius it escapes from
  std::string reason;
};

// Decide whether the sequence is Cauchy for M up to the horizon: every
// radius must stabilize within it. A BoundaryUnknown membership verdict is
// treated as a failure to certify, never as In.
CauchyOutcome is_cauchy(const ObjectSequence& seq, const MetricNF& M,
                        long long horizon);

// Component sequence obtained by deleting, in each entry, the maximal
// summand lying in B, and restricting the witnesses: matrices are projected
// to the surviving rows and columns, formal cones are recomputed when one
// side dies and rejected (WitnessLost) when genuine map data would be
// needed. Idempotent.
ObjectSequence trivialize(const ObjectSequence& seq, const ThickDescriptor& B);

// trivialize with respect to the summands outside degrees [low, high + 1]
ObjectSequence bound_cohomology(const ObjectSequence& seq, long long low,
                                long long high);

// Canonical Cauchy sequence absorbing the generators of C into the start:
//   Z, C = Torsion(S):      multiplication maps by the primes of S, round
//                           robin for finite S, a covering schedule with
//                           repetition otherwise; start must be free
//   Kronecker, C = Regular: the chain P_a -> P_{a+1} -> ... with cones the
//                           length-one tubes at the enumerated points of C
//   C = Zero:               identity maps
// Every cone lands in C, so the output is Cauchy for the constant metric C
// at any horizon <= steps.
ObjectSequence small_object_sequence(const RingDescriptor& ring,
                                     const ThickDescriptor& C,
                                     const SplitObject& start,
                                     long long steps);

// Model of the homotopy colimit for the supported chain shapes:
//   LocalizedFree  integer multiplication chains; the model is the free
//                  module over Z with the factors' primes inverted
//   SameObject     chains whose every cone vanishes
//   TubeColimit    Kronecker preprojective chains; the model is the formal
//                  generator E of the localisation inverting the cone tubes
// Each comes with evidence that the structure maps become isomorphisms
// after the model's localisation.
struct HocolimModel {
  enum class Kind { LocalizedFree, SameObject, TubeColimit };

  Kind kind = Kind::SameObject;
  SplitObject object;  // LocalizedFree / SameObject
  PointSet tubes = PointSet::none(FieldDescriptor::rational());  // TubeColimit
  std::string generator;  // TubeColimit display name
  std::vector<std::string> evidence;

  std::string str() const;
};

HocolimModel hocolim_model(const ObjectSequence& seq);

}  // namespace metcomp
