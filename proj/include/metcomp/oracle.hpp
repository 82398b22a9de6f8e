#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metcomp/intmat.hpp"
#include "metcomp/kronrep.hpp"

namespace metcomp {

// Brute-force cross-checks for the catalog computations. Everything here
// recomputes invariants from first principles: Smith forms of presentation
// matrices, explicit intertwining linear systems, literal mapping cone
// differentials. No formula table is shared with the main code paths, so a
// bug would have to occur twice, in two different shapes, to slip through.
struct OracleConfig {
  long long max_total_dimension = 8;  // Kronecker reps: d1 + d2 per side
  long long max_generators_z = 3;     // abelian group generators per side
  FieldDescriptor field_for_enumeration = FieldDescriptor::finite(5);
};

// Finitely generated abelian group: Z^gens modulo the column span of rels.
// rels has one row per generator; a column lists the coefficients of one
// relation.
struct ZPresentation {
  int gens = 0;
  IMat rels{0, 0};

  static ZPresentation of(int gens, IMat rels);
  // presentation of a direct sum of catalog summands (free and p-power
  // cyclic pieces)
  static ZPresentation of_modules(const std::vector<Indecomposable>& mods);

  std::string str() const;
};

// Hom and Ext^1 between the presented groups, decomposed from the Smith
// normal form of the source presentation: Hom(Z, N) = N, Hom(Z/d, N) = the
// d-torsion of N, Ext(Z/d, N) = N/dN, all realized as integer lattice
// quotients and summed. Raises BoundsExceeded past the configured size.
std::pair<AbGroup, AbGroup> snf_hom_ext(const OracleConfig& cfg,
                                        const ZPresentation& m,
                                        const ZPresentation& n);

// Hom and Ext^1 dimensions between explicit Kronecker representations.
// Hom dim is the nullity of the intertwining system g1 X.A = Y.A g2,
// g1 X.B = Y.B g2. Ext dim is hom dim minus the Euler characteristic read
// off the two-term projective resolution
//   0 -> P(1)^(2 d2) -> P(1)^d1 + P(2)^d2 -> X -> 0,
// which gives chi(X, Y) = d1 e1 + d2 e2 - 2 d2 e1.
template <class F>
std::pair<long long, long long> intertwiner_dims(const OracleConfig& cfg,
                                                 const F& fld,
                                                 const KronRep<F>& x,
                                                 const KronRep<F>& y);

// Same, starting from catalog names over the ring's field of definition.
std::pair<long long, long long> intertwiner_dims(const OracleConfig& cfg,
                                                 const RingDescriptor& ring,
                                                 const Indecomposable& x,
                                                 const Indecomposable& y);

// Map of abelian groups given by a generator matrix (target.gens rows,
// source.gens cols). The matrix must send relations into relations; both
// presentations must have independent relation columns so that the evident
// two-term free complexes are resolutions.
struct ZMapPresentation {
  ZPresentation source, target;
  IMat matrix{0, 0};

  static ZMapPresentation of(ZPresentation source, ZPresentation target,
                             IMat matrix);
};

// Homology of the literal mapping cone of the induced map of free
// resolutions: the map is lifted columnwise to relation lattices, the cone
// differentials are written down as block matrices, and each homology group
// is an integer kernel modulo an integer image. Returns the nonzero
// (degree, group) pairs; kernels sit in degree -1, cokernels in degree 0.
std::vector<std::pair<long long, AbGroup>> mapping_cone_homology(
    const OracleConfig& cfg, const ZMapPresentation& f);

// One row of the equivalence report between the brute-force routes above
// and the catalog computations.
struct SelftestResult {
  std::string suite;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // first few mismatches, spelled out

  bool ok() const { return failures == 0; }
  std::string str() const;
};

// Replays every equivalence suite within the configured bounds: abelian
// Hom/Ext against the Smith route, Kronecker Hom/Ext dimensions against the
// intertwining systems (rational and finite coefficients), and module map
// cones against literal cone homology.
std::vector<SelftestResult> oracle_selftest(const OracleConfig& cfg);

}  // namespace metcomp
