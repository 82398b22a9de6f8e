#pragma once

#include <map>
#include <variant>
#include <vector>

#include "metcomp/kronrep.hpp"

namespace metcomp {

// Object of the bounded derived category, stored split: a finite multiset of
// shifted indecomposables (degree i, module M) representing Sigma^{-i} H^i.
// Multisets are kept sorted, so equality is isomorphism.
struct SplitObject {
  RingDescriptor ring;
  std::vector<std::pair<long long, Indecomposable>> summands;

  static SplitObject zero(const RingDescriptor& r) {
    SplitObject x;
    x.ring = r;
    return x;
  }
  static SplitObject concentrated(const RingDescriptor& r,
                                  std::vector<Indecomposable> mods,
                                  long long degree = 0) {
    SplitObject x;
    x.ring = r;
    for (auto& m : mods) x.summands.push_back({degree, std::move(m)});
    x.normalize();
    return x;
  }

  void normalize();
  bool is_zero() const { return summands.empty(); }
  bool operator==(const SplitObject& o) const {
    return ring == o.ring && summands == o.summands;
  }
  bool operator!=(const SplitObject& o) const { return !(*this == o); }

  SplitObject direct_sum(const SplitObject& o) const;
  // degrees that carry cohomology; empty object reports (0, -1)
  std::pair<long long, long long> degree_span() const;
  std::string str() const;
};

SplitObject shift(const SplitObject& x, long long k);

// Hom(X, Sigma^j Y) for each j with a nonzero value: summand pairs in equal
// degrees contribute Hom, pairs one degree apart contribute Ext^1.
std::map<long long, HomExtRecord> graded_hom(const SplitObject& x,
                                             const SplitObject& y);

// Support over Z: primes dividing torsion summands; a free summand forces
// all of Spec.
struct SpecSubset {
  bool all = false;
  std::set<long long> primes;
  std::string str() const;
};
SpecSubset support_Z(const SplitObject& x);

// A map of degree-0 modules with explicit matrix data.
//   Z: one integer matrix over the canonical cyclic generators, entry (i, j)
//      maps generator j of the source to entry * generator i of the target.
//   Kronecker: a matrix pair (f2, f1) satisfying the intertwining equations,
//      over the concrete field (rational or finite).
template <class F>
struct KronMapData {
  Matrix<F> f2, f1;
};

struct ModuleMap {
  RingDescriptor ring;
  std::vector<Indecomposable> source, target;
  std::variant<std::monostate, IMat, KronMapData<RatField>, KronMapData<GFField>>
      data;

  static ModuleMap z_map(const RingDescriptor& ring,
                         std::vector<Indecomposable> source,
                         std::vector<Indecomposable> target, IMat mat);
  static ModuleMap kron_map_rat(const RingDescriptor& ring,
                                std::vector<Indecomposable> source,
                                std::vector<Indecomposable> target,
                                Matrix<RatField> f2, Matrix<RatField> f1);
  static ModuleMap kron_map_gf(const RingDescriptor& ring,
                               std::vector<Indecomposable> source,
                               std::vector<Indecomposable> target,
                               Matrix<GFField> f2, Matrix<GFField> f1);

  static ModuleMap identity(const RingDescriptor& ring,
                            const std::vector<Indecomposable>& mods);
  // multiplication by an integer on a sum of free rank-one modules
  static ModuleMap multiplication(const RingDescriptor& ring, long long c,
                                  int rank);
  // the inclusion P_{n-1} -> P_n with cokernel Regular(lambda, 1)
  static ModuleMap canonical_p_step(const RingDescriptor& ring,
                                    const ProjPoint& lambda, long long n);

  SplitObject source_object() const {
    return SplitObject::concentrated(ring, source);
  }
  SplitObject target_object() const {
    return SplitObject::concentrated(ring, target);
  }
};

// cone(f) = Sigma ker(f) + coker(f), exactly: Smith normal form over Z,
// kernel/cokernel representations plus decomposition over Kronecker.
SplitObject cone_of_module_map(const ModuleMap& f);

// annihilator exponent of the canonical generator: 0 for free summands,
// p^k for torsion
long long z_annihilator(const Indecomposable& m);

// presentation of a degree-0 Z-object: Z^g / diag(annihilators)
IMat z_presentation(const std::vector<Indecomposable>& mods);

// split a f.g. abelian group into catalog indecomposables
std::vector<Indecomposable> z_summands_of(const AbGroup& g);

// Kronecker: canonical representation of a degree-0 multiset over the
// concrete field
template <class F>
KronRep<F> rep_of(const F& f, const std::vector<Indecomposable>& mods) {
  std::vector<KronRep<F>> parts;
  for (const auto& m : mods) parts.push_back(canonical_rep(f, m));
  return direct_sum(f, parts);
}

}  // namespace metcomp
