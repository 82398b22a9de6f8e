#pragma once

#include <vector>

#include "metcomp/intmat.hpp"
#include "metcomp/ring.hpp"

namespace metcomp {

// Catalog of indecomposable modules.
//   Z / localized Z:  ZFree (rank one free) | ZTorsion(p, k) = Z/p^k
//   Kronecker:        Preprojective(n) | Preinjective(n) | Regular(point, len)
//   DynkinAn:         Interval[a, b] (1-based vertices, a <= b <= n)
enum class IndKind { ZFree, ZTorsion, Preprojective, Preinjective, Regular, Interval };

struct Indecomposable {
  IndKind kind = IndKind::ZFree;
  long long p = 0;  // ZTorsion prime
  int k = 0;        // ZTorsion exponent
  long long n = 0;  // Preprojective / Preinjective index
  ProjPoint point;  // Regular
  long long qlen = 1;  // Regular quasi-length
  int a = 0, b = 0;    // Interval

  static Indecomposable z_free() { return {}; }
  static Indecomposable z_torsion(long long p, int k) {
    require(is_prime_number(p), Err::InvalidDescriptor,
            std::to_string(p) + " is not prime");
    require(k >= 1, Err::InvalidDescriptor, "torsion exponent must be >= 1");
    Indecomposable x;
    x.kind = IndKind::ZTorsion;
    x.p = p;
    x.k = k;
    return x;
  }
  static Indecomposable preprojective(long long n) {
    require(n >= 0, Err::InvalidDescriptor, "preprojective index must be >= 0");
    Indecomposable x;
    x.kind = IndKind::Preprojective;
    x.n = n;
    return x;
  }
  static Indecomposable preinjective(long long n) {
    require(n >= 0, Err::InvalidDescriptor, "preinjective index must be >= 0");
    Indecomposable x;
    x.kind = IndKind::Preinjective;
    x.n = n;
    return x;
  }
  static Indecomposable regular(ProjPoint pt, long long len) {
    require(len >= 1, Err::InvalidDescriptor, "quasi-length must be >= 1");
    Indecomposable x;
    x.kind = IndKind::Regular;
    x.point = std::move(pt);
    x.qlen = len;
    return x;
  }
  static Indecomposable interval(int a, int b) {
    require(1 <= a && a <= b, Err::InvalidDescriptor, "bad interval");
    Indecomposable x;
    x.kind = IndKind::Interval;
    x.a = a;
    x.b = b;
    return x;
  }

  bool operator==(const Indecomposable& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case IndKind::ZFree: return true;
      case IndKind::ZTorsion: return p == o.p && k == o.k;
      case IndKind::Preprojective:
      case IndKind::Preinjective: return n == o.n;
      case IndKind::Regular: return point == o.point && qlen == o.qlen;
      case IndKind::Interval: return a == o.a && b == o.b;
    }
    return false;
  }
  bool operator!=(const Indecomposable& o) const { return !(*this == o); }
  bool operator<(const Indecomposable& o) const {
    if (kind != o.kind) return (int)kind < (int)o.kind;
    switch (kind) {
      case IndKind::ZFree: return false;
      case IndKind::ZTorsion: return p != o.p ? p < o.p : k < o.k;
      case IndKind::Preprojective:
      case IndKind::Preinjective: return n < o.n;
      case IndKind::Regular:
        return point != o.point ? point < o.point : qlen < o.qlen;
      case IndKind::Interval: return a != o.a ? a < o.a : b < o.b;
    }
    return false;
  }

  std::string str() const;
};

// Validates that the module shape belongs to the ring's catalog.
void check_in_catalog(const RingDescriptor& ring, const Indecomposable& x);

struct DimVector {
  std::vector<long long> entries;  // one per vertex

  bool operator==(const DimVector& o) const { return entries == o.entries; }
  DimVector operator+(const DimVector& o) const {
    DimVector r = *this;
    for (size_t i = 0; i < entries.size() && i < o.entries.size(); ++i)
      r.entries[i] += o.entries[i];
    return r;
  }
  long long total() const {
    long long t = 0;
    for (long long e : entries) t += e;
    return t;
  }
  std::string str() const;
};

// Kronecker convention: entry 0 = vertex 2 (source), entry 1 = vertex 1 (sink).
// Preprojective(n) = (n, n+1), Preinjective(n) = (n+1, n), Regular = (k, k).
DimVector dim_vector(const RingDescriptor& ring, const Indecomposable& x);

// Hom and Ext^1 of a pair: abelian group types over Z, dimensions over a
// field.
struct HomExtRecord {
  bool over_z = false;
  AbGroup hom_group, ext_group;
  long long hom_dim = 0, ext_dim = 0;

  bool hom_is_zero() const { return over_z ? hom_group.is_zero() : hom_dim == 0; }
  bool ext_is_zero() const { return over_z ? ext_group.is_zero() : ext_dim == 0; }
  std::string hom_str() const {
    return over_z ? hom_group.str() : "dim " + std::to_string(hom_dim);
  }
  std::string ext_str() const {
    return over_z ? ext_group.str() : "dim " + std::to_string(ext_dim);
  }
};

HomExtRecord hom_invariants(const RingDescriptor& ring, const Indecomposable& x,
                            const Indecomposable& y);

long long euler_form(const RingDescriptor& ring, const DimVector& d,
                     const DimVector& e);

// dim(vertex 2) - dim(vertex 1); separates the three Kronecker families.
long long defect(const RingDescriptor& ring, const DimVector& d);

// Auslander-Reiten translate over the Kronecker algebra. Undefined on the
// two projectives (tau) and the two injectives (tau_inverse).
Indecomposable tau(const RingDescriptor& ring, const Indecomposable& x);
Indecomposable tau_inverse(const RingDescriptor& ring, const Indecomposable& x);

bool is_exceptional(const RingDescriptor& ring, const Indecomposable& x);
bool is_exceptional_sequence(const RingDescriptor& ring,
                             const std::vector<Indecomposable>& xs);

// Interval calculus over DynkinAn with linear orientation 1 -> 2 -> ... -> n:
// a nonzero map [a,b] -> [c,d] exists iff c <= a <= d <= b, with
// image [a,d], kernel [d+1,b], cokernel [c,a-1] (empty intervals dropped).
bool interval_hom_nonzero(const Indecomposable& x, const Indecomposable& y);
bool interval_ext_nonzero(const Indecomposable& x, const Indecomposable& y);
std::vector<Indecomposable> interval_kernel(const Indecomposable& x,
                                            const Indecomposable& y);
std::vector<Indecomposable> interval_cokernel(const Indecomposable& x,
                                              const Indecomposable& y);
// middle terms of the nonsplit extension of x by y, when it exists
std::vector<Indecomposable> interval_extension_middle(const Indecomposable& x,
                                                      const Indecomposable& y);

// All interval modules over DynkinAn: n(n+1)/2 of them.
std::vector<Indecomposable> all_intervals(int n);

}  // namespace metcomp
