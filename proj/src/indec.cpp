#include "metcomp/indec.hpp"

#include <algorithm>

namespace metcomp {

std::string Indecomposable::str() const {
  switch (kind) {
    case IndKind::ZFree: return "Z";
    case IndKind::ZTorsion: {
      long long m = p;
      for (int i = 1; i < k; ++i) m *= p;
      return "Z/" + std::to_string(m);
    }
    case IndKind::Preprojective: return "P" + std::to_string(n);
    case IndKind::Preinjective: return "Q" + std::to_string(n);
    case IndKind::Regular:
      return "R(" + point.str() + "," + std::to_string(qlen) + ")";
    case IndKind::Interval:
      return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
  return "?";
}

void check_in_catalog(const RingDescriptor& ring, const Indecomposable& x) {
  switch (ring.kind) {
    case RingKind::IntegerRing:
      require(x.kind == IndKind::ZFree || x.kind == IndKind::ZTorsion,
              Err::WrongRing, x.str() + " is not a Z-module shape");
      return;
    case RingKind::LocalizedIntegerRing:
      require(x.kind == IndKind::ZFree ||
                  (x.kind == IndKind::ZTorsion && !ring.inverted.contains(x.p)),
              Err::WrongRing,
              x.str() + " is not in the catalog of " + ring.str());
      return;
    case RingKind::Kronecker:
      require(x.kind == IndKind::Preprojective || x.kind == IndKind::Preinjective ||
                  x.kind == IndKind::Regular,
              Err::WrongRing, x.str() + " is not a Kronecker shape");
      return;
    case RingKind::DynkinAn:
      require(x.kind == IndKind::Interval && x.b <= ring.an_n, Err::WrongRing,
              x.str() + " is not an interval over " + ring.str());
      return;
  }
}

std::string DimVector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

DimVector dim_vector(const RingDescriptor& ring, const Indecomposable& x) {
  check_in_catalog(ring, x);
  DimVector d;
  if (ring.kind == RingKind::Kronecker) {
    d.entries.assign(2, 0);
    switch (x.kind) {
      case IndKind::Preprojective:
        d.entries = {x.n, x.n + 1};
        break;
      case IndKind::Preinjective:
        d.entries = {x.n + 1, x.n};
        break;
      default:
        d.entries = {x.qlen, x.qlen};
        break;
    }
    return d;
  }
  require(ring.kind == RingKind::DynkinAn, Err::WrongRing,
          "dimension vectors exist over field algebras only");
  d.entries.assign(ring.an_n, 0);
  for (int v = x.a; v <= x.b; ++v) d.entries[v - 1] = 1;
  return d;
}

namespace {

AbGroup cyclic(long long m) {
  AbGroup g;
  if (m > 1) g.torsion.push_back(m);
  return g;
}

long long ppow(long long p, int k) {
  long long m = 1;
  for (int i = 0; i < k; ++i) m = checked_mul(m, p);
  return m;
}

HomExtRecord z_pair(const Indecomposable& x, const Indecomposable& y) {
  HomExtRecord r;
  r.over_z = true;
  if (x.kind == IndKind::ZFree && y.kind == IndKind::ZFree) {
    r.hom_group.free_rank = 1;
    return r;
  }
  if (x.kind == IndKind::ZFree) {  // Hom(Z, Z/p^k) = Z/p^k, Ext = 0
    r.hom_group = cyclic(ppow(y.p, y.k));
    return r;
  }
  if (y.kind == IndKind::ZFree) {  // Hom(Z/p^k, Z) = 0, Ext = Z/p^k
    r.ext_group = cyclic(ppow(x.p, x.k));
    return r;
  }
  if (x.p != y.p) return r;
  long long m = ppow(x.p, std::min(x.k, y.k));
  r.hom_group = cyclic(m);
  r.ext_group = cyclic(m);
  return r;
}

// closed forms for the Kronecker catalog; dimensions only, valid over every
// field including the symbolic one (they depend on point equality alone)
void kronecker_pair(const Indecomposable& x, const Indecomposable& y,
                    long long& hom, long long& ext) {
  hom = ext = 0;
  auto pos = [](long long v) { return v > 0 ? v : 0; };
  if (x.kind == IndKind::Preprojective && y.kind == IndKind::Preprojective) {
    hom = pos(y.n - x.n + 1);
    ext = pos(x.n - y.n - 1);
  } else if (x.kind == IndKind::Preinjective && y.kind == IndKind::Preinjective) {
    hom = pos(x.n - y.n + 1);
    ext = pos(y.n - x.n - 1);
  } else if (x.kind == IndKind::Preprojective && y.kind == IndKind::Preinjective) {
    hom = x.n + y.n;
  } else if (x.kind == IndKind::Preinjective && y.kind == IndKind::Preprojective) {
    ext = x.n + y.n + 2;
  } else if (x.kind == IndKind::Preprojective && y.kind == IndKind::Regular) {
    hom = y.qlen;
  } else if (x.kind == IndKind::Regular && y.kind == IndKind::Preprojective) {
    ext = x.qlen;
  } else if (x.kind == IndKind::Regular && y.kind == IndKind::Preinjective) {
    hom = x.qlen;
  } else if (x.kind == IndKind::Preinjective && y.kind == IndKind::Regular) {
    ext = y.qlen;
  } else {  // regular, regular
    if (x.point == y.point) hom = ext = std::min(x.qlen, y.qlen);
  }
}

bool interval_nonempty(int a, int b) { return a <= b; }

}  // namespace

HomExtRecord hom_invariants(const RingDescriptor& ring, const Indecomposable& x,
                            const Indecomposable& y) {
  check_in_catalog(ring, x);
  check_in_catalog(ring, y);
  HomExtRecord r;
  switch (ring.kind) {
    case RingKind::IntegerRing:
    case RingKind::LocalizedIntegerRing:
      return z_pair(x, y);
    case RingKind::Kronecker:
      kronecker_pair(x, y, r.hom_dim, r.ext_dim);
      return r;
    case RingKind::DynkinAn:
      r.hom_dim = interval_hom_nonzero(x, y) ? 1 : 0;
      r.ext_dim = interval_ext_nonzero(x, y) ? 1 : 0;
      return r;
  }
  return r;
}

long long euler_form(const RingDescriptor& ring, const DimVector& d,
                     const DimVector& e) {
  require(ring.over_field_algebra(), Err::WrongRing,
          "the Euler form lives over the quiver algebras");
  if (ring.kind == RingKind::Kronecker) {
    require(d.entries.size() == 2 && e.entries.size() == 2, Err::InvalidDescriptor,
            "Kronecker dimension vectors have two entries");
    // vertices (2, 1), two arrows 2 -> 1
    return d.entries[0] * e.entries[0] + d.entries[1] * e.entries[1] -
           2 * d.entries[0] * e.entries[1];
  }
  int n = ring.an_n;
  require((int)d.entries.size() == n && (int)e.entries.size() == n,
          Err::InvalidDescriptor, "dimension vector length mismatch");
  long long v = 0;
  for (int i = 0; i < n; ++i) v += d.entries[i] * e.entries[i];
  for (int i = 0; i + 1 < n; ++i) v -= d.entries[i] * e.entries[i + 1];
  return v;
}

long long defect(const RingDescriptor& ring, const DimVector& d) {
  require(ring.kind == RingKind::Kronecker, Err::WrongRing,
          "defect is a Kronecker invariant");
  require(d.entries.size() == 2, Err::InvalidDescriptor,
          "Kronecker dimension vectors have two entries");
  return d.entries[0] - d.entries[1];
}

Indecomposable tau(const RingDescriptor& ring, const Indecomposable& x) {
  require(ring.kind == RingKind::Kronecker, Err::WrongRing,
          "tau is implemented over the Kronecker algebra");
  check_in_catalog(ring, x);
  switch (x.kind) {
    case IndKind::Regular:
      return x;  // homogeneous tubes are tau-fixed
    case IndKind::Preprojective:
      // P0 and P1 are the two projectives; the Coxeter action sends
      // dim P_n = (n, n+1) to (n-2, n-1)
      require(x.n >= 2, Err::ProjectiveArgument,
              "tau is undefined on the projective " + x.str());
      return Indecomposable::preprojective(x.n - 2);
    default:
      return Indecomposable::preinjective(x.n + 2);
  }
}

Indecomposable tau_inverse(const RingDescriptor& ring, const Indecomposable& x) {
  require(ring.kind == RingKind::Kronecker, Err::WrongRing,
          "tau is implemented over the Kronecker algebra");
  check_in_catalog(ring, x);
  switch (x.kind) {
    case IndKind::Regular:
      return x;
    case IndKind::Preinjective:
      require(x.n >= 2, Err::InjectiveArgument,
              "tau^{-1} is undefined on the injective " + x.str());
      return Indecomposable::preinjective(x.n - 2);
    default:
      return Indecomposable::preprojective(x.n + 2);
  }
}

bool is_exceptional(const RingDescriptor& ring, const Indecomposable& x) {
  require(ring.over_field_algebra(), Err::WrongRing,
          "exceptionality is defined over field algebras");
  HomExtRecord e = hom_invariants(ring, x, x);
  return e.hom_dim == 1 && e.ext_dim == 0;
}

bool is_exceptional_sequence(const RingDescriptor& ring,
                             const std::vector<Indecomposable>& xs) {
  for (const auto& x : xs)
    if (!is_exceptional(ring, x)) return false;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) {
      HomExtRecord back = hom_invariants(ring, xs[j], xs[i]);
      if (back.hom_dim != 0 || back.ext_dim != 0) return false;
    }
  return true;
}

bool interval_hom_nonzero(const Indecomposable& x, const Indecomposable& y) {
  // [a,b] -> [c,d] surjects onto [a,d] inside the target
  return y.a <= x.a && x.a <= y.b && y.b <= x.b;
}

bool interval_ext_nonzero(const Indecomposable& x, const Indecomposable& y) {
  // nonsplit 0 -> [c,d] -> E -> [a,b] -> 0 glues at the right end of [a,b]
  return x.a + 1 <= y.a && y.a <= x.b + 1 && x.b + 1 <= y.b;
}

std::vector<Indecomposable> interval_kernel(const Indecomposable& x,
                                            const Indecomposable& y) {
  std::vector<Indecomposable> out;
  if (interval_hom_nonzero(x, y) && interval_nonempty(y.b + 1, x.b))
    out.push_back(Indecomposable::interval(y.b + 1, x.b));
  return out;
}

std::vector<Indecomposable> interval_cokernel(const Indecomposable& x,
                                              const Indecomposable& y) {
  std::vector<Indecomposable> out;
  if (interval_hom_nonzero(x, y) && interval_nonempty(y.a, x.a - 1))
    out.push_back(Indecomposable::interval(y.a, x.a - 1));
  return out;
}

std::vector<Indecomposable> interval_extension_middle(const Indecomposable& x,
                                                      const Indecomposable& y) {
  std::vector<Indecomposable> out;
  if (!interval_ext_nonzero(x, y)) return out;
  out.push_back(Indecomposable::interval(x.a, y.b));
  if (interval_nonempty(y.a, x.b)) out.push_back(Indecomposable::interval(y.a, x.b));
  return out;
}

std::vector<Indecomposable> all_intervals(int n) {
  std::vector<Indecomposable> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) out.push_back(Indecomposable::interval(a, b));
  return out;
}

}  // namespace metcomp
