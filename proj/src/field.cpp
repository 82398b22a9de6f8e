#include "metcomp/field.hpp"

#include <algorithm>
#include <numeric>

namespace metcomp {

namespace {

struct RatKey {
  long long h, q, p;
  bool operator<(const RatKey& o) const {
    if (h != o.h) return h < o.h;
    if (q != o.q) return q < o.q;
    return p < o.p;
  }
  bool operator==(const RatKey& o) const {
    return h == o.h && q == o.q && p == o.p;
  }
};

RatKey key_of(const Rat& c) {
  long long p = c.num(), q = c.den();
  long long ap = p < 0 ? -p : p;
  return {std::max(ap, q), q, p};
}

// reduced fractions p/q with max(|p|, q) = h, in (q, p) order
std::vector<RatKey> height_block(long long h) {
  std::vector<RatKey> out;
  for (long long q = 1; q <= h; ++q) {
    for (long long p = -h; p <= h; ++p) {
      long long ap = p < 0 ? -p : p;
      if (std::max(ap, q) != h) continue;
      if (std::gcd(ap, q) != 1 && !(p == 0 && q == 1)) continue;
      if (p == 0 && q != 1) continue;
      out.push_back({h, q, p});
    }
  }
  return out;
}

}  // namespace

long long point_index(const FieldDescriptor& f, const ProjPoint& p) {
  switch (f.kind) {
    case FieldKind::Rational: {
      if (p.kind == ProjPoint::Kind::ZeroOne) return 0;
      require(p.kind == ProjPoint::Kind::RatC, Err::InvalidDescriptor,
              "point does not match field Q");
      RatKey k = key_of(p.crat);
      long long rank = 0;
      for (long long h = 1; h <= k.h; ++h) {
        for (const RatKey& kk : height_block(h)) {
          if (kk == k) return 1 + rank;
          ++rank;
        }
      }
      raise(Err::InvalidDescriptor, "point enumeration failure");
    }
    case FieldKind::Finite: {
      if (p.kind == ProjPoint::Kind::ZeroOne) return 0;
      require(p.kind == ProjPoint::Kind::GFC && p.cgf >= 0 && p.cgf < f.q,
              Err::InvalidDescriptor, "point does not match finite field");
      return 1 + p.cgf;
    }
    case FieldKind::SymbolicUncountable: {
      require(p.kind == ProjPoint::Kind::Label || p.kind == ProjPoint::Kind::ZeroOne,
              Err::InvalidDescriptor, "point does not match symbolic field");
      if (p.kind == ProjPoint::Kind::ZeroOne) return -1;
      const std::string& s = p.label;
      if (s.size() < 2 || s[0] != 't') return -1;
      long long v = 0;
      for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return -1;
        v = v * 10 + (s[i] - '0');
        if (v > (1LL << 40)) return -1;
      }
      if (s[1] == '0' && s.size() > 2) return -1;
      return v;
    }
  }
  return -1;
}

ProjPoint point_at_index(const FieldDescriptor& f, long long idx) {
  require(idx >= 0, Err::InvalidDescriptor, "negative enumeration index");
  switch (f.kind) {
    case FieldKind::Rational: {
      if (idx == 0) return ProjPoint::zero_one();
      long long rank = idx - 1;
      for (long long h = 1;; ++h) {
        auto block = height_block(h);
        if (rank < (long long)block.size())
          return ProjPoint::rat(Rat(block[rank].p, block[rank].q));
        rank -= (long long)block.size();
        require(h < (1LL << 20), Err::BoundsExceeded, "enumeration index too large");
      }
    }
    case FieldKind::Finite: {
      require(idx <= f.q, Err::InvalidDescriptor,
              "index beyond the finite projective line");
      if (idx == 0) return ProjPoint::zero_one();
      return ProjPoint::gf(idx - 1);
    }
    case FieldKind::SymbolicUncountable:
      return ProjPoint::labeled("t" + std::to_string(idx));
  }
  raise(Err::InvalidDescriptor, "bad field");
}

std::vector<ProjPoint> first_points(const FieldDescriptor& f, long long count) {
  if (f.kind == FieldKind::Finite) count = std::min(count, f.q + 1);
  std::vector<ProjPoint> out;
  for (long long i = 0; i < count; ++i) out.push_back(point_at_index(f, i));
  return out;
}

}  // namespace metcomp
