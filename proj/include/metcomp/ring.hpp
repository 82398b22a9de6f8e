#pragma once

#include <string>

#include "metcomp/sets.hpp"

namespace metcomp {

enum class RingKind { IntegerRing, LocalizedIntegerRing, Kronecker, DynkinAn };

struct RingDescriptor {
  RingKind kind = RingKind::IntegerRing;
  FieldDescriptor field;  // Kronecker / DynkinAn
  PrimeSet inverted;      // LocalizedIntegerRing
  int an_n = 0;           // DynkinAn

  static RingDescriptor integers() { return {}; }
  static RingDescriptor localized(PrimeSet inv) {
    RingDescriptor r;
    r.kind = RingKind::LocalizedIntegerRing;
    r.inverted = std::move(inv);
    return r;
  }
  static RingDescriptor kronecker(FieldDescriptor f) {
    RingDescriptor r;
    r.kind = RingKind::Kronecker;
    r.field = f;
    return r;
  }
  static RingDescriptor dynkin(int n, FieldDescriptor f = FieldDescriptor::rational()) {
    require(n >= 1 && n <= 8, Err::UnsupportedRing,
            "DynkinAn is supported for n <= 8");
    RingDescriptor r;
    r.kind = RingKind::DynkinAn;
    r.an_n = n;
    r.field = f;
    return r;
  }

  bool operator==(const RingDescriptor& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case RingKind::IntegerRing: return true;
      case RingKind::LocalizedIntegerRing: return inverted == o.inverted;
      case RingKind::Kronecker: return field == o.field;
      case RingKind::DynkinAn: return an_n == o.an_n && field == o.field;
    }
    return false;
  }
  bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

  bool is_integerish() const {
    return kind == RingKind::IntegerRing || kind == RingKind::LocalizedIntegerRing;
  }
  bool over_field_algebra() const {
    return kind == RingKind::Kronecker || kind == RingKind::DynkinAn;
  }
  int vertex_count() const {
    switch (kind) {
      case RingKind::Kronecker: return 2;
      case RingKind::DynkinAn: return an_n;
      default: return 0;
    }
  }

  std::string str() const {
    switch (kind) {
      case RingKind::IntegerRing: return "Z";
      case RingKind::LocalizedIntegerRing:
        if (inverted.is_all()) return "Q";
        return "Z[" + inverted.str() + "^-1]";
      case RingKind::Kronecker: return "Kronecker/" + field.str();
      case RingKind::DynkinAn:
        return "A" + std::to_string(an_n) + "/" + field.str();
    }
    return "?";
  }
};

inline void check_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
  require(a == b, Err::MixedRings,
          "operands live over different rings: " + a.str() + " vs " + b.str());
}

}  // namespace metcomp
