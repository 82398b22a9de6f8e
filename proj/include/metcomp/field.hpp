#pragma once

#include <string>
#include <vector>

#include "metcomp/gf.hpp"
#include "metcomp/rational.hpp"

namespace metcomp {

enum class FieldKind { Rational, Finite, SymbolicUncountable };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rational;
  long long q = 0;  // order, Finite only

  static FieldDescriptor rational() { return {FieldKind::Rational, 0}; }
  static FieldDescriptor finite(long long order) {
    factor_prime_power(order);
    return {FieldKind::Finite, order};
  }
  static FieldDescriptor symbolic() { return {FieldKind::SymbolicUncountable, 0}; }

  bool operator==(const FieldDescriptor& o) const {
    return kind == o.kind && q == o.q;
  }
  bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

  bool is_uncountable() const { return kind == FieldKind::SymbolicUncountable; }

  // number of points of the projective line, or -1 when infinite
  long long proj_line_size() const {
    return kind == FieldKind::Finite ? q + 1 : -1;
  }

  std::string str() const {
    switch (kind) {
      case FieldKind::Rational: return "Q";
      case FieldKind::Finite: return "F" + std::to_string(q);
      case FieldKind::SymbolicUncountable: return "K(symbolic)";
    }
    return "?";
  }
};

// Point of the projective line over the field, stored normalized: either
// (0:1) or (1:c). Symbolic fields use formal labels instead of coordinates;
// labels of the form t<k> are the canonical enumeration, anything else is a
// free label off the enumeration.
struct ProjPoint {
  enum class Kind { ZeroOne, RatC, GFC, Label };
  Kind kind = Kind::ZeroOne;
  Rat crat;
  long long cgf = 0;
  std::string label;

  static ProjPoint zero_one() { return ProjPoint{}; }
  static ProjPoint rat(const Rat& c) {
    ProjPoint p;
    p.kind = Kind::RatC;
    p.crat = c;
    return p;
  }
  // normalizes (x : y)
  static ProjPoint rat_coords(const Rat& x, const Rat& y) {
    require(!(x.is_zero() && y.is_zero()), Err::InvalidDescriptor,
            "(0:0) is not a point of the projective line");
    if (x.is_zero()) return zero_one();
    return rat(y / x);
  }
  static ProjPoint gf(long long c) {
    ProjPoint p;
    p.kind = Kind::GFC;
    p.cgf = c;
    return p;
  }
  static ProjPoint gf_coords(const GFTable& t, long long x, long long y) {
    require(x != 0 || y != 0, Err::InvalidDescriptor,
            "(0:0) is not a point of the projective line");
    if (x == 0) return zero_one();
    return gf(t.mul(y, t.inv(x)));
  }
  static ProjPoint labeled(const std::string& tag) {
    ProjPoint p;
    p.kind = Kind::Label;
    p.label = tag;
    return p;
  }

  bool operator==(const ProjPoint& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::ZeroOne: return true;
      case Kind::RatC: return crat == o.crat;
      case Kind::GFC: return cgf == o.cgf;
      case Kind::Label: return label == o.label;
    }
    return false;
  }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const {
    if (kind != o.kind) return (int)kind < (int)o.kind;
    switch (kind) {
      case Kind::ZeroOne: return false;
      case Kind::RatC: return crat < o.crat;
      case Kind::GFC: return cgf < o.cgf;
      case Kind::Label: return label < o.label;
    }
    return false;
  }

  std::string str() const {
    switch (kind) {
      case Kind::ZeroOne: return "(0:1)";
      case Kind::RatC: return "(1:" + crat.str() + ")";
      case Kind::GFC: return "(1:" + std::to_string(cgf) + ")";
      case Kind::Label: return "[" + label + "]";
    }
    return "?";
  }
};

// Canonical enumeration of the projective line, used by tail sets.
//   Rational: index 0 = (0:1); then (1:p/q) ranked by (max(|p|,q), q, p).
//   Finite field of order q: index 0 = (0:1), index 1+e = (1:e).
//   Symbolic: index k = label "t<k>"; other labels are off the enumeration.
// Returns -1 for points off the enumeration (free symbolic labels).
long long point_index(const FieldDescriptor& f, const ProjPoint& p);

// Inverse of point_index.
ProjPoint point_at_index(const FieldDescriptor& f, long long idx);

// The first `count` enumerated points (the whole line for finite fields when
// count exceeds it).
std::vector<ProjPoint> first_points(const FieldDescriptor& f, long long count);

}  // namespace metcomp
