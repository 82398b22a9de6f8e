#pragma once

#include <set>
#include <string>

#include "metcomp/field.hpp"

namespace metcomp {

enum class Card { Finite, CountablyInfinite, Uncountable };

struct Cardinality {
  Card cls = Card::Finite;
  long long count = 0;  // valid when finite

  std::string str() const {
    switch (cls) {
      case Card::Finite: return "finite(" + std::to_string(count) + ")";
      case Card::CountablyInfinite: return "countably infinite";
      case Card::Uncountable: return "uncountable";
    }
    return "?";
  }
};

// Set of primes, normalized to an explicit set or the complement of one.
// Tail sets {p : p >= N} are cofinite and normalize away on construction.
struct PrimeSet {
  bool cofinite = false;
  std::set<long long> elems;

  static PrimeSet finite(std::set<long long> s);
  static PrimeSet none() { return finite({}); }
  static PrimeSet all();
  static PrimeSet tail(long long min_prime);  // {p prime : p >= min_prime}

  bool contains(long long p) const;
  bool is_empty() const { return !cofinite && elems.empty(); }
  bool is_all() const { return cofinite && elems.empty(); }
  Cardinality cardinality() const;

  PrimeSet complement() const;
  PrimeSet set_union(const PrimeSet& o) const;
  PrimeSet set_intersect(const PrimeSet& o) const;
  bool subset_of(const PrimeSet& o) const;
  bool operator==(const PrimeSet& o) const {
    return cofinite == o.cofinite && elems == o.elems;
  }
  bool operator!=(const PrimeSet& o) const { return !(*this == o); }

  std::string str() const;
};

bool is_prime_number(long long n);
std::vector<long long> primes_below(long long n);
// k-th prime, k >= 0 (2, 3, 5, ...)
long long nth_prime(long long k);

// Set of points of the projective line over a fixed field. Variants:
//   Finite(E)      explicit members
//   Cofinite(E)    complement of explicit members
//   TailUnion(E,N) E together with all enumerated points of index >= N
//   CoTail(E,N)    complement of TailUnion(E,N)
// Tail variants survive only over symbolic fields (elsewhere the enumeration
// exhausts the line, so tails normalize to Cofinite/Finite).
struct PointSet {
  enum class Kind { Finite, Cofinite, TailUnion, CoTail };
  FieldDescriptor field;
  Kind kind = Kind::Finite;
  std::set<ProjPoint> elems;
  long long tail_from = 0;

  static PointSet finite(const FieldDescriptor& f, std::set<ProjPoint> s);
  static PointSet none(const FieldDescriptor& f) { return finite(f, {}); }
  static PointSet cofinite(const FieldDescriptor& f, std::set<ProjPoint> s);
  static PointSet all(const FieldDescriptor& f) { return cofinite(f, {}); }
  static PointSet tail_union(const FieldDescriptor& f, std::set<ProjPoint> extra,
                             long long from);

  bool contains(const ProjPoint& p) const;
  bool is_empty() const;
  bool is_all() const;
  Cardinality cardinality() const;
  bool is_countable() const { return cardinality().cls != Card::Uncountable; }

  PointSet complement() const;
  PointSet set_union(const PointSet& o) const;
  PointSet set_intersect(const PointSet& o) const;
  bool subset_of(const PointSet& o) const;
  bool operator==(const PointSet& o) const;
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  std::string str() const;
};

}  // namespace metcomp
