#include "metcomp/sets.hpp"

#include <algorithm>

namespace metcomp {

bool is_prime_number(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> primes_below(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p < n; ++p)
    if (is_prime_number(p)) out.push_back(p);
  return out;
}

long long nth_prime(long long k) {
  long long p = 1;
  for (long long i = 0; i <= k; ++i) {
    do {
      ++p;
    } while (!is_prime_number(p));
  }
  return p;
}

PrimeSet PrimeSet::finite(std::set<long long> s) {
  for (long long p : s)
    require(is_prime_number(p), Err::InvalidDescriptor,
            std::to_string(p) + " is not prime");
  PrimeSet r;
  r.cofinite = false;
  r.elems = std::move(s);
  return r;
}

PrimeSet PrimeSet::all() {
  PrimeSet r;
  r.cofinite = true;
  return r;
}

PrimeSet PrimeSet::tail(long long min_prime) {
  PrimeSet r;
  r.cofinite = true;
  for (long long p : primes_below(min_prime)) r.elems.insert(p);
  return r;
}

bool PrimeSet::contains(long long p) const {
  bool inner = elems.count(p) > 0;
  return cofinite ? (is_prime_number(p) && !inner) : inner;
}

Cardinality PrimeSet::cardinality() const {
  if (cofinite) return {Card::CountablyInfinite, 0};
  return {Card::Finite, (long long)elems.size()};
}

PrimeSet PrimeSet::complement() const {
  PrimeSet r = *this;
  r.cofinite = !cofinite;
  return r;
}

PrimeSet PrimeSet::set_union(const PrimeSet& o) const {
  PrimeSet r;
  if (!cofinite && !o.cofinite) {
    r.cofinite = false;
    r.elems = elems;
    r.elems.insert(o.elems.begin(), o.elems.end());
  } else if (cofinite && o.cofinite) {
    r.cofinite = true;
    for (long long p : elems)
      if (o.elems.count(p)) r.elems.insert(p);
  } else {
    const PrimeSet& co = cofinite ? *this : o;
    const PrimeSet& fi = cofinite ? o : *this;
    r.cofinite = true;
    for (long long p : co.elems)
      if (!fi.elems.count(p)) r.elems.insert(p);
  }
  return r;
}

PrimeSet PrimeSet::set_intersect(const PrimeSet& o) const {
  return complement().set_union(o.complement()).complement();
}

bool PrimeSet::subset_of(const PrimeSet& o) const {
  return set_intersect(o.complement()).is_empty();
}

std::string PrimeSet::str() const {
  auto list = [this]() {
    std::string s = "{";
    bool first = true;
    for (long long p : elems) {
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
    return s + "}";
  };
  if (!cofinite) return list();
  if (elems.empty()) return "all";
  return "all-" + list();
}

namespace {

void validate_point(const FieldDescriptor& f, const ProjPoint& p) {
  switch (f.kind) {
    case FieldKind::Rational:
      require(p.kind == ProjPoint::Kind::ZeroOne || p.kind == ProjPoint::Kind::RatC,
              Err::InvalidDescriptor, "point " + p.str() + " is not over Q");
      return;
    case FieldKind::Finite:
      require(p.kind == ProjPoint::Kind::ZeroOne ||
                  (p.kind == ProjPoint::Kind::GFC && p.cgf >= 0 && p.cgf < f.q),
              Err::InvalidDescriptor,
              "point " + p.str() + " is not over " + f.str());
      return;
    case FieldKind::SymbolicUncountable:
      require(p.kind == ProjPoint::Kind::ZeroOne || p.kind == ProjPoint::Kind::Label,
              Err::InvalidDescriptor,
              "point " + p.str() + " is not over the symbolic field");
      return;
  }
}

std::set<ProjPoint> full_line(const FieldDescriptor& f) {
  std::set<ProjPoint> u;
  for (const auto& p : first_points(f, f.q + 1)) u.insert(p);
  return u;
}

}  // namespace

PointSet PointSet::finite(const FieldDescriptor& f, std::set<ProjPoint> s) {
  for (const auto& p : s) validate_point(f, p);
  PointSet r;
  r.field = f;
  r.kind = Kind::Finite;
  r.elems = std::move(s);
  return r;
}

PointSet PointSet::cofinite(const FieldDescriptor& f, std::set<ProjPoint> s) {
  for (const auto& p : s) validate_point(f, p);
  if (f.kind == FieldKind::Finite) {
    std::set<ProjPoint> u = full_line(f), out;
    for (const auto& p : u)
      if (!s.count(p)) out.insert(p);
    return finite(f, std::move(out));
  }
  PointSet r;
  r.field = f;
  r.kind = Kind::Cofinite;
  r.elems = std::move(s);
  return r;
}

PointSet PointSet::tail_union(const FieldDescriptor& f, std::set<ProjPoint> extra,
                              long long from) {
  for (const auto& p : extra) validate_point(f, p);
  require(from >= 0, Err::InvalidDescriptor, "negative tail bound");
  if (f.kind == FieldKind::Finite) {
    std::set<ProjPoint> s = std::move(extra);
    for (long long i = from; i <= f.q; ++i) s.insert(point_at_index(f, i));
    return finite(f, std::move(s));
  }
  if (f.kind == FieldKind::Rational) {
    // the enumeration exhausts the line: tail = complement of a finite set
    std::set<ProjPoint> missing;
    for (long long i = 0; i < from; ++i) {
      ProjPoint p = point_at_index(f, i);
      if (!extra.count(p)) missing.insert(p);
    }
    return cofinite(f, std::move(missing));
  }
  // symbolic: canonical form drops absorbed members
  PointSet r;
  r.field = f;
  r.kind = Kind::TailUnion;
  r.tail_from = from;
  for (const auto& p : extra) {
    long long idx = point_index(f, p);
    if (idx < 0 || idx < from) r.elems.insert(p);
  }
  while (r.tail_from >= 1) {
    ProjPoint prev = point_at_index(f, r.tail_from - 1);
    auto it = r.elems.find(prev);
    if (it == r.elems.end()) break;
    r.elems.erase(it);
    --r.tail_from;
  }
  if (r.tail_from == 0) {
    // E holds only off-enumeration labels now
    std::set<ProjPoint> keep;
    for (const auto& p : r.elems)
      if (point_index(f, p) < 0) keep.insert(p);
    r.elems = std::move(keep);
  }
  return r;
}

bool PointSet::contains(const ProjPoint& p) const {
  switch (kind) {
    case Kind::Finite: return elems.count(p) > 0;
    case Kind::Cofinite: return elems.count(p) == 0;
    case Kind::TailUnion: {
      if (elems.count(p)) return true;
      long long idx = point_index(field, p);
      return idx >= tail_from && idx >= 0;
    }
    case Kind::CoTail: {
      if (elems.count(p)) return false;
      long long idx = point_index(field, p);
      return !(idx >= tail_from && idx >= 0);
    }
  }
  return false;
}

bool PointSet::is_empty() const { return kind == Kind::Finite && elems.empty(); }

bool PointSet::is_all() const {
  if (field.kind == FieldKind::Finite)
    return kind == Kind::Finite && (long long)elems.size() == field.q + 1;
  return kind == Kind::Cofinite && elems.empty();
}

Cardinality PointSet::cardinality() const {
  switch (kind) {
    case Kind::Finite: return {Card::Finite, (long long)elems.size()};
    case Kind::Cofinite:
      return field.kind == FieldKind::SymbolicUncountable
                 ? Cardinality{Card::Uncountable, 0}
                 : Cardinality{Card::CountablyInfinite, 0};
    case Kind::TailUnion: return {Card::CountablyInfinite, 0};
    case Kind::CoTail: return {Card::Uncountable, 0};
  }
  return {Card::Finite, 0};
}

PointSet PointSet::complement() const {
  if (field.kind == FieldKind::Finite) {
    std::set<ProjPoint> out;
    for (const auto& p : full_line(field))
      if (!elems.count(p)) out.insert(p);
    return finite(field, std::move(out));
  }
  PointSet r = *this;
  switch (kind) {
    case Kind::Finite: r.kind = Kind::Cofinite; break;
    case Kind::Cofinite: r.kind = Kind::Finite; break;
    case Kind::TailUnion: r.kind = Kind::CoTail; break;
    case Kind::CoTail: r.kind = Kind::TailUnion; break;
  }
  return r;
}

namespace {

bool positive_kind(PointSet::Kind k) {
  return k == PointSet::Kind::Finite || k == PointSet::Kind::TailUnion;
}

}  // namespace

// Direct rules exist whenever the left operand is a positive kind (Finite or
// TailUnion); complements reduce to those by De Morgan without recursion.
PointSet PointSet::set_intersect(const PointSet& o) const {
  require(field == o.field, Err::MixedRings, "point sets over different fields");
  const FieldDescriptor& f = field;
  if (!positive_kind(kind) && !positive_kind(o.kind)) {
    PointSet a = complement(), b = o.complement();
    return a.set_union(b).complement();
  }
  if (!positive_kind(kind)) return o.set_intersect(*this);
  if (kind == Kind::Finite) {
    std::set<ProjPoint> out;
    for (const auto& p : elems)
      if (o.contains(p)) out.insert(p);
    return finite(f, std::move(out));
  }
  // left is TailUnion
  switch (o.kind) {
    case Kind::Finite:
      return o.set_intersect(*this);
    case Kind::Cofinite: {
      // remove finitely many points from a tail set
      std::set<ProjPoint> keep;
      long long new_from = tail_from;
      for (const auto& p : elems)
        if (!o.elems.count(p)) keep.insert(p);
      std::vector<long long> holes;
      for (const auto& p : o.elems) {
        long long idx = point_index(f, p);
        if (idx >= tail_from) holes.push_back(idx);
      }
      if (!holes.empty()) {
        long long top = *std::max_element(holes.begin(), holes.end()) + 1;
        for (long long i = tail_from; i < top; ++i) {
          ProjPoint p = point_at_index(f, i);
          if (!o.elems.count(p)) keep.insert(p);
        }
        new_from = top;
      }
      return tail_union(f, std::move(keep), new_from);
    }
    case Kind::TailUnion: {
      std::set<ProjPoint> e;
      for (const auto& p : elems)
        if (o.contains(p)) e.insert(p);
      for (const auto& p : o.elems)
        if (contains(p)) e.insert(p);
      return tail_union(f, std::move(e), std::max(tail_from, o.tail_from));
    }
    case Kind::CoTail: {
      // tail minus tail is finite
      std::set<ProjPoint> out;
      for (const auto& p : elems)
        if (o.contains(p)) out.insert(p);
      for (long long i = tail_from; i < o.tail_from; ++i) {
        ProjPoint p = point_at_index(f, i);
        if (o.contains(p)) out.insert(p);
      }
      return finite(f, std::move(out));
    }
  }
  raise(Err::InvalidDescriptor, "point set kind");
}

PointSet PointSet::set_union(const PointSet& o) const {
  require(field == o.field, Err::MixedRings, "point sets over different fields");
  const FieldDescriptor& f = field;
  if (positive_kind(kind) && positive_kind(o.kind)) {
    if (kind == Kind::Finite && o.kind == Kind::Finite) {
      std::set<ProjPoint> u = elems;
      u.insert(o.elems.begin(), o.elems.end());
      return finite(f, std::move(u));
    }
    // at least one TailUnion: combined extras, smaller tail start
    std::set<ProjPoint> u = elems;
    u.insert(o.elems.begin(), o.elems.end());
    long long from;
    if (kind == Kind::TailUnion && o.kind == Kind::TailUnion)
      from = std::min(tail_from, o.tail_from);
    else
      from = kind == Kind::TailUnion ? tail_from : o.tail_from;
    return tail_union(f, std::move(u), from);
  }
  PointSet a = complement(), b = o.complement();
  return a.set_intersect(b).complement();
}

bool PointSet::subset_of(const PointSet& o) const {
  return set_intersect(o.complement()).is_empty();
}

bool PointSet::operator==(const PointSet& o) const {
  return field == o.field && kind == o.kind && tail_from == o.tail_from &&
         elems == o.elems;
}

std::string PointSet::str() const {
  auto list = [this]() {
    std::string s = "{";
    bool first = true;
    for (const auto& p : elems) {
      if (!first) s += ",";
      s += p.str();
      first = false;
    }
    return s + "}";
  };
  switch (kind) {
    case Kind::Finite:
      if (field.kind == FieldKind::Finite &&
          (long long)elems.size() == field.q + 1)
        return "all";
      return list();
    case Kind::Cofinite:
      return elems.empty() ? "all" : "all-" + list();
    case Kind::TailUnion: {
      std::string s = "idx>=" + std::to_string(tail_from);
      if (!elems.empty()) s = list() + "+" + s;
      return s;
    }
    case Kind::CoTail: {
      std::string s = "idx>=" + std::to_string(tail_from);
      if (!elems.empty()) s = list() + "+" + s;
      return "all-(" + s + ")";
    }
  }
  return "?";
}

}  // namespace metcomp
