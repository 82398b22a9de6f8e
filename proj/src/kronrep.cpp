#include "metcomp/kronrep.hpp"

#include <algorithm>
#include <numeric>

namespace metcomp {

namespace {

Rat horner(const std::vector<Rat>& coeffs, const Rat& c) {
  Rat v(0);
  for (size_t i = coeffs.size(); i-- > 0;) v = v * c + coeffs[i];
  return v;
}

// divide by (x - c), assuming c is a root
std::vector<Rat> synthetic_divide(const std::vector<Rat>& coeffs, const Rat& c) {
  std::vector<Rat> out(coeffs.size() - 1, Rat(0));
  Rat carry(0);
  for (size_t i = coeffs.size(); i-- > 1;) {
    carry = coeffs[i] + carry * c;
    out[i - 1] = carry;
  }
  return out;
}

std::vector<long long> divisors_of(long long n) {
  n = n < 0 ? -n : n;
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RootReport rational_roots(std::vector<Rat> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  RootReport rep;
  require(!coeffs.empty(), Err::InvalidDescriptor,
          "root extraction on the zero polynomial");
  size_t low = 0;
  while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
  if (low > 0) {
    rep.roots[Rat(0)] = (int)low;
    coeffs.erase(coeffs.begin(), coeffs.begin() + low);
  }
  while (coeffs.size() > 1) {
    // integer model of the polynomial for the rational root bound
    long long den_lcm = 1;
    for (const Rat& r : coeffs)
      den_lcm = checked_mul(den_lcm / std::gcd(den_lcm, r.den()), r.den());
    long long a0 = 0, ad = 0;
    {
      Rat first = coeffs.front() * Rat(den_lcm);
      Rat last = coeffs.back() * Rat(den_lcm);
      a0 = first.num();
      ad = last.num();
    }
    bool found = false;
    for (long long pn : divisors_of(a0)) {
      for (long long qd : divisors_of(ad)) {
        for (int sign = 0; sign < 2 && !found; ++sign) {
          Rat c(sign ? -pn : pn, qd);
          if (horner(coeffs, c).is_zero()) {
            rep.roots[c] += 1;
            coeffs = synthetic_divide(coeffs, c);
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  rep.remainder_degree = (int)coeffs.size() - 1;
  return rep;
}

std::vector<ProjPoint> pencil_support_rational(const KronRep<RatField>& reg) {
  RatField f;
  int d = reg.d2();
  std::vector<ProjPoint> out;
  if (d == 0) return out;
  require(reg.d1() == d, Err::InvalidDescriptor, "pencil is not square");
  // chi(c) = det(c A - B), recovered from d+1 exact evaluations
  Matrix<RatField> V = mat_zero(f, d + 1, d + 1);
  std::vector<Rat> vals(d + 1, Rat(0));
  for (int i = 0; i <= d; ++i) {
    Rat c((long long)i);
    Matrix<RatField> E = mat_zero(f, d, d);
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s)
        E.at(r, s) = c * reg.A.at(r, s) - reg.B.at(r, s);
    vals[i] = det(f, E);
    Rat pw(1);
    for (int j = 0; j <= d; ++j) {
      V.at(i, j) = pw;
      pw = pw * c;
    }
  }
  auto sol = solve(f, V, vals);
  require(sol.has_value(), Err::InvalidDescriptor, "interpolation failure");
  std::vector<Rat> coeffs = *sol;
  int true_deg = -1;
  for (int j = d; j >= 0; --j)
    if (!coeffs[j].is_zero()) {
      true_deg = j;
      break;
    }
  require(true_deg >= 0, Err::InvalidDescriptor,
          "regular pencil with vanishing determinant");
  if (true_deg < d) out.push_back(ProjPoint::zero_one());
  coeffs.resize(true_deg + 1);
  RootReport rr = rational_roots(coeffs);
  require(rr.remainder_degree == 0, Err::NotSplitOverField,
          "a regular summand is supported at an irrational point of the "
          "projective line");
  for (const auto& [root, mult] : rr.roots) out.push_back(ProjPoint::rat(root));
  return out;
}

namespace {

template <class F>
std::vector<Indecomposable> decompose_with_points(
    const F& f, const KronRep<F>& M, const std::vector<ProjPoint>& candidates) {
  std::vector<Indecomposable> out;
  long long d2 = M.d2(), d1 = M.d1();
  long long total = d2 + d1;
  if (total == 0) return out;
  long long kmax = (total - 1) / 2;

  // multiplicity of P_a from second differences of k -> dim Hom(M, P_k):
  // only the preprojective part reaches forward into preprojectives
  std::vector<long long> fvals(kmax + 1, 0);
  for (long long k = 0; k <= kmax; ++k)
    fvals[k] =
        hom_dim_reps(f, M, canonical_rep(f, Indecomposable::preprojective(k)));
  auto second_diff = [](const std::vector<long long>& v, long long k) {
    long long a = v[k];
    long long b = k >= 1 ? v[k - 1] : 0;
    long long c = k >= 2 ? v[k - 2] : 0;
    return a - 2 * b + c;
  };
  long long used2 = 0, used1 = 0;
  for (long long k = 0; k <= kmax; ++k) {
    long long mult = second_diff(fvals, k);
    require(mult >= 0, Err::InvalidDescriptor, "negative sieve multiplicity");
    for (long long i = 0; i < mult; ++i)
      out.push_back(Indecomposable::preprojective(k));
    used2 += mult * k;
    used1 += mult * (k + 1);
  }

  std::vector<long long> gvals(kmax + 1, 0);
  for (long long k = 0; k <= kmax; ++k)
    gvals[k] =
        hom_dim_reps(f, canonical_rep(f, Indecomposable::preinjective(k)), M);
  for (long long k = 0; k <= kmax; ++k) {
    long long mult = second_diff(gvals, k);
    require(mult >= 0, Err::InvalidDescriptor, "negative sieve multiplicity");
    for (long long i = 0; i < mult; ++i)
      out.push_back(Indecomposable::preinjective(k));
    used2 += mult * (k + 1);
    used1 += mult * k;
  }

  long long reg2 = d2 - used2, reg1 = d1 - used1;
  require(reg2 == reg1 && reg2 >= 0, Err::InvalidDescriptor,
          "decomposition bookkeeping failure");
  long long dreg = reg2;
  long long found = 0;
  if (dreg > 0) {
    for (const auto& pt : candidates) {
      // Hom(R(pt, l), M): preinjective contamination cancels in the
      // second difference over l
      std::vector<long long> h(dreg + 2, 0);
      for (long long l = 1; l <= dreg + 1; ++l)
        h[l] = hom_dim_reps(f, canonical_rep(f, Indecomposable::regular(pt, l)), M);
      for (long long l = 1; l <= dreg; ++l) {
        long long mult = 2 * h[l] - h[l + 1] - h[l - 1];
        require(mult >= 0, Err::InvalidDescriptor, "negative sieve multiplicity");
        for (long long i = 0; i < mult; ++i)
          out.push_back(Indecomposable::regular(pt, l));
        found += mult * l;
      }
    }
  }
  require(found == dreg, Err::NotSplitOverField,
          "regular part does not decompose over the given field");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Indecomposable> decompose_rational(const KronRep<RatField>& M) {
  RatField f;
  long long total = M.d2() + M.d1();
  std::vector<ProjPoint> candidates;
  if (total > 0) {
    // strip preprojectives, then preinjectives; points survive reflections
    KronRep<RatField> R1 = M;
    long long steps = (total + 1) / 2;
    for (long long i = 0; i < steps; ++i) R1 = coxeter_plus(f, R1);
    for (long long i = 0; i < steps; ++i) R1 = coxeter_minus(f, R1);
    KronRep<RatField> R2 = R1;
    for (long long i = 0; i < steps; ++i) R2 = coxeter_minus(f, R2);
    for (long long i = 0; i < steps; ++i) R2 = coxeter_plus(f, R2);
    candidates = pencil_support_rational(R2);
  }
  return decompose_with_points(f, M, candidates);
}

std::vector<Indecomposable> decompose_finite(const FieldDescriptor& fd,
                                             const KronRep<GFField>& M) {
  GFField f{&gf_table_for_order(fd.q)};
  std::vector<ProjPoint> candidates = first_points(fd, fd.q + 1);
  return decompose_with_points(f, M, candidates);
}

template <>
std::vector<Indecomposable> decompose_rep<RatField>(const RatField&,
                                                    const FieldDescriptor&,
                                                    const KronRep<RatField>& M) {
  return decompose_rational(M);
}

template <>
std::vector<Indecomposable> decompose_rep<GFField>(const GFField&,
                                                   const FieldDescriptor& fd,
                                                   const KronRep<GFField>& M) {
  return decompose_finite(fd, M);
}

}  // namespace metcomp
