#include "metcomp/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace metcomp {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, index = degree.
using Poly = std::vector<long long>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, long long p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// Remainder of f by monic g.
Poly poly_rem(Poly f, const Poly& g, long long p) {
  trim(f);
  while (f.size() >= g.size() && !f.empty()) {
    long long c = f.back();
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

// Decodes n < p^d into a degree-< d coefficient vector.
Poly decode_poly(long long n, long long p) {
  Poly f;
  while (n > 0) {
    f.push_back(n % p);
    n /= p;
  }
  return f;
}

// Irreducibility over F_p by trial division with all monic polynomials of
// degree <= deg/2. Fields here are tiny so brute force is fine.
bool poly_irreducible(const Poly& f, long long p) {
  int deg = (int)f.size() - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long lower = 0; lower < count; ++lower) {
      Poly g = decode_poly(lower, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long mod_inv(long long a, long long p) {
  long long x, y;
  a = ((a % p) + p) % p;
  ext_gcd(a, p, x, y);
  return ((x % p) + p) % p;
}

}  // namespace

GFTable::GFTable(long long p, int k) : p_(p), k_(k) {
  require(is_prime(p), Err::UnsupportedField,
          "field order base " + std::to_string(p) + " is not prime");
  require(k >= 1 && k <= 12, Err::UnsupportedField, "field degree out of range");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    require(q_ <= (1LL << 30), Err::UnsupportedField, "field order too large");
  }
  if (k == 1) {
    modcoef_.assign(1, 0);
    return;
  }
  // smallest monic irreducible of degree k, by lower-coefficient value
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long lower = 1; lower < count; ++lower) {
    Poly f = decode_poly(lower, p);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (poly_irreducible(f, p)) {
      modcoef_.assign(f.begin(), f.begin() + k);
      return;
    }
  }
  raise(Err::UnsupportedField, "no irreducible polynomial found");
}

std::vector<long long> GFTable::decode(long long a) const {
  std::vector<long long> d(k_, 0);
  for (int i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

long long GFTable::encode(const std::vector<long long>& digits) const {
  long long a = 0;
  for (int i = k_ - 1; i >= 0; --i) a = a * p_ + digits[i];
  return a;
}

long long GFTable::add(long long a, long long b) const {
  auto da = decode(a), db = decode(b);
  for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

long long GFTable::sub(long long a, long long b) const { return add(a, neg(b)); }

long long GFTable::neg(long long a) const {
  auto da = decode(a);
  for (int i = 0; i < k_; ++i) da[i] = (p_ - da[i]) % p_;
  return encode(da);
}

long long GFTable::mul(long long a, long long b) const {
  if (k_ == 1) return a * b % p_;
  Poly f = decode(a), g = decode(b);
  trim(f);
  trim(g);
  Poly h = poly_mul(f, g, p_);
  Poly m = modcoef_;
  m.push_back(1);
  h = poly_rem(h, m, p_);
  h.resize(k_, 0);
  return encode(h);
}

long long GFTable::inv(long long a) const {
  require(a != 0, Err::BoundsExceeded, "inverse of zero field element");
  if (k_ == 1) return mod_inv(a, p_);
  // a^(q-2); q is small so square-and-multiply in the field is cheap
  long long r = 1, base = a, e = q_ - 2;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string GFTable::elem_str(long long a) const {
  if (k_ == 1) return std::to_string(a);
  auto d = decode(a);
  std::string s;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
    if (i >= 1) {
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

const GFTable& gf_table(long long p, int k) {
  static std::mutex mu;
  static std::map<std::pair<long long, int>, std::unique_ptr<GFTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<GFTable>(p, k)).first;
  return *it->second;
}

std::pair<long long, int> factor_prime_power(long long q) {
  require(q >= 2, Err::UnsupportedField, "field order must be >= 2");
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int k = 0;
      long long m = q;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      require(m == 1, Err::UnsupportedField,
              std::to_string(q) + " is not a prime power");
      return {p, k};
    }
  }
  return {q, 1};
}

const GFTable& gf_table_for_order(long long q) {
  auto [p, k] = factor_prime_power(q);
  return gf_table(p, k);
}

}  // namespace metcomp
