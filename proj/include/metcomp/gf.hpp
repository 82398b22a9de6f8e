#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metcomp/errors.hpp"

namespace metcomp {

// Finite field GF(p^k). Elements are encoded as integers in [0, p^k): the
// base-p digits are the coefficients of the residue polynomial, least
// significant digit = constant term. For k = 1 this is plain mod-p arithmetic.
class GFTable {
 public:
  GFTable(long long p, int k);

  long long p() const { return p_; }
  int k() const { return k_; }
  long long q() const { return q_; }

  long long add(long long a, long long b) const;
  long long sub(long long a, long long b) const;
  long long neg(long long a) const;
  long long mul(long long a, long long b) const;
  long long inv(long long a) const;
  long long div(long long a, long long b) const { return mul(a, inv(b)); }

  // x^k = -(lower terms); modulus coefficients c_0..c_{k-1} with
  // irreducible = x^k + c_{k-1} x^{k-1} + ... + c_0.
  const std::vector<long long>& modulus() const { return modcoef_; }

  std::string elem_str(long long a) const;

 private:
  std::vector<long long> decode(long long a) const;
  long long encode(const std::vector<long long>& digits) const;

  long long p_;
  int k_;
  long long q_;
  std::vector<long long> modcoef_;
};

// Shared registry; tables are built once per (p, k).
const GFTable& gf_table(long long p, int k);

// Splits q into (p, k) and validates primality. Raises UnsupportedField for
// non prime powers or oversized fields.
std::pair<long long, int> factor_prime_power(long long q);

const GFTable& gf_table_for_order(long long q);

}  // namespace metcomp
