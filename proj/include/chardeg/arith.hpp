#pragma once
#include <gmpxx.h>

#include <utility>
#include <vector>

#include "chardeg/error.hpp"

namespace chardeg {

using Int = mpz_class;

// Controls for one factorize() call.  budget_ms is wall time; max_bits caps
// the input magnitude (0 = library default, which is 512 unless the
// CHARDEG_MAX_FACTOR_BITS environment variable overrides it).
struct FactorBudget {
  long budget_ms = 5000;
  long max_bits = 0;
};

long default_max_factor_bits();

// Exact factorization: primes strictly increasing, exponents >= 1, and
// value == product of prime^exponent.  value == 1 iff entries is empty.
struct Factorization {
  std::vector<std::pair<Int, unsigned long>> entries;
  Int value = 1;
};

// Deterministic Miller-Rabin below 2^64 (12 fixed bases); above that GMP's
// probabilistic battery at 40 rounds.  See README for the rationale.
bool is_prime(const Int& n);

Factorization factorize(const Int& n, const FactorBudget& budget = {});
int moebius(unsigned long n);

// Phi_n(q) via Moebius inversion over q^d - 1; exact division throughout.
Int cyclotomic_value(unsigned long n, const Int& q);

Int p_part(const Int& n, const Int& p);
std::vector<Int> prime_set(const Int& n, const FactorBudget& budget = {});

Int pow_int(const Int& base, unsigned long e);
Int factorial_int(unsigned long n);

}  // namespace chardeg
