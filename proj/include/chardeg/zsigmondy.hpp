#pragma once
#include <optional>
#include <vector>

#include "chardeg/arith.hpp"

namespace chardeg {

// Primes dividing q^n - 1 but no q^m - 1 with m < n.  Candidates are the
// prime factors of Phi_n(q); primitivity is the order check
// q^(n/s) != 1 (mod l) for every prime s | n.
std::vector<Int> primitive_prime_divisors(const Int& q, unsigned long n,
                                          const FactorBudget& budget = {});

// Smallest primitive prime divisor, absent when the set is empty.  For
// n >= 3 and (q, n) != (2, 6) presence is guaranteed and enforced.
std::optional<Int> l(const Int& q, unsigned long n, const FactorBudget& budget = {});

// l(q, 2n) for odd n; the boundary (2, 3) and even n are rejected.  At the
// n = 1 edge the set can still be empty (e.g. q = 3), hence the optional.
std::optional<Int> l_neg(const Int& q, unsigned long n, const FactorBudget& budget = {});

}  // namespace chardeg
