#pragma once
#include <string>
#include <vector>

#include "chardeg/arith.hpp"

namespace chardeg {

struct Partition {
  std::vector<long> parts;  // weakly decreasing, positive
  long n = 0;               // sum of parts
};

// All partitions of n in descending lexicographic order ([n] first).
// Exact enumeration is capped at n <= 40.
std::vector<Partition> partitions(long n);

Partition conjugate(const Partition& p);

// n! / product of hook lengths (the symmetric-group degree).
Int hook_degree(const Partition& p);

// b(A_n): self-conjugate partitions split in half, conjugate pairs collapse.
Int max_degree_alternating(long n);

// Distinct degrees of A_n, sorted ascending.
std::vector<Int> alternating_degrees(long n);

// p(n) by the pentagonal-number recurrence (independent of the enumerator).
Int partition_count(long n);

// The three checks behind the b(A_n) lemma, per n:
//   b:  b(A_n) >= 2^(n-1)            (direct, 10 <= n <= 40)
//   p:  p(n)   <= 3^((n-1)/2)        (squared comparison, exact)
//   f:  n!^2   >= 3^(n-1) * 2^(4n)   (n >= 18)
// Entries outside a check's range report "not-applicable".
struct AnLemmaRow {
  long n;
  std::string b_check, p_check, f_check;  // "pass" / "fail" / "not-applicable"
};
std::vector<AnLemmaRow> verify_an_lemma(long n_lo, long n_hi);

}  // namespace chardeg
