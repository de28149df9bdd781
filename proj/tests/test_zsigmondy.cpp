#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chardeg/arith.hpp"
#include "chardeg/zsigmondy.hpp"

using chardeg::Int;

namespace {

// Brute-force oracle: factor q^n - 1 directly and discard every prime that
// already divides q^m - 1 for some m < n.
std::vector<Int> ppd_oracle(const Int& q, unsigned long n) {
  std::vector<Int> out;
  for (const Int& p : chardeg::prime_set(chardeg::pow_int(q, n) - 1)) {
    bool primitive = true;
    for (unsigned long m = 1; m < n && primitive; ++m)
      if ((chardeg::pow_int(q, m) - 1) % p == 0) primitive = false;
    if (primitive) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("primitive prime divisors match the brute-force oracle") {
  for (Int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned long n = 1; n <= 20; ++n) {
      auto fast = chardeg::primitive_prime_divisors(q, n);
      auto slow = ppd_oracle(q, n);
      CHECK_MESSAGE(fast == slow, "q=", q.get_str(), " n=", n);
    }
  }
}

TEST_CASE("the unique Zsigmondy exception at (2,6)") {
  CHECK(chardeg::primitive_prime_divisors(2, 6).empty());
  CHECK(chardeg::l(2, 6) == std::nullopt);
  // and its neighbours are fine
  CHECK(chardeg::l(2, 5) == Int(31));
  CHECK(chardeg::l(2, 7) == Int(127));
  CHECK(chardeg::l(3, 6) == Int(7));
}

TEST_CASE("small Zsigmondy primes") {
  CHECK(chardeg::primitive_prime_divisors(2, 4) == std::vector<Int>{5});
  CHECK(chardeg::primitive_prime_divisors(3, 5) == std::vector<Int>{11});
  CHECK(chardeg::l(2, 3) == Int(7));
  CHECK(chardeg::l(4, 3) == Int(7));    // 4^3 - 1 = 63 = 7 * 9, and 7 | 4^3-1 only
  CHECK(chardeg::l(2, 12) == Int(13));
  CHECK(chardeg::l(5, 4) == Int(13));
}

TEST_CASE("primitive primes have full multiplicative order") {
  for (Int q : {2, 3, 5, 8}) {
    for (unsigned long n = 2; n <= 24; ++n) {
      for (const Int& p : chardeg::primitive_prime_divisors(q, n)) {
        // p divides q^n - 1 ...
        CHECK((chardeg::pow_int(q, n) - 1) % p == 0);
        // ... but no proper q^m - 1; so ord_p(q) = n, giving n | p - 1
        CHECK((p - 1) % n == 0);
      }
    }
  }
}

TEST_CASE("existence on the acceptance window") {
  for (Int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
    for (unsigned long n = 3; n <= 30; ++n) {
      bool expect = !(q == 2 && n == 6);
      CHECK_MESSAGE(chardeg::l(q, n).has_value() == expect,
                    "q=", q.get_str(), " n=", n);
    }
}

TEST_CASE("negative-twist variant l_neg") {
  // l_neg(q, n) is the smallest primitive prime divisor of q^(2n) - 1
  CHECK(chardeg::l_neg(2, 5) == Int(11));
  CHECK(chardeg::l_neg(3, 5) == Int(61));
  CHECK(chardeg::l_neg(2, 7) == Int(43));
  // undefined cases: even n, and (2,3) whose doubled index hits the exception
  CHECK_THROWS_AS(chardeg::l_neg(2, 4), chardeg::Error);
  CHECK_THROWS_AS(chardeg::l_neg(5, 2), chardeg::Error);
  CHECK_THROWS_AS(chardeg::l_neg(2, 3), chardeg::Error);
  // n = 1 can legitimately come up empty: 3^2 - 1 = 8 has no primitive prime
  CHECK(chardeg::l_neg(3, 1) == std::nullopt);
  CHECK(chardeg::l_neg(2, 1) == Int(3));
}

TEST_CASE("l is the smallest primitive prime divisor") {
  for (Int q : {2, 3, 7}) {
    for (unsigned long n = 2; n <= 18; ++n) {
      auto all = chardeg::primitive_prime_divisors(q, n);
      auto least = chardeg::l(q, n);
      if (all.empty()) {
        CHECK_FALSE(least.has_value());
      } else {
        CHECK(least == *std::min_element(all.begin(), all.end()));
      }
    }
  }
}
