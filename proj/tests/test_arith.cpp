#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "chardeg/arith.hpp"

using chardeg::Int;

namespace {

// Independent Moebius oracle: linear sieve over smallest prime factors.
std::vector<int> moebius_sieve(unsigned long n) {
  std::vector<int> mu(n + 1, 0);
  std::vector<unsigned long> spf(n + 1, 0);
  std::vector<unsigned long> primes;
  mu[1] = 1;
  for (unsigned long i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      mu[i] = -1;
      primes.push_back(i);
    }
    for (unsigned long p : primes) {
      if (p > spf[i] || i * p > n) break;
      spf[i * p] = p;
      mu[i * p] = (i % p == 0) ? 0 : -mu[i];
    }
  }
  return mu;
}

}  // namespace

TEST_CASE("factorization of known values") {
  auto f = chardeg::factorize(728);
  REQUIRE(f.entries.size() == 3);
  CHECK(f.entries[0] == std::pair<Int, unsigned long>{2, 3});
  CHECK(f.entries[1] == std::pair<Int, unsigned long>{7, 1});
  CHECK(f.entries[2] == std::pair<Int, unsigned long>{13, 1});

  f = chardeg::factorize(29120);  // 2^6 * 5 * 7 * 13
  REQUIRE(f.entries.size() == 4);
  CHECK(f.entries[0].first == 2);
  CHECK(f.entries[0].second == 6);
  CHECK(f.entries[3].first == 13);

  CHECK(chardeg::factorize(1).entries.empty());
  CHECK(chardeg::factorize(Int("1000000007")).entries.size() == 1);

  // perfect power peeling
  Int big = chardeg::pow_int(Int("1000003"), 5);
  f = chardeg::factorize(big);
  REQUIRE(f.entries.size() == 1);
  CHECK(f.entries[0].first == 1000003);
  CHECK(f.entries[0].second == 5);
}

TEST_CASE("factorization round trip on random 64-bit values") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t x = rng() | 1;  // odd, nonzero
    Int n((unsigned long)x);
    auto f = chardeg::factorize(n);
    Int prod = 1;
    for (const auto& [p, e] : f.entries) {
      CHECK(chardeg::is_prime(p));
      prod *= chardeg::pow_int(p, e);
    }
    CHECK(prod == n);
    CHECK(f.value == n);
  }
}

TEST_CASE("factorize rejects bad input") {
  CHECK_THROWS_AS(chardeg::factorize(0), chardeg::Error);
  CHECK_THROWS_AS(chardeg::factorize(-5), chardeg::Error);
  chardeg::FactorBudget tight;
  tight.max_bits = 16;
  CHECK_THROWS_WITH_AS(chardeg::factorize(Int(1) << 20, tight),
                       doctest::Contains("magnitude"), chardeg::Error);
}

TEST_CASE("factorization times out on a hard semiprime") {
  // two ~180-bit primes; rho cannot split the product inside 1ms
  Int a = 0, b = 0;
  mpz_nextprime(a.get_mpz_t(), Int((Int(1) << 180) + 12345).get_mpz_t());
  mpz_nextprime(b.get_mpz_t(), Int((Int(1) << 181) + 67890).get_mpz_t());
  chardeg::FactorBudget tight;
  tight.budget_ms = 1;
  CHECK_THROWS_WITH_AS(chardeg::factorize(a * b, tight),
                       doctest::Contains("timeout"), chardeg::Error);
}

TEST_CASE("primality spot checks") {
  CHECK(chardeg::is_prime(2));
  CHECK(chardeg::is_prime(3));
  CHECK_FALSE(chardeg::is_prime(1));
  CHECK_FALSE(chardeg::is_prime(0));
  CHECK_FALSE(chardeg::is_prime(-7));
  // strong pseudoprimes to small bases
  CHECK_FALSE(chardeg::is_prime(Int("3215031751")));
  CHECK_FALSE(chardeg::is_prime(Int("3825123056546413051")));
  CHECK(chardeg::is_prime(Int("18446744073709551557")));  // largest prime < 2^64
  CHECK(chardeg::is_prime((Int(1) << 127) - 1));           // Mersenne
  CHECK_FALSE(chardeg::is_prime((Int(1) << 128) + 1));
}

TEST_CASE("moebius against a sieve oracle") {
  auto mu = moebius_sieve(10000);
  for (unsigned long n = 1; n <= 10000; ++n) CHECK(chardeg::moebius(n) == mu[n]);
}

TEST_CASE("cyclotomic values at small arguments") {
  CHECK(chardeg::cyclotomic_value(1, 5) == 4);
  CHECK(chardeg::cyclotomic_value(2, 5) == 6);
  CHECK(chardeg::cyclotomic_value(6, 2) == 3);
  CHECK(chardeg::cyclotomic_value(12, 2) == 13);
  CHECK(chardeg::cyclotomic_value(4, 3) == 10);
  CHECK(chardeg::cyclotomic_value(252, 2) % 127 != 0);  // sanity: odd, big
  CHECK(chardeg::cyclotomic_value(105, 2) > 0);         // first index with coefficient 2
}

TEST_CASE("cyclotomic product identity") {
  // prod_{d | n} Phi_d(q) = q^n - 1
  for (unsigned long n = 1; n <= 40; ++n)
    for (Int q = 2; q <= 9; ++q) {
      Int prod = 1;
      for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) prod *= chardeg::cyclotomic_value(d, q);
      CHECK(prod == chardeg::pow_int(q, n) - 1);
    }
}

TEST_CASE("p_part extracts exact prime powers") {
  CHECK(chardeg::p_part(29120, 2) == 64);
  CHECK(chardeg::p_part(29120, 5) == 5);
  CHECK(chardeg::p_part(29120, 3) == 1);
  CHECK(chardeg::p_part(1, 7) == 1);
  CHECK_THROWS_AS(chardeg::p_part(10, 4), chardeg::Error);   // 4 not prime
  CHECK_THROWS_AS(chardeg::p_part(0, 2), chardeg::Error);
}

TEST_CASE("prime_set") {
  auto ps = chardeg::prime_set(29120);
  REQUIRE(ps.size() == 4);
  CHECK(ps[0] == 2);
  CHECK(ps[1] == 5);
  CHECK(ps[2] == 7);
  CHECK(ps[3] == 13);
}

TEST_CASE("pow_int and factorial_int") {
  CHECK(chardeg::pow_int(2, 10) == 1024);
  CHECK(chardeg::pow_int(-3, 3) == -27);
  CHECK(chardeg::pow_int(7, 0) == 1);
  CHECK(chardeg::factorial_int(0) == 1);
  CHECK(chardeg::factorial_int(5) == 120);
  CHECK(chardeg::factorial_int(20) == Int("2432902008176640000"));
}
