// Exact integer plumbing: factorization (trial division + Brent's rho),
// primality, Moebius, cyclotomic values, p-parts.

#include "chardeg/arith.hpp"

#include <chrono>
#include <cstdlib>
#include <map>

namespace chardeg {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 100000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

bool miller_rabin(const Int& n, unsigned long a) {
  // n odd, n > 3, a < n
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x, base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

struct FactorCtx {
  Clock::time_point deadline;
  std::map<Int, unsigned long>* out;

  void check_time() const {
    if (Clock::now() > deadline)
      throw Error(Err::FactorizationTimeout, "factoring budget exhausted");
  }
};

// Brent's cycle variant of Pollard rho with batched gcds.  Deterministic:
// x0 = 2, polynomial x^2 + c with the caller-supplied c.
Int pollard_brent(const Int& n, unsigned long c, FactorCtx& ctx) {
  Int y(2), x, ys, q(1), g(1), diff;
  unsigned long r = 1;
  const unsigned long batch = 128;
  unsigned long steps = 0;
  auto f = [&](Int& v) {
    v = (v * v + c) % n;
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) f(y);
    for (unsigned long k = 0; k < r && g == 1; k += batch) {
      ys = y;
      unsigned long lim = std::min(batch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        f(y);
        diff = x - y;
        q = (q * diff) % n;
      }
      g = gcd(q, n);
      steps += lim;
      if ((steps & 1023) == 0 || steps > 1024) {
        ctx.check_time();
        steps = 0;
      }
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one batch with per-step gcds.
    g = 1;
    while (g == 1) {
      f(ys);
      diff = x - ys;
      g = gcd(Int(abs(diff)), n);
    }
  }
  return g;  // may equal n; caller retries with the next c
}

void split(const Int& n, unsigned long mult, FactorCtx& ctx) {
  if (n == 1) return;
  ctx.check_time();
  if (is_prime(n)) {
    (*ctx.out)[n] += mult;
    return;
  }
  // Peel perfect powers so rho only ever sees "honest" composites.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    unsigned long maxexp = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long e = maxexp; e >= 2; --e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
        split(root, mult * e, ctx);
        return;
      }
    }
  }
  for (unsigned long c = 1;; ++c) {
    Int d = pollard_brent(n, c, ctx);
    if (d > 1 && d < n) {
      split(d, mult, ctx);
      split(n / d, mult, ctx);
      return;
    }
  }
}

}  // namespace

const char* err_name(Err e) {
  switch (e) {
    case Err::FactorizationTimeout: return "factorization timeout";
    case Err::MagnitudeExceeded: return "magnitude exceeded";
    case Err::NotPrime: return "not prime";
    case Err::UndefinedCase: return "undefined case";
    case Err::ParseError: return "parse error";
    case Err::InvalidParameters: return "invalid parameters";
    case Err::NotSimple: return "not simple";
    case Err::NotLieType: return "not lie type";
    case Err::ExceptionListed: return "exception listed";
    case Err::NotExceptional: return "not exceptional";
    case Err::RowMissing: return "row missing";
    case Err::UnknownWitness: return "unknown witness";
    case Err::InvalidParams: return "invalid params";
    case Err::UnknownSporadic: return "unknown sporadic";
    case Err::CapExceeded: return "cap exceeded";
    case Err::SyntaxError: return "syntax error";
    case Err::DuplicateId: return "duplicate id";
    case Err::UnboundParameter: return "unbound parameter";
    case Err::EvaluationError: return "evaluation error";
  }
  return "unknown error";
}

long default_max_factor_bits() {
  static const long bits = [] {
    if (const char* env = std::getenv("CHARDEG_MAX_FACTOR_BITS")) {
      long v = std::atol(env);
      if (v > 0) return v;
    }
    return 512L;
  }();
  return bits;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  static const Int two64 = Int(1) << 64;
  if (n < two64) {
    // These twelve bases are a known deterministic set below 2^64.
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long a : bases) {
      if (n == a) return true;
      if (mpz_divisible_ui_p(n.get_mpz_t(), a)) return false;
      if (!miller_rabin(n, a)) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
  if (n < 1) throw Error(Err::InvalidParameters, "factorize requires n >= 1");
  long cap = budget.max_bits > 0 ? budget.max_bits : default_max_factor_bits();
  if ((long)mpz_sizeinbase(n.get_mpz_t(), 2) > cap)
    throw Error(Err::MagnitudeExceeded, "input above " + std::to_string(cap) + "-bit cap");

  std::map<Int, unsigned long> fac;
  FactorCtx ctx{Clock::now() + std::chrono::milliseconds(budget.budget_ms), &fac};

  Int m = n;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      fac[Int(p)] += e;
    }
  }
  if (m > 1) split(m, 1, ctx);

  Factorization out;
  out.value = n;
  Int check(1);
  for (auto& [p, e] : fac) {
    out.entries.emplace_back(p, e);
    check *= pow_int(p, e);
  }
  if (check != n) throw Error(Err::EvaluationError, "internal factorization mismatch");
  return out;
}

int moebius(unsigned long n) {
  if (n == 0) throw Error(Err::InvalidParameters, "moebius requires n >= 1");
  int sign = 1;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

Int cyclotomic_value(unsigned long n, const Int& q) {
  if (n == 0) throw Error(Err::InvalidParameters, "cyclotomic index must be >= 1");
  if (q < 2) throw Error(Err::InvalidParameters, "cyclotomic argument must be >= 2");
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divs.push_back(d);
    if (d != n / d) divs.push_back(n / d);
  }
  Int num(1), den(1);
  for (unsigned long d : divs) {
    int mu = moebius(n / d);
    if (mu == 0) continue;
    Int term = pow_int(q, d) - 1;
    (mu == 1 ? num : den) *= term;
  }
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Int p_part(const Int& n, const Int& p) {
  if (!is_prime(p)) throw Error(Err::NotPrime, "p_part requires a prime p");
  if (n < 1) throw Error(Err::InvalidParameters, "p_part requires n >= 1");
  Int cofactor;
  unsigned long e = mpz_remove(cofactor.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return pow_int(p, e);
}

std::vector<Int> prime_set(const Int& n, const FactorBudget& budget) {
  std::vector<Int> out;
  for (auto& [p, e] : factorize(n, budget).entries) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Int factorial_int(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace chardeg
