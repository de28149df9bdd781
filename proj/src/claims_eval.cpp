// Claim evaluation: exact arithmetic with a magnitude guard, exhaustive
// domain enumeration, deterministic reports.

#include <chrono>
#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "chardeg/claims.hpp"
#include "chardeg/groups.hpp"
#include "chardeg/zsigmondy.hpp"

namespace chardeg::claims {

namespace {

using Clock = std::chrono::steady_clock;

// Powers whose result would exceed this many bits stay symbolic (base, exp).
// Ring operations on such values are refused; comparisons are resolved only
// when sound.  Keeps runaway towers like 2^(q^2) from allocating memory.
const long kGuardBits = 1L << 24;

[[noreturn]] void ev_fail(const std::string& msg) {
  throw Error(Err::EvaluationError, msg);
}

struct Value {
  bool huge = false;
  Int v;         // exact value
  Int base, exp; // huge only
};

Value exact(Int v) {
  Value out;
  out.v = std::move(v);
  return out;
}

struct Env {
  std::vector<std::pair<std::string, Int>> vals;

  const Int& get(const std::string& p) const {
    for (const auto& [name, v] : vals)
      if (name == p) return v;
    ev_fail("parameter '" + p + "' has no binding");
  }
};

long bits_of(const Int& v) { return (long)mpz_sizeinbase(v.get_mpz_t(), 2); }

Value ev(const ExprP& e, const Env& env);

GroupId instantiate(const GroupTpl& g, const Env& env) {
  std::vector<Int> args;
  for (const auto& a : g.args) {
    Value v = ev(a, env);
    if (v.huge) ev_fail("group parameter exceeds the magnitude guard");
    args.push_back(v.v);
  }
  auto want = [&](size_t k) {
    if (args.size() != k)
      ev_fail("group " + g.fam + " takes " + std::to_string(k) + " argument(s)");
  };
  auto dim = [&](const Int& v) {
    if (!v.fits_slong_p()) ev_fail("group dimension out of range");
    return (long)v.get_si();
  };
  const std::string& f = g.fam;
  if (f == "A") {
    want(1);
    return make_group(Fam::Alternating, dim(args[0]), 0);
  }
  if (f == "L" || f == "U") {
    want(2);
    return make_group(Fam::Linear, dim(args[0]), args[1], f == "L" ? 1 : -1);
  }
  if (f == "S") {
    want(2);
    long d = dim(args[0]);
    if (d % 2 != 0 || d < 4) ev_fail("S(d,q) needs even d >= 4");
    return make_group(Fam::Symplectic, d / 2, args[1]);
  }
  if (f == "O") {
    want(2);
    long d = dim(args[0]);
    if (d % 2 == 0 || d < 7) ev_fail("O(d,q) needs odd d >= 7");
    return make_group(Fam::OrthOdd, (d - 1) / 2, args[1]);
  }
  if (f == "O+" || f == "O-") {
    want(2);
    long d = dim(args[0]);
    if (d % 2 != 0 || d < 8) ev_fail("O+/-(d,q) needs even d >= 8");
    return make_group(Fam::OrthEven, d / 2, args[1], f == "O+" ? 1 : -1);
  }
  if (f == "2B2") { want(1); return make_group(Fam::Suzuki, 0, args[0]); }
  if (f == "2G2") { want(1); return make_group(Fam::Ree, 0, args[0]); }
  if (f == "2F4") { want(1); return make_group(Fam::TwistedF4, 0, args[0]); }
  if (f == "3D4") { want(1); return make_group(Fam::TriD4, 0, args[0]); }
  if (f == "G2") { want(1); return make_group(Fam::G2, 0, args[0]); }
  if (f == "F4") { want(1); return make_group(Fam::F4, 0, args[0]); }
  if (f == "E6") { want(1); return make_group(Fam::E6, 0, args[0], 1); }
  if (f == "2E6") { want(1); return make_group(Fam::E6, 0, args[0], -1); }
  if (f == "E7") { want(1); return make_group(Fam::E7, 0, args[0]); }
  if (f == "E8") { want(1); return make_group(Fam::E8, 0, args[0]); }
  want(0);
  return make_group(Fam::Sporadic, 0, 0, 0, f);
}

unsigned long small_ulong(const Value& v, const std::string& what, long cap) {
  if (v.huge) ev_fail(what + " exceeds the magnitude guard");
  if (v.v < 0) ev_fail(what + " must be nonnegative");
  if (!v.v.fits_ulong_p() || (cap > 0 && v.v > cap))
    ev_fail(what + " is out of range");
  return v.v.get_ui();
}

Value ev(const ExprP& e, const Env& env) {
  switch (e->k) {
    case Ek::Lit: return exact(e->lit);
    case Ek::Param: return exact(env.get(e->param));
    case Ek::Add:
    case Ek::Sub:
    case Ek::Mul: {
      Value a = ev(e->a, env), b = ev(e->b, env);
      if (a.huge || b.huge) ev_fail("guarded power used in a ring operation");
      if (e->k == Ek::Add) return exact(a.v + b.v);
      if (e->k == Ek::Sub) return exact(a.v - b.v);
      return exact(a.v * b.v);
    }
    case Ek::Div: {
      Value a = ev(e->a, env), b = ev(e->b, env);
      if (a.huge || b.huge) ev_fail("guarded power used in a ring operation");
      if (b.v == 0) ev_fail("division by zero");
      if (!mpz_divisible_p(a.v.get_mpz_t(), b.v.get_mpz_t()))
        ev_fail("inexact division " + a.v.get_str() + " / " + b.v.get_str());
      Int out;
      mpz_divexact(out.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
      return exact(out);
    }
    case Ek::Pow: {
      Value a = ev(e->a, env);
      Value b = ev(e->b, env);
      if (b.huge) ev_fail("guarded power used as an exponent");
      if (b.v < 0) ev_fail("negative exponent");
      const Int& k = b.v;
      if (a.huge) {
        Value out;
        out.huge = true;
        out.base = a.base;
        out.exp = a.exp * k;
        return out;
      }
      if (a.v >= -1 && a.v <= 1) {   // 0, 1, -1: resolve by parity, any exponent
        if (a.v == 1) return exact(Int(1));
        if (a.v == 0) return exact(Int(k == 0 ? 1 : 0));
        return exact(Int(mpz_odd_p(k.get_mpz_t()) ? -1 : 1));
      }
      if (bits_of(a.v) * k > kGuardBits) {
        if (a.v < 0) ev_fail("guarded power of a negative base");
        Value out;
        out.huge = true;
        out.base = a.v;
        out.exp = k;
        return out;
      }
      Int r;  // under the guard, so k surely fits
      mpz_pow_ui(r.get_mpz_t(), a.v.get_mpz_t(), k.get_ui());
      return exact(r);
    }
    case Ek::Phi: {
      unsigned long k = small_ulong(ev(e->a, env), "cyclotomic index", 1000000);
      Value x = ev(e->b, env);
      if (x.huge) ev_fail("cyclotomic argument exceeds the magnitude guard");
      if (k < 1 || x.v < 2) ev_fail("phi(k, x) needs k >= 1 and x >= 2");
      if ((double)k * bits_of(x.v) > (double)kGuardBits)
        ev_fail("cyclotomic value exceeds the magnitude guard");
      return exact(cyclotomic_value(k, x.v));
    }
    case Ek::Ppart: {
      Value n = ev(e->a, env), p = ev(e->b, env);
      if (n.huge || p.huge) ev_fail("guarded power in ppart");
      return exact(p_part(n.v, p.v));  // validates primality and n >= 1
    }
    case Ek::Factorial: {
      unsigned long n = small_ulong(ev(e->a, env), "factorial argument", 20000);
      return exact(factorial_int(n));
    }
    case Ek::Order:
      return exact(order_value(instantiate(e->g, env)));
    case Ek::L: {
      Value q = ev(e->a, env);
      if (q.huge) ev_fail("Zsigmondy base exceeds the magnitude guard");
      if (q.v < 2) ev_fail("l(q, n) needs q >= 2");
      unsigned long n = small_ulong(ev(e->b, env), "Zsigmondy index", 1000000);
      auto r = l(q.v, n);
      if (!r)
        ev_fail("no primitive prime divisor for (" + q.v.get_str() + ", " +
                std::to_string(n) + ")");
      return exact(*r);
    }
  }
  ev_fail("unhandled expression node");
}

int compare(const Value& a, const Value& b) {
  if (!a.huge && !b.huge) return cmp(a.v, b.v);
  if (a.huge && b.huge) {
    if (a.base == b.base) return cmp(a.exp, b.exp);
    ev_fail("guarded powers with different bases are not comparable");
  }
  const Value& h = a.huge ? a : b;
  const Value& x = a.huge ? b : a;
  // Sound direction only: x < 2^bits(x) <= base^exp whenever
  // bits(x) <= exp * (bits(base) - 1).
  bool huge_greater = false;
  if (x.v < 0) {
    huge_greater = true;
  } else {
    Int lower = h.exp * (bits_of(h.base) - 1);
    if (lower >= bits_of(x.v))
      huge_greater = true;
    else
      ev_fail("guarded power too close to an exact value to compare");
  }
  int c = huge_greater ? 1 : -1;
  return a.huge ? c : -c;
}

bool eval_pred(const Pred& p, const Env& env) {
  switch (p.k) {
    case Pk::Rel: {
      int c = compare(ev(p.a, env), ev(p.b, env));
      switch (p.rel) {
        case RelOp::Eq: return c == 0;
        case RelOp::Ne: return c != 0;
        case RelOp::Lt: return c < 0;
        case RelOp::Le: return c <= 0;
        case RelOp::Gt: return c > 0;
        case RelOp::Ge: return c >= 0;
      }
      ev_fail("unhandled relation");
    }
    case Pk::Divides: {
      Value a = ev(p.a, env), b = ev(p.b, env);
      if (a.huge || b.huge) ev_fail("guarded power in divides");
      if (a.v == 0) ev_fail("divides(0, x) is undefined");
      bool r = mpz_divisible_p(b.v.get_mpz_t(), a.v.get_mpz_t()) != 0;
      return p.neg ? !r : r;
    }
    case Pk::Subset: {
      GroupId g1 = instantiate(p.g1, env);
      GroupId g2 = instantiate(p.g2, env);
      Int o2 = order_value(g2);
      bool r = true;
      for (const Int& prime : pi(g1))
        if (!mpz_divisible_p(o2.get_mpz_t(), prime.get_mpz_t())) {
          r = false;
          break;
        }
      return p.neg ? !r : r;
    }
    case Pk::Member: {
      Value lv = ev(p.a, env);
      GroupId g = instantiate(p.g1, env);
      Int o = order_value(g);
      bool r = mpz_divisible_p(o.get_mpz_t(), lv.v.get_mpz_t()) != 0;
      return p.neg ? !r : r;
    }
  }
  ev_fail("unhandled predicate");
}

bool is_prime_power_long(long k) {
  if (k < 2) return false;
  long m = k;
  long sp = 0;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      sp = d;
      break;
    }
  if (sp == 0) return true;  // prime
  while (m % sp == 0) m /= sp;
  return m == 1;
}

bool is_prime_long(long k) {
  if (k < 2) return false;
  for (long d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

}  // namespace

std::vector<Int> domain_values(const Quant& q) {
  std::vector<Int> out;
  switch (q.dom) {
    case Dom::Range:
      for (long v = q.lo; v <= q.hi; ++v) out.emplace_back(v);
      break;
    case Dom::Primes:
      for (long v = q.lo; v <= q.hi; ++v)
        if (is_prime_long(v)) out.emplace_back(v);
      break;
    case Dom::PrimePowers:
      for (long v = q.lo; v <= q.hi; ++v)
        if (is_prime_power_long(v)) out.emplace_back(v);
      break;
    case Dom::PowersOf:
      for (Int v(q.base); v <= q.hi; v *= q.base)
        if (v >= q.lo) out.push_back(v);
      break;
  }
  return out;
}

ClaimResult evaluate_claim(const Claim& c, long budget_ms) {
  auto start = Clock::now();
  ClaimResult r;
  r.id = c.id;
  r.anchor = c.anchor;
  auto finish = [&](Status s) {
    r.status = s;
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
  };

  if (c.axiom) return finish(Status::Assumed);

  // Size pre-pass: a runaway range must not allocate before the budget can
  // bite.  Range widths bound every domain kind from above.
  const long kMaxPoints = 10000000;
  Int bound = 1;
  for (const auto& q : c.quants)
    bound *= (q.hi >= q.lo) ? Int(q.hi) - q.lo + 1 : Int(0);
  if (bound > kMaxPoints) {
    r.witness = "domain bound " + bound.get_str() + " points exceeds the evaluation cap " +
                std::to_string(kMaxPoints);
    return finish(Status::Skipped);
  }

  std::vector<std::vector<Int>> doms;
  for (const auto& q : c.quants) doms.push_back(domain_values(q));

  Env env;
  for (const auto& q : c.quants) env.vals.emplace_back(q.param, Int(0));

  auto deadline = start + std::chrono::milliseconds(budget_ms);
  auto binding_str = [&] {
    std::string s;
    for (size_t i = 0; i < env.vals.size(); ++i) {
      if (i) s += ",";
      s += env.vals[i].first + "=" + env.vals[i].second.get_str();
    }
    return s;
  };

  // 0 = holds everywhere (so far), 1 = refuted, 2 = skipped
  std::function<int(size_t)> walk = [&](size_t depth) -> int {
    if (depth == doms.size()) {
      if (Clock::now() > deadline) {
        r.witness = "budget exhausted after " + std::to_string(r.points) + " points";
        return 2;
      }
      ++r.points;
      try {
        if (!eval_pred(c.pred, env)) {
          r.witness = binding_str();
          return 1;
        }
      } catch (const Error& e) {
        r.witness = env.vals.empty()
                        ? std::string(e.what())
                        : "at " + binding_str() + ": " + e.what();
        return 2;
      }
      return 0;
    }
    for (const Int& v : doms[depth]) {
      env.vals[depth].second = v;
      int res = walk(depth + 1);
      if (res != 0) return res;
    }
    return 0;
  };

  int res = walk(0);
  if (res == 1) return finish(Status::Refuted);
  if (res == 2) return finish(Status::Skipped);
  return finish(Status::Verified);
}

namespace {

Report finalize(std::vector<ClaimResult> results) {
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
  return Report{std::move(results)};
}

}  // namespace

Report run_ledger_serial(const std::vector<Claim>& cs, long budget_ms) {
  std::vector<ClaimResult> results(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) results[i] = evaluate_claim(cs[i], budget_ms);
  return finalize(std::move(results));
}

Report run_ledger(const std::vector<Claim>& cs, int jobs, long budget_ms) {
  if (jobs < 1) jobs = 1;
  std::vector<ClaimResult> results(cs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < (long)cs.size(); ++i) {
    try {
      results[(size_t)i] = evaluate_claim(cs[(size_t)i], budget_ms);
    } catch (const std::exception& e) {
      // evaluate_claim handles library errors itself; this is a belt for
      // anything unexpected so no exception crosses the parallel region.
      ClaimResult cr;
      cr.id = cs[(size_t)i].id;
      cr.anchor = cs[(size_t)i].anchor;
      cr.status = Status::Skipped;
      cr.witness = std::string("internal error: ") + e.what();
      results[(size_t)i] = std::move(cr);
    }
  }
  return finalize(std::move(results));
}

std::string format_report(const Report& r, bool machine, bool timings) {
  std::ostringstream out;
  if (machine) {
    for (const auto& cr : r.results) {
      nlohmann::ordered_json j;
      j["id"] = cr.id;
      j["status"] = status_name(cr.status);
      j["anchor"] = cr.anchor;
      j["witness"] = cr.status == Status::Verified
                         ? "bounded points=" + std::to_string(cr.points)
                         : cr.witness;
      if (timings) j["elapsed_ms"] = cr.elapsed_ms;
      out << j.dump() << "\n";
    }
    return out.str();
  }
  long nv = 0, nr = 0, ns = 0, na = 0;
  for (const auto& cr : r.results) {
    std::string field;
    switch (cr.status) {
      case Status::Verified:
        ++nv;
        field = "[bounded points=" + std::to_string(cr.points) + "]";
        break;
      case Status::Refuted:
        ++nr;
        field = "[witness " + cr.witness + "]";
        break;
      case Status::Skipped:
        ++ns;
        field = "[reason: " + cr.witness + "]";
        break;
      case Status::Assumed:
        ++na;
        field = "[axiom]";
        break;
    }
    out << cr.id;
    for (size_t k = cr.id.size(); k < 24; ++k) out << ' ';
    out << ' ' << status_name(cr.status);
    for (size_t k = std::string(status_name(cr.status)).size(); k < 8; ++k) out << ' ';
    out << " \"" << cr.anchor << "\" " << field;
    if (timings) out << " " << cr.elapsed_ms << "ms";
    out << "\n";
  }
  out << "summary: claims=" << r.results.size() << " verified=" << nv << " refuted=" << nr
      << " skipped=" << ns << " assumed=" << na << "\n";
  return out.str();
}

int report_exit_code(const Report& r) {
  bool refuted = false, skipped = false;
  for (const auto& cr : r.results) {
    if (cr.status == Status::Refuted) refuted = true;
    if (cr.status == Status::Skipped) skipped = true;
  }
  if (refuted) return 1;
  if (skipped) return 3;
  return 0;
}

}  // namespace chardeg::claims
