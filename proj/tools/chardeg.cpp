// chardeg: command-line front end for the character-degree toolkit.

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "chardeg/alternating.hpp"
#include "chardeg/arith.hpp"
#include "chardeg/claims.hpp"
#include "chardeg/degrees.hpp"
#include "chardeg/groups.hpp"
#include "chardeg/zsigmondy.hpp"

namespace {

using chardeg::Int;

Int parse_int(const std::string& s, const char* what) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw chardeg::Error(chardeg::Err::InvalidParameters,
                         std::string(what) + " '" + s + "' is not an integer");
  }
}

unsigned long parse_ulong(const std::string& s, const char* what) {
  Int v = parse_int(s, what);
  if (v < 0 || !v.fits_ulong_p())
    throw chardeg::Error(chardeg::Err::InvalidParameters,
                         std::string(what) + " '" + s + "' is out of range");
  return v.get_ui();
}

std::string factored(const Int& n) {
  auto f = chardeg::factorize(n);
  std::string out;
  for (const auto& [p, e] : f.entries) {
    if (!out.empty()) out += "·";
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string prime_set_str(const std::vector<Int>& ps) {
  std::string out = "{";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].get_str();
  }
  return out + "}";
}

int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  unsigned n = std::thread::hardware_concurrency();
  return n ? (int)n : 1;
#endif
}

void dump_table(int k) {
  using std::printf;
  switch (k) {
    case 1:
      printf("table 1: orders of the simple exceptional groups\n");
      printf("  2B2(q)  q^2(q^2+1)(q-1)              q=2^(2m+1)\n");
      printf("  2G2(q)  q^3(q^3+1)(q-1)              q=3^(2m+1)\n");
      printf("  2F4(q)  q^12(q^6+1)(q^4-1)(q^3+1)(q-1)  q=2^(2m+1)\n");
      printf("  3D4(q)  q^12(q^8+q^4+1)(q^6-1)(q^2-1)\n");
      printf("  G2(q)   q^6(q^6-1)(q^2-1)\n");
      printf("  F4(q)   q^24(q^12-1)(q^8-1)(q^6-1)(q^2-1)\n");
      printf("  E6^e(q) q^36(q^12-1)(q^9-e)(q^8-1)(q^6-1)(q^5-e)(q^2-1)/d  d=(3,q-e)\n");
      printf("  E7(q)   q^63(q^18-1)(q^14-1)(q^12-1)(q^10-1)(q^8-1)(q^6-1)(q^2-1)/d  d=(2,q-1)\n");
      printf("  E8(q)   q^120(q^30-1)(q^24-1)(q^20-1)(q^18-1)(q^14-1)(q^12-1)(q^8-1)(q^2-1)\n");
      break;
    case 2:
      printf("table 2: Landazuri-Seitz-Zalesskii lower bounds e(G)\n");
      printf("  2B2(q)  (q/2)^(1/2)(q-1)   i.e. 2^m(q-1)      except q=8\n");
      printf("  2G2(q)  q(q-1)\n");
      printf("  2F4(q)  (q/2)^(1/2)q^4(q-1)  i.e. 2^(9m+4)(q-1)\n");
      printf("  3D4(q)  q^3(q^2-1)\n");
      printf("  G2(q)   q(q^2-1)                              except q=3,4\n");
      printf("  F4(q)   q^6(q^2-1)        q odd\n");
      printf("  F4(q)   q^7(q^3-1)(q-1)/2 q even              except q=2\n");
      printf("  E6^e(q) q^9(q^2-1)\n");
      printf("  E7(q)   q^15(q^2-1)\n");
      printf("  E8(q)   q^27(q^2-1)\n");
      break;
    case 3:
      printf("table 3: p-part of a designated non-Steinberg unipotent character\n");
      printf("  L_n^e(p^b)   p^(b(n-1)(n-2)/2)\n");
      printf("  S_2n(p^b)    p^(b(n-1)^2)  p odd;  2^(b(n-1)^2-1)  p=2\n");
      printf("  O_2n+1(p^b)  p^(b(n-1)^2)\n");
      printf("  O_2n^+(p^b)  p^(b(n^2-3n+3))\n");
      printf("  O_2n^-(p^b)  p^(b(n^2-3n+2))\n");
      printf("  3D4(p^b)     p^(7b)\n");
      printf("  2F4(2^(2m+1)) 2^(13m+6)\n");
      printf("  F4(p^b)      p^(10b)\n");
      printf("  E6^e(p^b)    p^(25b)\n");
      printf("  E7(p^b)      p^(46b)\n");
      printf("  E8(p^b)      p^(91b)\n");
      break;
    case 4: {
      printf("table 4: sporadic simple groups (t, d1, d2, d3, b)\n");
      for (const auto& r : chardeg::sporadic_records())
        printf("  %-7s t=%-4ld d1=%-10s d2=%-12s d3=%-12s b=%s\n", r.name.c_str(), r.t,
               r.d1.get_str().c_str(), r.d2.get_str().c_str(), r.d3.get_str().c_str(),
               r.b.get_str().c_str());
      break;
    }
    case 5:
      printf("table 5: upper bounds b~(G) for b(G), groups of Lie type\n");
      printf("  L_n^e(q)   q^(n(n-1)/2) * ((q+1)/(q-1))^(1/2) < q^(n(n-1)/2+1)\n");
      printf("  S_2n(q), O_2n+1(q)  q^(n^2)\n");
      printf("  O_2n^e(q)  q^(n(n-1))\n");
      printf("  2B2(q)  q^3\n");
      printf("  2G2(q)  q^4\n");
      printf("  2F4(q)  q^14\n");
      printf("  3D4(q)  q^17\n");
      printf("  G2(q)   q^8\n");
      printf("  F4(q)   q^28\n");
      printf("  E6^e(q) q^42\n");
      printf("  E7(q)   q^70\n");
      printf("  E8(q)   q^128\n");
      break;
    default:
      throw chardeg::Error(chardeg::Err::InvalidParameters,
                           "table index must be 1..5");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character-degree toolkit for finite simple groups"};
  app.require_subcommand(1);

  std::string group, ledger_path, qs, ns, ks;
  bool max_only = false, timings = false;
  int jobs = default_jobs();
  long budget_ms = 5000;
  std::string format = "text";
  int table_k = 0;

  auto* c_order = app.add_subcommand("order", "order of a simple group, factored");
  c_order->add_option("group", group, "group name, e.g. 2B2(8) or L2(7)")->required();

  auto* c_pi = app.add_subcommand("pi", "set of primes dividing the group order");
  c_pi->add_option("group", group)->required();

  auto* c_cyc = app.add_subcommand("cyclotomic", "evaluate the n-th cyclotomic polynomial");
  c_cyc->add_option("n", ns)->required();
  c_cyc->add_option("q", qs)->required();

  auto* c_zs = app.add_subcommand("zsigmondy", "smallest primitive prime divisor of q^n-1");
  c_zs->add_option("q", qs)->required();
  c_zs->add_option("n", ns)->required();

  auto* c_alt = app.add_subcommand("altdeg", "character degrees of the alternating group A_n");
  c_alt->add_option("n", ns)->required();
  c_alt->add_flag("--max", max_only, "print only the largest degree b(A_n)");

  auto* c_verify = app.add_subcommand("verify", "evaluate a claims ledger");
  c_verify->add_option("ledger", ledger_path, "path to a .claims file")->required();
  c_verify->add_option("--jobs", jobs, "worker threads");
  c_verify->add_option("--budget-ms", budget_ms, "per-claim time budget");
  c_verify->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
  c_verify->add_flag("--timings", timings, "include per-claim elapsed time");

  auto* c_tables = app.add_subcommand("tables", "bundled reference tables");
  auto* c_dump = c_tables->add_subcommand("dump", "print table k");
  c_dump->add_option("k", table_k, "table index 1..5")->required();
  c_tables->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_order) {
      Int o = chardeg::order_value(chardeg::parse_group(group));
      std::cout << o.get_str() << " = " << factored(o) << "\n";
    } else if (*c_pi) {
      std::cout << prime_set_str(chardeg::pi(chardeg::parse_group(group))) << "\n";
    } else if (*c_cyc) {
      unsigned long n = parse_ulong(ns, "index");
      Int q = parse_int(qs, "argument");
      if (n < 1)
        throw chardeg::Error(chardeg::Err::InvalidParameters, "index must be >= 1");
      std::cout << chardeg::cyclotomic_value(n, q).get_str() << "\n";
    } else if (*c_zs) {
      Int q = parse_int(qs, "base");
      unsigned long n = parse_ulong(ns, "exponent");
      if (q < 2 || n < 1)
        throw chardeg::Error(chardeg::Err::InvalidParameters,
                             "zsigmondy needs q >= 2 and n >= 1");
      auto r = chardeg::l(q, n);
      if (r)
        std::cout << r->get_str() << "\n";
      else
        std::cout << "none (Zsigmondy exception)\n";
    } else if (*c_alt) {
      unsigned long n = parse_ulong(ns, "n");
      if (max_only) {
        std::cout << chardeg::max_degree_alternating(n).get_str() << "\n";
      } else {
        std::string line;
        for (const Int& d : chardeg::alternating_degrees(n)) {
          if (!line.empty()) line += ", ";
          line += d.get_str();
        }
        std::cout << "{" << line << "}\n";
      }
    } else if (*c_verify) {
      auto claims = chardeg::claims::parse_ledger_file(ledger_path);
      auto report = chardeg::claims::run_ledger(claims, jobs, budget_ms);
      std::cout << chardeg::claims::format_report(report, format == "machine", timings);
      return chardeg::claims::report_exit_code(report);
    } else if (*c_dump) {
      dump_table(table_k);
    }
  } catch (const chardeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
