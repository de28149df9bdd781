// Times the OpenMP ledger runner against the serial reference on the largest
// bundled ledger, and the hook-length kernel behind b(A_n).  Build target
// only; not part of the test suite.
//
// Usage: chardeg_bench [reps]   (default 10)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "chardeg/alternating.hpp"
#include "chardeg/claims.hpp"
#include "chardeg/data_path.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 10;
  if (reps < 1) reps = 1;

  auto claims =
      chardeg::claims::parse_ledger_file(chardeg::data_file("ledgers/prop5.claims"));
  std::printf("ledger: prop5.claims, %zu claims, %d reps each\n", claims.size(),
              reps);

  // The serial run is the reference; every parallel run must format to the
  // same bytes (results are sorted by id, so scheduling can't leak through).
  std::string ref;
  auto time_runner = [&](const std::string& label, auto&& run) {
    double best = 1e30, total = 0;
    std::string out;
    for (int i = 0; i < reps; ++i) {
      auto t0 = Clock::now();
      chardeg::claims::Report rep = run();
      double ms = ms_since(t0);
      best = std::min(best, ms);
      total += ms;
      out = chardeg::claims::format_report(rep, false, false);
    }
    if (ref.empty()) ref = out;
    std::printf("  %-10s best %8.2f ms   mean %8.2f ms   output %s\n",
                label.c_str(), best, total / reps,
                out == ref ? "ok" : "MISMATCH");
  };

  time_runner("serial", [&] { return chardeg::claims::run_ledger_serial(claims); });
  for (int jobs : {1, 2, 4, 8})
    time_runner("omp x" + std::to_string(jobs),
                [&] { return chardeg::claims::run_ledger(claims, jobs); });

  std::printf("\nb(A_n) by hook-length enumeration over all partitions\n");
  for (long n : {25L, 30L, 35L, 40L}) {
    auto t0 = Clock::now();
    chardeg::Int b = chardeg::max_degree_alternating(n);
    double ms = ms_since(t0);
    std::printf("  n=%-3ld p(n)=%-6s %8.2f ms   b has %zu digits\n", n,
                chardeg::partition_count(n).get_str().c_str(), ms,
                b.get_str().size());
  }
  return 0;
}
