#pragma once
#include <memory>
#include <string>
#include <vector>

#include "chardeg/arith.hpp"

namespace chardeg::claims {

// ---- AST -------------------------------------------------------------------

enum class Ek { Lit, Param, Add, Sub, Mul, Div, Pow, Phi, Ppart, Factorial, Order, L };

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

// Group template: a family token (or sporadic name) plus argument
// expressions, evaluated to concrete integers at each domain point.
struct GroupTpl {
  std::string fam;
  std::vector<ExprP> args;
};

struct Expr {
  Ek k{};
  Int lit;
  std::string param;
  ExprP a, b;
  GroupTpl g;
};

enum class Dom { Range, PrimePowers, Primes, PowersOf };

struct Quant {
  std::string param;
  Dom dom{};
  long lo = 0, hi = 0;
  long base = 0;  // PowersOf only
};

enum class Pk { Rel, Divides, Subset, Member };
enum class RelOp { Eq, Ne, Lt, Le, Gt, Ge };

struct Pred {
  Pk k{};
  bool neg = false;  // the !divides / !subset / !member forms
  RelOp rel{};
  ExprP a, b;        // Rel, Divides; Member keeps its l(...) node in a
  GroupTpl g1, g2;   // Subset both; Member g1
};

struct Claim {
  std::string id;
  std::string anchor;
  bool axiom = false;
  std::vector<Quant> quants;
  Pred pred;
  int line = 0;
};

// ---- results ----------------------------------------------------------------

enum class Status { Verified, Refuted, Skipped, Assumed };
const char* status_name(Status s);

struct ClaimResult {
  std::string id;
  Status status{};
  std::string anchor;
  std::string witness;  // refuted: first counterexample; skipped: reason
  long points = 0;      // domain points checked
  long elapsed_ms = 0;
};

struct Report {
  std::vector<ClaimResult> results;  // ordered by claim id
};

// ---- operations --------------------------------------------------------------

std::vector<Claim> parse_ledger(const std::string& text);
std::vector<Claim> parse_ledger_file(const std::string& path);

// Exhaustive check over the quantifier domains, lexicographic order.
// Refutation reports the first failing point; any evaluation error or an
// exhausted budget yields Skipped (never a silent pass).  Axioms are
// reported Assumed without evaluation.
ClaimResult evaluate_claim(const Claim& c, long budget_ms = 5000);

// jobs > 1 runs claims on an OpenMP pool; output is independent of jobs.
Report run_ledger(const std::vector<Claim>& cs, int jobs, long budget_ms = 5000);
Report run_ledger_serial(const std::vector<Claim>& cs, long budget_ms = 5000);

// Fixed field order: id, status, anchor, witness, elapsed-ms (timings only
// when requested, so default output is byte-stable across runs and jobs).
std::string format_report(const Report& r, bool machine, bool timings);

// 0 all non-axiom claims verified; 1 any refuted; 3 any skipped, none refuted.
int report_exit_code(const Report& r);

// Domain enumeration, exposed for the property tests.
std::vector<Int> domain_values(const Quant& q);

}  // namespace chardeg::claims
