// Group catalog: construction/validation, name parsing, exact orders.

#include "chardeg/groups.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "chardeg/data_path.hpp"

namespace chardeg {

namespace {

const std::vector<std::string> kSporadicNames = {
    "M11", "M12", "M22", "M23", "M24", "J1",  "J2",   "J3",   "J4",
    "HS",  "He",  "Ru",  "Suz", "ON",  "Co1", "Co2",  "Co3",  "McL",
    "Fi22", "Fi23", "Fi24'", "HN", "Ly", "Th", "B",   "M",    "2F4(2)'"};

// q must be a prime power; returns (p, a).
std::pair<Int, unsigned long> prime_power_split(const Int& q) {
  if (q < 2) throw Error(Err::InvalidParameters, "field size must be >= 2");
  auto f = factorize(q);
  if (f.entries.size() != 1)
    throw Error(Err::InvalidParameters, "field size " + q.get_str() + " is not a prime power");
  return {f.entries[0].first, f.entries[0].second};
}

[[noreturn]] void not_simple(const std::string& who, const std::string& hint = "") {
  throw Error(Err::NotSimple, who + " is not simple" + (hint.empty() ? "" : " (" + hint + ")"));
}

struct SporadicTable {
  std::map<std::string, Factorization> orders;
};

const SporadicTable& sporadic_table() {
  static SporadicTable table;
  static std::once_flag once;
  std::call_once(once, [] {
    std::ifstream in(data_file("sporadic_orders.txt"));
    if (!in)
      throw Error(Err::InvalidParameters,
                  "cannot open " + data_file("sporadic_orders.txt"));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ss(line);
      std::string name, tok;
      ss >> name;
      Factorization f;
      while (ss >> tok) {
        auto caret = tok.find('^');
        Int p(caret == std::string::npos ? tok : tok.substr(0, caret));
        unsigned long e = caret == std::string::npos ? 1 : std::stoul(tok.substr(caret + 1));
        f.entries.emplace_back(p, e);
        f.value *= pow_int(p, e);
      }
      table.orders.emplace(name, std::move(f));
    }
  });
  return table;
}

// ---- order assembly -------------------------------------------------------

// A Lie order is p^K times a product of cyclotomic values Phi_d(q).  We
// accumulate Phi exponents from the (q^i -+ 1) torus pieces.
struct PhiProduct {
  std::map<unsigned long, unsigned long> exp;

  void minus_piece(unsigned long i, unsigned long mult = 1) {
    for (unsigned long d = 1; d <= i; ++d)
      if (i % d == 0) exp[d] += mult;
  }
  void plus_piece(unsigned long i, unsigned long mult = 1) {
    // q^i + 1 = prod of Phi_d(q) over d | 2i, d not dividing i
    for (unsigned long d = 1; d <= 2 * i; ++d)
      if ((2 * i) % d == 0 && i % d != 0) exp[d] += mult;
  }
  void phi(unsigned long d, unsigned long mult = 1) { exp[d] += mult; }
};

// Torus part of the order in the field-size variable (twisted families use
// the full field size as the variable, matching how order_value builds it).
PhiProduct torus_structure(const GroupId& g) {
  PhiProduct t;
  long n = g.n;
  switch (g.fam) {
    case Fam::Linear:
      for (long i = 2; i <= n; ++i) {
        if (g.eps == 1 || i % 2 == 0)
          t.minus_piece(i);
        else
          t.plus_piece(i);
      }
      break;
    case Fam::Symplectic:
    case Fam::OrthOdd:
      for (long i = 1; i <= n; ++i) t.minus_piece(2 * i);
      break;
    case Fam::OrthEven:
      if (g.eps == 1)
        t.minus_piece(n);
      else
        t.plus_piece(n);
      for (long i = 1; i < n; ++i) t.minus_piece(2 * i);
      break;
    case Fam::Suzuki:
      t.plus_piece(2);
      t.minus_piece(1);
      break;
    case Fam::Ree:
      t.plus_piece(3);
      t.minus_piece(1);
      break;
    case Fam::TwistedF4:
      t.plus_piece(6);
      t.minus_piece(4);
      t.plus_piece(3);
      t.minus_piece(1);
      break;
    case Fam::TriD4:
      // q^8 + q^4 + 1 = Phi_3 Phi_6 Phi_12
      t.phi(3);
      t.phi(6);
      t.phi(12);
      t.minus_piece(6);
      t.minus_piece(2);
      break;
    case Fam::G2:
      t.minus_piece(6);
      t.minus_piece(2);
      break;
    case Fam::F4:
      for (unsigned long i : {12, 8, 6, 2}) t.minus_piece(i);
      break;
    case Fam::E6:
      for (unsigned long i : {12, 8, 6, 2}) t.minus_piece(i);
      if (g.eps == 1) {
        t.minus_piece(9);
        t.minus_piece(5);
      } else {
        t.plus_piece(9);
        t.plus_piece(5);
      }
      break;
    case Fam::E7:
      for (unsigned long i : {18, 14, 12, 10, 8, 6, 2}) t.minus_piece(i);
      break;
    case Fam::E8:
      for (unsigned long i : {30, 24, 20, 18, 14, 12, 8, 2}) t.minus_piece(i);
      break;
    default:
      throw Error(Err::NotLieType, "no torus structure for " + group_name(g));
  }
  return t;
}

// Center divisor of the simply connected form that the simple group drops.
Int center_divisor(const GroupId& g) {
  switch (g.fam) {
    case Fam::Linear:
      return gcd(Int(g.n), g.eps == 1 ? Int(g.q - 1) : Int(g.q + 1));
    case Fam::Symplectic:
    case Fam::OrthOdd:
      return gcd(Int(2), Int(g.q - 1));
    case Fam::OrthEven: {
      Int piece = pow_int(g.q, (unsigned long)g.n) - g.eps;
      return gcd(Int(4), piece);
    }
    case Fam::E6:
      return gcd(Int(3), g.eps == 1 ? Int(g.q - 1) : Int(g.q + 1));
    case Fam::E7:
      return gcd(Int(2), Int(g.q - 1));
    default:
      return 1;
  }
}

void legendre_factorial(long n, std::map<Int, unsigned long>& out) {
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    unsigned long e = 0;
    for (long pk = p; pk <= n; pk *= p) {
      e += (unsigned long)(n / pk);
      if (pk > n / p) break;
    }
    out[Int(p)] += e;
  }
}

}  // namespace

const std::vector<std::string>& sporadic_names() { return kSporadicNames; }

const Factorization& sporadic_order(const std::string& name) {
  const auto& t = sporadic_table();
  auto it = t.orders.find(name);
  if (it == t.orders.end())
    throw Error(Err::UnknownSporadic, "no sporadic group named " + name);
  return it->second;
}

bool is_lie_type(const GroupId& g) {
  return g.fam != Fam::Alternating && g.fam != Fam::Sporadic;
}

bool is_exceptional(const GroupId& g) {
  switch (g.fam) {
    case Fam::Suzuki:
    case Fam::Ree:
    case Fam::TwistedF4:
    case Fam::TriD4:
    case Fam::G2:
    case Fam::F4:
    case Fam::E6:
    case Fam::E7:
    case Fam::E8:
      return true;
    default:
      return false;
  }
}

GroupId make_group(Fam fam, long n, const Int& q, int eps, const std::string& name) {
  GroupId g;
  g.fam = fam;

  if (fam == Fam::Alternating) {
    if (n < 1) throw Error(Err::InvalidParameters, "alternating degree must be >= 1");
    if (n < 5) not_simple("A(" + std::to_string(n) + ")");
    g.n = n;
    return g;
  }
  if (fam == Fam::Sporadic) {
    for (const auto& s : kSporadicNames)
      if (s == name) {
        g.name = name;
        return g;
      }
    throw Error(Err::UnknownSporadic, "no sporadic group named " + name);
  }

  auto [p, a] = prime_power_split(q);
  g.q = q;
  g.p = p;
  g.a = a;

  switch (fam) {
    case Fam::Linear:
      if (n < 2) throw Error(Err::InvalidParameters, "linear/unitary rank must be >= 2");
      if (eps != 1 && eps != -1) throw Error(Err::InvalidParameters, "eps must be +1 or -1");
      if (n == 2 && q <= 3)
        not_simple((eps == 1 ? "L(2," : "U(2,") + q.get_str() + ")");
      if (n == 3 && eps == -1 && q == 2) not_simple("U(3,2)", "solvable of order 72");
      g.n = n;
      g.eps = eps;
      break;
    case Fam::Symplectic:
      if (n < 2) throw Error(Err::InvalidParameters, "symplectic dimension must be >= 4");
      if (n == 2 && q == 2)
        not_simple("S(4,2)", "isomorphic to the symmetric group S_6");
      g.n = n;
      break;
    case Fam::OrthOdd:
      if (n < 3) throw Error(Err::InvalidParameters, "odd orthogonal dimension must be >= 7");
      if (mpz_even_p(q.get_mpz_t()))
        throw Error(Err::InvalidParameters, "O(2n+1, q) requires odd q");
      g.n = n;
      break;
    case Fam::OrthEven:
      if (n < 4) throw Error(Err::InvalidParameters, "even orthogonal dimension must be >= 8");
      if (eps != 1 && eps != -1) throw Error(Err::InvalidParameters, "eps must be +1 or -1");
      g.n = n;
      g.eps = eps;
      break;
    case Fam::Suzuki:
    case Fam::TwistedF4:
      if (p != 2 || a % 2 == 0)
        throw Error(Err::InvalidParameters,
                    "field size must be an odd power of 2, got " + q.get_str());
      if (q == 2) {
        if (fam == Fam::Suzuki) not_simple("2B2(2)", "solvable of order 20");
        not_simple("2F4(2)", "its derived subgroup is the Tits group 2F4(2)'");
      }
      g.n = (long)((a - 1) / 2);  // m
      break;
    case Fam::Ree:
      if (p != 3 || a % 2 == 0)
        throw Error(Err::InvalidParameters,
                    "field size must be an odd power of 3, got " + q.get_str());
      if (q == 3) not_simple("2G2(3)", "its derived subgroup is L(2,8)");
      g.n = (long)((a - 1) / 2);
      break;
    case Fam::G2:
      if (q == 2) not_simple("G2(2)", "its derived subgroup is U(3,3)");
      break;
    case Fam::E6:
      if (eps != 1 && eps != -1) throw Error(Err::InvalidParameters, "eps must be +1 or -1");
      g.eps = eps;
      break;
    case Fam::TriD4:
    case Fam::F4:
    case Fam::E7:
    case Fam::E8:
      break;
    default:
      throw Error(Err::InvalidParameters, "unhandled family");
  }
  return g;
}

std::string group_name(const GroupId& g) {
  switch (g.fam) {
    case Fam::Alternating: return "A(" + std::to_string(g.n) + ")";
    case Fam::Linear:
      return (g.eps == 1 ? "L(" : "U(") + std::to_string(g.n) + "," + g.q.get_str() + ")";
    case Fam::Symplectic:
      return "S(" + std::to_string(2 * g.n) + "," + g.q.get_str() + ")";
    case Fam::OrthOdd:
      return "O(" + std::to_string(2 * g.n + 1) + "," + g.q.get_str() + ")";
    case Fam::OrthEven:
      return (g.eps == 1 ? "O+(" : "O-(") + std::to_string(2 * g.n) + "," + g.q.get_str() + ")";
    case Fam::Suzuki: return "2B2(" + g.q.get_str() + ")";
    case Fam::Ree: return "2G2(" + g.q.get_str() + ")";
    case Fam::TwistedF4: return "2F4(" + g.q.get_str() + ")";
    case Fam::TriD4: return "3D4(" + g.q.get_str() + ")";
    case Fam::G2: return "G2(" + g.q.get_str() + ")";
    case Fam::F4: return "F4(" + g.q.get_str() + ")";
    case Fam::E6: return (g.eps == 1 ? "E6(" : "2E6(") + g.q.get_str() + ")";
    case Fam::E7: return "E7(" + g.q.get_str() + ")";
    case Fam::E8: return "E8(" + g.q.get_str() + ")";
    case Fam::Sporadic: return g.name;
  }
  return "?";
}

std::pair<Int, unsigned long> p_part_order(const GroupId& g) {
  if (!is_lie_type(g))
    throw Error(Err::NotLieType, group_name(g) + " has no defining characteristic");
  unsigned long a = g.a, n = (unsigned long)g.n;
  switch (g.fam) {
    case Fam::Linear: return {g.p, a * n * (n - 1) / 2};
    case Fam::Symplectic:
    case Fam::OrthOdd: return {g.p, a * n * n};
    case Fam::OrthEven: return {g.p, a * n * (n - 1)};
    case Fam::Suzuki: return {g.p, 2 * a};
    case Fam::Ree: return {g.p, 3 * a};
    case Fam::TwistedF4: return {g.p, 12 * a};
    case Fam::TriD4: return {g.p, 12 * a};
    case Fam::G2: return {g.p, 6 * a};
    case Fam::F4: return {g.p, 24 * a};
    case Fam::E6: return {g.p, 36 * a};
    case Fam::E7: return {g.p, 63 * a};
    case Fam::E8: return {g.p, 120 * a};
    default: break;
  }
  throw Error(Err::NotLieType, "unhandled family");
}

Int order_value(const GroupId& g) {
  if (g.fam == Fam::Alternating) return factorial_int((unsigned long)g.n) / 2;
  if (g.fam == Fam::Sporadic) return sporadic_order(g.name).value;

  auto [p, k] = p_part_order(g);
  Int val = pow_int(p, k);
  const Int& q = g.q;
  auto qpow = [&](unsigned long e) { return pow_int(q, e); };

  switch (g.fam) {
    case Fam::Linear:
      for (long i = 2; i <= g.n; ++i) {
        int sgn = (g.eps == 1 || i % 2 == 0) ? -1 : +1;
        val *= qpow((unsigned long)i) + sgn;
      }
      break;
    case Fam::Symplectic:
    case Fam::OrthOdd:
      for (long i = 1; i <= g.n; ++i) val *= qpow(2 * (unsigned long)i) - 1;
      break;
    case Fam::OrthEven:
      val *= qpow((unsigned long)g.n) - g.eps;
      for (long i = 1; i < g.n; ++i) val *= qpow(2 * (unsigned long)i) - 1;
      break;
    case Fam::Suzuki: val *= (qpow(2) + 1) * (q - 1); break;
    case Fam::Ree: val *= (qpow(3) + 1) * (q - 1); break;
    case Fam::TwistedF4:
      val *= (qpow(6) + 1) * (qpow(4) - 1) * (qpow(3) + 1) * (q - 1);
      break;
    case Fam::TriD4:
      val *= (qpow(8) + qpow(4) + 1) * (qpow(6) - 1) * (qpow(2) - 1);
      break;
    case Fam::G2: val *= (qpow(6) - 1) * (qpow(2) - 1); break;
    case Fam::F4:
      val *= (qpow(12) - 1) * (qpow(8) - 1) * (qpow(6) - 1) * (qpow(2) - 1);
      break;
    case Fam::E6:
      val *= (qpow(12) - 1) * (qpow(9) - g.eps) * (qpow(8) - 1) * (qpow(6) - 1) *
             (qpow(5) - g.eps) * (qpow(2) - 1);
      break;
    case Fam::E7:
      for (unsigned long i : {18, 14, 12, 10, 8, 6, 2}) val *= qpow(i) - 1;
      break;
    case Fam::E8:
      for (unsigned long i : {30, 24, 20, 18, 14, 12, 8, 2}) val *= qpow(i) - 1;
      break;
    default:
      throw Error(Err::NotLieType, "unhandled family");
  }
  Int d = center_divisor(g);
  if (d != 1) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), d.get_mpz_t());
  return val;
}

Factorization order(const GroupId& g, const FactorBudget& budget) {
  std::map<Int, unsigned long> fac;

  if (g.fam == Fam::Alternating) {
    legendre_factorial(g.n, fac);
    fac[Int(2)] -= 1;
    if (fac[Int(2)] == 0) fac.erase(Int(2));
  } else if (g.fam == Fam::Sporadic) {
    return sporadic_order(g.name);
  } else {
    auto [p, k] = p_part_order(g);
    fac[p] += k;
    PhiProduct t = torus_structure(g);
    for (auto& [d, mult] : t.exp) {
      Int phi = cyclotomic_value(d, g.q);
      if (phi == 1) continue;  // Phi_1(2) etc.
      for (auto& [prime, e] : factorize(phi, budget).entries) fac[prime] += e * mult;
    }
    Int c = center_divisor(g);
    if (c != 1) {
      for (auto& [prime, e] : factorize(c).entries) {
        fac[prime] -= e;
        if (fac[prime] == 0) fac.erase(prime);
      }
    }
  }

  Factorization out;
  Int check(1);
  for (auto& [p, e] : fac) {
    out.entries.emplace_back(p, e);
    check *= pow_int(p, e);
  }
  out.value = check;
  if (check != order_value(g))
    throw Error(Err::EvaluationError, "order assembly mismatch for " + group_name(g));
  return out;
}

std::vector<Int> pi(const GroupId& g, const FactorBudget& budget) {
  std::vector<Int> out;
  for (auto& [p, e] : order(g, budget).entries) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

// ---- name parsing ---------------------------------------------------------

namespace {

struct NameCursor {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Err::ParseError, msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int integer() {
    size_t start = pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected an integer");
    return Int(s.substr(start, pos - start));
  }
};

const std::vector<std::string> kFamTokens = {
    "2B2", "2G2", "2F4", "3D4", "2E6", "O+", "O-", "E6", "E7", "E8",
    "G2",  "F4",  "L",   "U",   "S",   "O",  "A"};

}  // namespace

GroupId parse_group(const std::string& text) {
  // Bare sporadic names take priority; this also covers "2F4(2)'".
  for (const auto& s : kSporadicNames)
    if (s == text) return make_group(Fam::Sporadic, 0, 0, 0, text);

  NameCursor cur{text};
  std::string fam;
  for (const auto& tok : kFamTokens) {
    if (text.compare(0, tok.size(), tok) == 0) {
      fam = tok;
      cur.pos = tok.size();
      break;
    }
  }
  if (fam.empty()) cur.fail("unknown group family");

  // Optional inline dimension for the classical shorthand (L2(8), S4(2), A5).
  long dim = 0;
  bool inline_dim = false;
  if (cur.pos < text.size() && isdigit((unsigned char)text[cur.pos])) {
    if (fam != "L" && fam != "U" && fam != "S" && fam != "O" && fam != "A")
      cur.fail("unexpected digit after family name");
    dim = (long)cur.integer().get_si();
    inline_dim = true;
  }

  std::vector<Int> args;
  if (cur.pos < text.size()) {
    if (!cur.eat('(')) cur.fail("expected '('");
    args.push_back(cur.integer());
    while (cur.eat(',')) args.push_back(cur.integer());
    if (!cur.eat(')')) cur.fail("expected ')'");
  }
  if (cur.pos != text.size()) cur.fail("trailing characters");

  auto expect_args = [&](size_t k) {
    if (args.size() != k)
      cur.fail("family " + fam + " expects " + std::to_string(k) + " argument(s)");
  };
  auto small = [&](const Int& v) {
    if (!v.fits_slong_p()) cur.fail("dimension out of range");
    return (long)v.get_si();
  };

  if (fam == "A") {
    if (inline_dim) {
      expect_args(0);
      return make_group(Fam::Alternating, dim, 0);
    }
    expect_args(1);
    return make_group(Fam::Alternating, small(args[0]), 0);
  }

  if (fam == "L" || fam == "U" || fam == "S" || fam == "O") {
    Int q;
    if (inline_dim) {
      expect_args(1);
      q = args[0];
    } else {
      expect_args(2);
      dim = small(args[0]);
      q = args[1];
    }
    if (fam == "L" || fam == "U") return make_group(Fam::Linear, dim, q, fam == "L" ? 1 : -1);
    if (fam == "S") {
      if (dim % 2 != 0 || dim < 4)
        cur.fail("symplectic dimension must be even and >= 4");
      return make_group(Fam::Symplectic, dim / 2, q);
    }
    if (dim % 2 == 0) cur.fail("O(d,q) needs odd d; use O+/O- for even dimension");
    if (dim < 7) cur.fail("odd orthogonal dimension must be >= 7");
    return make_group(Fam::OrthOdd, (dim - 1) / 2, q);
  }

  if (fam == "O+" || fam == "O-") {
    expect_args(2);
    long d = small(args[0]);
    if (d % 2 != 0 || d < 8) cur.fail("even orthogonal dimension must be even and >= 8");
    return make_group(Fam::OrthEven, d / 2, args[1], fam == "O+" ? 1 : -1);
  }

  expect_args(1);
  const Int& q = args[0];
  if (fam == "2B2") return make_group(Fam::Suzuki, 0, q);
  if (fam == "2G2") return make_group(Fam::Ree, 0, q);
  if (fam == "2F4") return make_group(Fam::TwistedF4, 0, q);
  if (fam == "3D4") return make_group(Fam::TriD4, 0, q);
  if (fam == "G2") return make_group(Fam::G2, 0, q);
  if (fam == "F4") return make_group(Fam::F4, 0, q);
  if (fam == "E6") return make_group(Fam::E6, 0, q, 1);
  if (fam == "2E6") return make_group(Fam::E6, 0, q, -1);
  if (fam == "E7") return make_group(Fam::E7, 0, q);
  if (fam == "E8") return make_group(Fam::E8, 0, q);
  cur.fail("unhandled family");
}

}  // namespace chardeg
