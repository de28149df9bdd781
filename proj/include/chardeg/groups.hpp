#pragma once
#include <string>
#include <utility>
#include <vector>

#include "chardeg/arith.hpp"

namespace chardeg {

enum class Fam {
  Alternating,
  Linear,     // L_n(q) (eps = +1) and U_n(q) (eps = -1)
  Symplectic, // S_{2n}(q)
  OrthOdd,    // O_{2n+1}(q), q odd
  OrthEven,   // O^eps_{2n}(q)
  Suzuki,     // 2B2(q), q = 2^{2m+1}
  Ree,        // 2G2(q), q = 3^{2m+1}
  TwistedF4,  // 2F4(q), q = 2^{2m+1}
  TriD4,
  G2,
  F4,
  E6,         // eps = +1 plain, -1 twisted (2E6)
  E7,
  E8,
  Sporadic,
};

struct GroupId {
  Fam fam{};
  long n = 0;        // A_n; L/U dimension n; S_{2n} n; O_{2n+1} n; O_{2n} n; twisted m
  Int q = 0;         // field size; twisted families carry the full 2^{2m+1} / 3^{2m+1}
  int eps = 0;       // +1 / -1 where the family is split
  std::string name;  // sporadic canonical name
  Int p = 0;         // defining characteristic (Lie type only)
  unsigned long a = 0;  // q = p^a
};

// Validates parameters and rejects the non-simple small cases
// (S4(2), L2(2), L2(3), U2(2), U2(3), U3(2), G2(2), 2G2(3), 2B2(2), 2F4(2)).
// For the twisted families pass the full field size in q; m is derived.
GroupId make_group(Fam fam, long n, const Int& q, int eps = 0,
                   const std::string& name = "");

// Accepts the canonical grammar L(3,4) / S(6,16) / O+(12,4) / A(5) / 2B2(8)
// plus the compact classical shorthand L2(8), U4(3), S4(2), A5 and the bare
// sporadic names (including "2F4(2)'").
GroupId parse_group(const std::string& text);

std::string group_name(const GroupId& g);

// Exact order, no factoring.
Int order_value(const GroupId& g);

// Fully factored order.  Lie-type orders are assembled piecewise (p-part,
// one factorization per distinct cyclotomic factor, center divisor), so the
// magnitude cap applies per piece, never to the full order.
Factorization order(const GroupId& g, const FactorBudget& budget = {});

std::vector<Int> pi(const GroupId& g, const FactorBudget& budget = {});

// Defining characteristic p and the exponent k with |G|_p = p^k.
std::pair<Int, unsigned long> p_part_order(const GroupId& g);

bool is_lie_type(const GroupId& g);
bool is_exceptional(const GroupId& g);

const std::vector<std::string>& sporadic_names();
const Factorization& sporadic_order(const std::string& name);

}  // namespace chardeg
