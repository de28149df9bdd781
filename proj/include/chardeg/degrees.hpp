#pragma once
#include <string>
#include <tuple>
#include <vector>

#include "chardeg/groups.hpp"

namespace chardeg {

// One row of the bundled sporadic degree table: count of distinct nontrivial
// degrees, the three smallest, and the largest.
struct SporadicRecord {
  std::string name;
  long t;
  Int d1, d2, d3, b;
};

// Landazuri-Seitz-Zalesskii lower bound e(G) on the smallest nontrivial
// cross-characteristic degree.  The four classical exceptions 2B2(8), G2(3),
// G2(4), F4(2) are refused; the F4 row switches on the parity of q.
Int lsz_bound(const GroupId& g);

// Upper bound on the largest degree b(G) for the exceptional families.
Int seitz_bound(const GroupId& g);

// p-part of a designated non-Steinberg unipotent character, per family row.
Int unipotent_p_part(const GroupId& g);

// Specific degree formulas quoted case by case; each id names one witness.
// r is the field parameter (the full field size for sz_deg / sz_b2a); n and
// eps only apply to the classical-series witnesses.  sz_b2a returns just the
// 2-part of its character, the only piece of it the comparisons use.
Int witness_degree(const std::string& id, const Int& r, long n = 0, int eps = 0);

const std::vector<std::string>& witness_ids();

const SporadicRecord& sporadic_record(const std::string& name);
const std::vector<SporadicRecord>& sporadic_records();

// Named constants quoted in the propositions: degree floors from published
// tables and per-family degree-count bounds.  Each carries its anchor text.
Int bound_constant(const std::string& key);
const std::vector<std::tuple<std::string, Int, std::string>>& bound_constants();

}  // namespace chardeg
