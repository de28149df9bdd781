// Degree bounds and witness degrees: LSZ floors, Seitz ceilings, unipotent
// p-parts, sporadic degree data, and the per-case witness formulas.

#include "chardeg/degrees.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "chardeg/data_path.hpp"

namespace chardeg {

namespace {

[[noreturn]] void not_exceptional(const GroupId& g) {
  throw Error(Err::NotExceptional, group_name(g) + " is not an exceptional group of Lie type");
}

struct DegreeData {
  std::vector<SporadicRecord> records;
  std::map<std::string, size_t> by_name;
  std::vector<std::tuple<std::string, Int, std::string>> constants;
  std::map<std::string, Int> const_by_key;
};

const DegreeData& degree_data() {
  static DegreeData data;
  static std::once_flag once;
  std::call_once(once, [] {
    {
      std::ifstream in(data_file("sporadic_degrees.txt"));
      if (!in)
        throw Error(Err::InvalidParameters, "cannot open " + data_file("sporadic_degrees.txt"));
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        SporadicRecord r;
        std::string d1, d2, d3, b;
        ss >> r.name >> r.t >> d1 >> d2 >> d3 >> b;
        r.d1 = Int(d1);
        r.d2 = Int(d2);
        r.d3 = Int(d3);
        r.b = Int(b);
        data.by_name[r.name] = data.records.size();
        data.records.push_back(std::move(r));
      }
    }
    {
      std::ifstream in(data_file("bound_constants.txt"));
      if (!in)
        throw Error(Err::InvalidParameters, "cannot open " + data_file("bound_constants.txt"));
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key, value, anchor;
        ss >> key >> value;
        std::getline(ss, anchor);
        size_t i = anchor.find_first_not_of(" \t");
        if (i != std::string::npos) anchor = anchor.substr(i);
        data.constants.emplace_back(key, Int(value), anchor);
        data.const_by_key.emplace(key, Int(value));
      }
    }
  });
  return data;
}

Int phi_at(unsigned long k, const Int& r) { return cyclotomic_value(k, r); }

}  // namespace

Int lsz_bound(const GroupId& g) {
  if (!is_exceptional(g)) not_exceptional(g);
  const Int& q = g.q;
  switch (g.fam) {
    case Fam::Suzuki: {
      if (q == 8) throw Error(Err::ExceptionListed, "2B2(8) sits in the exception column");
      // sqrt(q/2) * (q - 1) with q = 2^{2m+1}
      return pow_int(2, (unsigned long)g.n) * (q - 1);
    }
    case Fam::Ree:
      return q * (q - 1);
    case Fam::TwistedF4:
      // 2^{9m+4} (q - 1)
      return pow_int(2, 9 * (unsigned long)g.n + 4) * (q - 1);
    case Fam::TriD4:
      return pow_int(q, 3) * (q * q - 1);
    case Fam::G2:
      if (q == 3 || q == 4)
        throw Error(Err::ExceptionListed, group_name(g) + " sits in the exception column");
      return q * (q * q - 1);
    case Fam::F4:
      if (q == 2) throw Error(Err::ExceptionListed, "F4(2) sits in the exception column");
      if (mpz_odd_p(q.get_mpz_t())) return pow_int(q, 6) * (q * q - 1);
      return pow_int(q, 7) * (pow_int(q, 3) - 1) * (q - 1) / 2;
    case Fam::E6:
      return pow_int(q, 9) * (q * q - 1);
    case Fam::E7:
      return pow_int(q, 15) * (q * q - 1);
    case Fam::E8:
      return pow_int(q, 27) * (q * q - 1);
    default:
      not_exceptional(g);
  }
}

Int seitz_bound(const GroupId& g) {
  if (!is_exceptional(g)) not_exceptional(g);
  switch (g.fam) {
    case Fam::Suzuki: return pow_int(g.q, 3);
    case Fam::Ree: return pow_int(g.q, 4);
    case Fam::TwistedF4: return pow_int(g.q, 14);
    case Fam::TriD4: return pow_int(g.q, 17);
    case Fam::G2: return pow_int(g.q, 8);
    case Fam::F4: return pow_int(g.q, 28);
    case Fam::E6: return pow_int(g.q, 42);
    case Fam::E7: return pow_int(g.q, 70);
    case Fam::E8: return pow_int(g.q, 128);
    default: not_exceptional(g);
  }
}

Int unipotent_p_part(const GroupId& g) {
  if (!is_lie_type(g))
    throw Error(Err::RowMissing, group_name(g) + " has no unipotent character row");
  unsigned long b = g.a, n = (unsigned long)g.n;
  switch (g.fam) {
    case Fam::Linear:
      return pow_int(g.p, b * (n - 1) * (n - 2) / 2);
    case Fam::Symplectic:
      if (g.p == 2) return pow_int(g.p, b * (n - 1) * (n - 1) - 1);
      return pow_int(g.p, b * (n - 1) * (n - 1));
    case Fam::OrthOdd:
      return pow_int(g.p, b * (n - 1) * (n - 1));
    case Fam::OrthEven:
      if (g.eps == 1) return pow_int(g.p, b * (n * n - 3 * n + 3));
      return pow_int(g.p, b * (n * n - 3 * n + 2));
    case Fam::TriD4: return pow_int(g.p, 7 * b);
    case Fam::F4: return pow_int(g.p, 10 * b);
    case Fam::TwistedF4: return pow_int(2, 13 * (unsigned long)g.n + 6);
    case Fam::E6: return pow_int(g.p, 25 * b);
    case Fam::E7: return pow_int(g.p, 46 * b);
    case Fam::E8: return pow_int(g.p, 91 * b);
    default:
      throw Error(Err::RowMissing, group_name(g) + " has no unipotent character row");
  }
}

const std::vector<std::string>& witness_ids() {
  static const std::vector<std::string> ids = {
      "unip_A_1n1", "unip_A_2n2", "unip_B_01n", "unip_D",  "sz_deg",  "l3_deg",
      "u3_deg",     "l3q2_deg",   "s4_eno",     "s4_sym12", "phi_7_1", "phi_27_2",
      "phi_9_10",   "phi_9_2",    "phi_1_3p",   "phi_2_4p", "phi_6_1", "phi_8_1",
      "sz_b2a"};
  return ids;
}

Int witness_degree(const std::string& id, const Int& r, long n, int eps) {
  if (r < 2) throw Error(Err::InvalidParams, "witness field parameter must be >= 2");
  auto need_eps = [&] {
    if (eps != 1 && eps != -1) throw Error(Err::InvalidParams, "witness needs eps = +1 or -1");
  };
  auto exact = [&](const Int& num, const Int& den) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      throw Error(Err::InvalidParams, "witness parameters give a non-integral degree");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
  };
  auto sign_pow = [&](long e) { return (eps == -1 && (e % 2 != 0)) ? Int(-1) : Int(1); };

  if (id == "unip_A_1n1") {
    need_eps();
    if (n < 2) throw Error(Err::InvalidParams, "unip_A_1n1 needs n >= 2");
    return exact(pow_int(r, (unsigned long)n) - sign_pow(n - 1) * r, r - eps);
  }
  if (id == "unip_A_2n2") {
    need_eps();
    if (n < 4) throw Error(Err::InvalidParams, "unip_A_2n2 needs n >= 4");
    Int num = r * r * (pow_int(r, (unsigned long)n) - sign_pow(n)) *
              (pow_int(r, (unsigned long)(n - 3)) - sign_pow(n - 3));
    return exact(num, (r - eps) * (r * r - 1));
  }
  if (id == "unip_B_01n") {
    if (n < 2) throw Error(Err::InvalidParams, "unip_B_01n needs n >= 2");
    Int num = r * (pow_int(r, (unsigned long)n) - 1) * (pow_int(r, (unsigned long)(n - 1)) - 1);
    return exact(num, 2 * (r + 1));
  }
  if (id == "unip_D") {
    need_eps();
    if (n < 4) throw Error(Err::InvalidParams, "unip_D needs n >= 4");
    Int num = r * (pow_int(r, (unsigned long)n) - eps) *
              (pow_int(r, (unsigned long)(n - 2)) + eps);
    return exact(num, r * r - 1);
  }
  if (id == "sz_deg") return r * r + 1;  // r is the full field size 2^{2m+1}
  if (id == "l3_deg") {
    need_eps();
    return pow_int(r, 24) - eps;
  }
  if (id == "u3_deg") return r * (r - 1);
  if (id == "l3q2_deg") {
    need_eps();
    return r * r * (r * r + eps);
  }
  if (id == "s4_eno") return (r - 1) * (r * r + 1);
  if (id == "s4_sym12") return exact(r * (r * r + 1), 2);
  if (id == "phi_7_1") return r * phi_at(7, r) * phi_at(12, r) * phi_at(14, r);
  if (id == "phi_27_2") {
    Int v = r * r;
    for (unsigned long k : {3, 3, 6, 6, 9, 12, 18}) v *= phi_at(k, r);
    return v;
  }
  if (id == "phi_9_10" || id == "phi_9_2") {
    Int v = pow_int(r, id == "phi_9_10" ? 10 : 2);
    for (unsigned long k : {3, 3, 6, 6, 12}) v *= phi_at(k, r);
    return v;
  }
  if (id == "phi_1_3p") return r * phi_at(12, r);
  if (id == "phi_2_4p") return r * phi_at(8, r) * phi_at(12, r);
  if (id == "phi_6_1") return r * phi_at(8, r) * phi_at(9, r);
  if (id == "phi_8_1") {
    Int v = r;
    for (unsigned long k : {4, 4, 8, 12, 20, 24}) v *= phi_at(k, r);
    return v;
  }
  if (id == "sz_b2a") {
    // 2-part of the 2B2[a] character of 2F4(r), r = 2^{2m+1}: equals 2^m.
    auto f = factorize(r);
    if (f.entries.size() != 1 || f.entries[0].first != 2 || f.entries[0].second % 2 == 0)
      throw Error(Err::InvalidParams, "sz_b2a needs r = 2^(2m+1)");
    return pow_int(2, (f.entries[0].second - 1) / 2);
  }
  throw Error(Err::UnknownWitness, "no witness named " + id);
}

const std::vector<SporadicRecord>& sporadic_records() { return degree_data().records; }

const SporadicRecord& sporadic_record(const std::string& name) {
  const auto& d = degree_data();
  auto it = d.by_name.find(name);
  if (it == d.by_name.end())
    throw Error(Err::UnknownSporadic, "no degree record for " + name);
  return d.records[it->second];
}

const std::vector<std::tuple<std::string, Int, std::string>>& bound_constants() {
  return degree_data().constants;
}

Int bound_constant(const std::string& key) {
  const auto& d = degree_data();
  auto it = d.const_by_key.find(key);
  if (it == d.const_by_key.end())
    throw Error(Err::InvalidParameters, "no bound constant named " + key);
  return it->second;
}

}  // namespace chardeg
