#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chardeg/groups.hpp"

using chardeg::Fam;
using chardeg::GroupId;
using chardeg::Int;

namespace {

Int ord(const std::string& name) { return chardeg::order_value(chardeg::parse_group(name)); }

}  // namespace

TEST_CASE("orders of small classical groups against published values") {
  CHECK(ord("L2(7)") == 168);
  CHECK(ord("L(2,7)") == 168);
  CHECK(ord("L2(8)") == 504);
  CHECK(ord("L3(4)") == 20160);
  CHECK(ord("L4(2)") == 20160);  // both isomorphic to A8
  CHECK(ord("A8") == 20160);
  CHECK(ord("U3(3)") == 6048);
  CHECK(ord("U4(2)") == 25920);
  CHECK(ord("S4(3)") == 25920);  // U4(2) = S4(3)
  CHECK(ord("S6(2)") == 1451520);
  CHECK(ord("O7(3)") == 4585351680);
  CHECK(ord("O+(8,2)") == 174182400);
  CHECK(ord("O-(8,2)") == 197406720);
  CHECK(ord("A5") == 60);
  CHECK(ord("A7") == 2520);
}

TEST_CASE("orders of exceptional groups from the product formulas") {
  CHECK(ord("2B2(8)") == 29120);
  CHECK(ord("G2(3)") == 4245696);
  CHECK(ord("3D4(2)") == 211341312);
  CHECK(ord("2G2(27)") == Int("10073444472"));
  CHECK(ord("G2(4)") == Int("251596800"));
  CHECK(ord("F4(2)") == Int("3311126603366400"));
  CHECK(ord("2F4(8)") == Int("264905352699586176614400"));
  // E6(2): q^36 (q^12-1)(q^9-1)(q^8-1)(q^6-1)(q^5-1)(q^2-1), d = (3, q-1) = 1
  Int e62 = chardeg::pow_int(2, 36);
  for (unsigned long k : {12UL, 9UL, 8UL, 6UL, 5UL, 2UL}) e62 *= chardeg::pow_int(2, k) - 1;
  CHECK(ord("E6(2)") == e62);
  // 2E6(2) carries d = (3, q+1) = 3
  Int te62 = chardeg::pow_int(2, 36);
  for (unsigned long k : {12UL, 8UL, 6UL, 2UL}) te62 *= chardeg::pow_int(2, k) - 1;
  te62 *= chardeg::pow_int(2, 9) + 1;
  te62 *= chardeg::pow_int(2, 5) + 1;
  CHECK(ord("2E6(2)") == te62 / 3);
}

TEST_CASE("non-simple parameter combinations are rejected") {
  for (const char* name : {"A4", "A3", "L2(2)", "L2(3)", "U2(2)", "U2(3)", "U3(2)",
                           "S4(2)", "2B2(2)", "2F4(2)", "2G2(3)", "G2(2)"}) {
    CHECK_THROWS_WITH_AS(chardeg::parse_group(name), doctest::Contains("not simple"),
                         chardeg::Error);
  }
  // the derived subgroup of 2F4(2) is simple and lives in the sporadic table
  CHECK(ord("2F4(2)'") == 17971200);
}

TEST_CASE("parse errors") {
  for (const char* name : {"", "X5(2)", "L2(6)", "L(2)", "2B2(32", "L2(7)x", "S5(2)",
                           "O8(2)", "O+(7,3)", "2B2(27)", "2G2(8)", "A(2,3)"}) {
    CHECK_THROWS_AS(chardeg::parse_group(name), chardeg::Error);
  }
}

TEST_CASE("parser accepts both spellings and canonicalizes") {
  auto g1 = chardeg::parse_group("L3(4)");
  auto g2 = chardeg::parse_group("L(3,4)");
  CHECK(g1.fam == g2.fam);
  CHECK(g1.n == g2.n);
  CHECK(g1.q == g2.q);
  CHECK(chardeg::group_name(g1) == "L(3,4)");
  CHECK(chardeg::group_name(chardeg::parse_group("S6(16)")) == "S(6,16)");
  CHECK(chardeg::group_name(chardeg::parse_group("O7(3)")) == "O(7,3)");
  CHECK(chardeg::group_name(chardeg::parse_group("O+(12,4)")) == "O+(12,4)");
  CHECK(chardeg::group_name(chardeg::parse_group("2E6(4)")) == "2E6(4)");
  CHECK(chardeg::group_name(chardeg::parse_group("A12")) == "A(12)");
  CHECK(chardeg::group_name(chardeg::parse_group("Fi24'")) == "Fi24'");
}

TEST_CASE("twisted families store the full field size") {
  auto g = chardeg::parse_group("2B2(8)");
  CHECK(g.fam == Fam::Suzuki);
  CHECK(g.q == 8);
  CHECK(g.p == 2);
  CHECK(g.a == 3);
  CHECK(g.n == 1);  // m with q = 2^(2m+1)
  auto r = chardeg::parse_group("2G2(27)");
  CHECK(r.q == 27);
  CHECK(r.p == 3);
  CHECK(r.n == 1);
}

TEST_CASE("sporadic orders match the bundled table") {
  CHECK(chardeg::sporadic_order("M11").value == 7920);
  CHECK(chardeg::sporadic_order("M24").value == 244823040);
  CHECK(chardeg::sporadic_order("ON").value == Int("460815505920"));
  CHECK(chardeg::sporadic_order("M").value ==
        Int("808017424794512875886459904961710757005754368000000000"));
  CHECK(chardeg::sporadic_names().size() == 27);
  CHECK(ord("J1") == 175560);
  CHECK_THROWS_AS(chardeg::sporadic_order("Nope"), chardeg::Error);
}

TEST_CASE("pi of known groups") {
  auto ps = chardeg::pi(chardeg::parse_group("G2(3)"));
  CHECK(ps == std::vector<Int>{2, 3, 7, 13});
  ps = chardeg::pi(chardeg::parse_group("2B2(8)"));
  CHECK(ps == std::vector<Int>{2, 5, 7, 13});
  ps = chardeg::pi(chardeg::parse_group("ON"));
  CHECK(ps == std::vector<Int>{2, 3, 5, 7, 11, 19, 31});
}

TEST_CASE("piecewise order assembly agrees with the plain product on a grid") {
  std::vector<std::string> names;
  for (const char* fam : {"L", "U"})
    for (long n = 2; n <= 8; ++n)
      for (long q : {2, 3, 4, 5, 7, 8, 9}) {
        if (n == 2 && q <= 3) continue;
        if (fam[0] == 'U' && n == 3 && q == 2) continue;
        names.push_back(std::string(fam) + "(" + std::to_string(n) + "," + std::to_string(q) + ")");
      }
  for (long n = 2; n <= 6; ++n)
    for (long q : {2, 3, 4, 5, 7, 9}) {
      if (n == 2 && q == 2) continue;
      names.push_back("S(" + std::to_string(2 * n) + "," + std::to_string(q) + ")");
    }
  for (long n = 3; n <= 6; ++n)
    for (long q : {3, 5, 7, 9})
      names.push_back("O(" + std::to_string(2 * n + 1) + "," + std::to_string(q) + ")");
  for (long n = 4; n <= 6; ++n)
    for (long q : {2, 3, 4, 5})
      for (const char* s : {"O+", "O-"})
        names.push_back(std::string(s) + "(" + std::to_string(2 * n) + "," +
                        std::to_string(q) + ")");
  for (const char* g : {"G2(3)", "G2(4)", "G2(5)", "F4(2)", "F4(3)", "3D4(2)", "3D4(3)",
                        "2B2(8)", "2B2(32)", "2G2(27)", "2F4(8)", "E6(2)", "2E6(2)",
                        "E7(2)", "E8(2)", "A5", "A9", "A16", "M11", "B"})
    names.push_back(g);

  for (const auto& name : names) {
    auto g = chardeg::parse_group(name);
    auto f = chardeg::order(g);  // throws internally if assembly != plain product
    CHECK_MESSAGE(f.value == chardeg::order_value(g), name);
    Int prod = 1;
    for (const auto& [p, e] : f.entries) prod *= chardeg::pow_int(p, e);
    CHECK_MESSAGE(prod == f.value, name);
  }
}

TEST_CASE("p-part of the order") {
  auto [p2, e2] = chardeg::p_part_order(chardeg::parse_group("2B2(8)"));
  CHECK(p2 == 2);
  CHECK(e2 == 6);  // 2^6 = 64
  auto [p3, e3] = chardeg::p_part_order(chardeg::parse_group("G2(3)"));
  CHECK(p3 == 3);
  CHECK(e3 == 6);  // 3^6 = 729
  auto [p4, e4] = chardeg::p_part_order(chardeg::parse_group("E8(2)"));
  CHECK(e4 == 120);
  auto [p5, e5] = chardeg::p_part_order(chardeg::parse_group("L(4,9)"));
  CHECK(e5 == 12);  // a * n(n-1)/2 = 2 * 6

  // the declared p-part is the exact p-part of the full order
  for (const char* name : {"L(5,3)", "U(4,5)", "S(8,3)", "O(9,3)", "O+(10,3)",
                           "O-(12,2)", "G2(5)", "F4(3)", "3D4(4)", "2B2(32)",
                           "2G2(27)", "2F4(8)", "E6(3)", "2E6(3)", "E7(3)", "E8(3)"}) {
    auto g = chardeg::parse_group(name);
    auto [p, e] = chardeg::p_part_order(g);
    Int pk = chardeg::pow_int(p, e);
    Int o = chardeg::order_value(g);
    CHECK_MESSAGE(o % pk == 0, name);
    CHECK_MESSAGE((o / pk) % p != 0, name);
  }
}

TEST_CASE("is_lie_type and is_exceptional") {
  CHECK(chardeg::is_lie_type(chardeg::parse_group("L2(7)")));
  CHECK_FALSE(chardeg::is_lie_type(chardeg::parse_group("A7")));
  CHECK_FALSE(chardeg::is_lie_type(chardeg::parse_group("M11")));
  CHECK(chardeg::is_exceptional(chardeg::parse_group("G2(4)")));
  CHECK(chardeg::is_exceptional(chardeg::parse_group("2B2(8)")));
  CHECK_FALSE(chardeg::is_exceptional(chardeg::parse_group("L2(7)")));
}
