#include <catch_amalgamated.hpp>

#include <array>

#include "quandle/congruence.hpp"
#include "quandle/enumerate.hpp"

using namespace quandle;
using enum congruence_class;

namespace {

// Oracle: the congruence condition over all quadruples a~c, b~d, written
// directly from its definition.
bool congruence_by_quadruples(const magma& m, const partition& p) {
  const std::size_t n = m.order();
  for (element a = 0; a < n; ++a)
    for (element c = 0; c < n; ++c) {
      if (!p.related(a, c)) continue;
      for (element b = 0; b < n; ++b)
        for (element d = 0; d < n; ++d) {
          if (p.related(b, d) && !p.related(m(a, b), m(c, d))) return false;
        }
    }
  return true;
}

rack d3() { return rack(dihedral_table(3)); }
rack d4() { return rack(dihedral_table(4)); }

}  // namespace

TEST_CASE("classify_relation examples", "[congruence]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& m : enumerate_racks(n, false, false)) {
      rack r(m);
      CHECK(classify_relation(r, partition::discrete(n)) == both);
      CHECK(classify_relation(r, partition::single_block(n)) == both);
    }
  }
  CHECK(classify_relation(d4(), partition::parse("0,2|1,3")) == both);
  CHECK(classify_relation(d3(), partition::parse("0,1|2")) == neither);
  CHECK_THROWS_AS(classify_relation(d3(), partition::discrete(4)), structure_error);
}

TEST_CASE("block-pair check agrees with the quadruple definition", "[congruence][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_racks(n, false, true)) {
      rack r(m);
      for (const auto& p : all_partitions(n)) {
        REQUIRE(is_congruence(r.table(side::primary), p) == congruence_by_quadruples(r.table(side::primary), p));
        REQUIRE(is_congruence(r.table(side::inverse), p) == congruence_by_quadruples(r.table(side::inverse), p));
        // The induced operation is well defined exactly for congruences.
        REQUIRE(induced_table(r.table(), p).has_value() == is_congruence(r.table(), p));
      }
    }
  }
}

TEST_CASE("the dual rack swaps the one-sided classes", "[congruence][property]") {
  CHECK(dual(right_only) == left_only);
  CHECK(dual(left_only) == right_only);
  CHECK(dual(both) == both);
  CHECK(dual(neither) == neither);
  for (const auto& m : enumerate_racks(3, false, false)) {
    rack r(m);
    for (const auto& p : all_partitions(3)) REQUIRE(classify_relation(r.dual(), p) == dual(classify_relation(r, p)));
  }
}

TEST_CASE("quotient examples", "[congruence]") {
  SECTION("dihedral 4 by parity is the trivial quandle of order 2") {
    auto q = quotient(d4(), partition::parse("0,2|1,3"));
    CHECK(q.table.table() == trivial_table(2));
    CHECK(q.table.is_quandle());
    CHECK(q.members == std::vector<std::vector<element>>{{0, 2}, {1, 3}});
  }
  SECTION("discrete and single-block partitions") {
    for (const auto& m : enumerate_racks(3, false, true)) {
      rack r(m);
      CHECK(isomorphic(quotient(r, partition::discrete(3)).table.table(), m));
      auto one = quotient(r, partition::single_block(3));
      CHECK(one.table.order() == 1);
      CHECK(one.table.is_quandle());
    }
  }
  SECTION("a non-congruence carries its classification") {
    try {
      (void)quotient(d3(), partition::parse("0,1|2"));
      FAIL("expected not_congruence_error");
    } catch (const not_congruence_error& e) {
      CHECK(e.classification() == neither);
    }
  }
}

TEST_CASE("quotients of racks are racks, of quandles quandles", "[congruence][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_racks(n, false, true)) {
      rack r(m);
      for (const auto& e : enumerate_congruences(r)) {
        if (e.classification != both) continue;
        auto q = quotient(r, e.relation);
        auto rep = validate(q.table.table());
        REQUIRE(rep.is_rack);
        if (r.is_quandle()) REQUIRE(rep.is_quandle);
      }
    }
  }
}

TEST_CASE("enumerate_congruences examples", "[congruence]") {
  auto one = enumerate_congruences(rack(trivial_table(1)));
  REQUIRE(one.size() == 1);
  CHECK(one[0].classification == both);

  auto two = enumerate_congruences(rack(trivial_table(2)));
  REQUIRE(two.size() == 2);
  for (const auto& e : two) CHECK(e.classification == both);

  auto three = enumerate_congruences(d3());
  REQUIRE(three.size() == 5);
  std::size_t both_count = 0;
  for (const auto& e : three) {
    if (e.relation.block_count() == 2) {
      CHECK(e.classification == neither);
    } else {
      CHECK(e.classification == both);
      ++both_count;
    }
  }
  CHECK(both_count == 2);

  CHECK_THROWS_AS(enumerate_congruences(rack(trivial_table(9))), range_error);
}

TEST_CASE("finite racks have no half congruences", "[congruence][property]") {
  CHECK(finite_rack_theorem_check(rack(trivial_table(1))));
  for (const auto& m : enumerate_racks(3, false, false)) REQUIRE(finite_rack_theorem_check(rack(m)));
  for (const auto& m : enumerate_racks(4, false, true)) REQUIRE(finite_rack_theorem_check(rack(m)));
  CHECK(finite_rack_theorem_check(rack(dihedral_table(7))));
}

TEST_CASE("is_subrack examples", "[congruence]") {
  CHECK(is_subrack(d3(), {0}));
  CHECK_FALSE(is_subrack(d3(), {0, 1}));
  CHECK(is_subrack(d3(), {0, 1, 2}));
  CHECK(is_subrack(d4(), {0, 2}));
  CHECK_THROWS_AS(is_subrack(d3(), {}), structure_error);
  CHECK_THROWS_AS(is_subrack(d3(), {3}), structure_error);
}

TEST_CASE("partitions", "[congruence][partition]") {
  SECTION("restricted growth strings count to the Bell numbers") {
    const std::array<std::size_t, 8> bell{1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::size_t n = 1; n <= 8; ++n) {
      auto ps = all_partitions(n);
      CHECK(ps.size() == bell[n - 1]);
      CHECK(std::is_sorted(ps.begin(), ps.end()));
      CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
    }
  }
  SECTION("literals") {
    auto p = partition::parse("0,2|1,3");
    CHECK(p.order() == 4);
    CHECK(p.block_count() == 2);
    CHECK(p.related(0, 2));
    CHECK_FALSE(p.related(0, 1));
    CHECK(p.to_string() == "0,2|1,3");
    CHECK(partition::parse("3|1,0|2") == partition::parse("0,1|2|3"));
    CHECK(partition::parse(" 0 , 1 | 2 ").to_string() == "0,1|2");
    CHECK(partition::parse("0|1", 2) == partition::discrete(2));
  }
  SECTION("malformed literals") {
    CHECK_THROWS_AS(partition::parse(""), structure_error);
    CHECK_THROWS_AS(partition::parse("0,|1"), structure_error);
    CHECK_THROWS_AS(partition::parse("0,1|1"), structure_error);
    CHECK_THROWS_AS(partition::parse("0|2"), structure_error);
    CHECK_THROWS_AS(partition::parse("0|1", 3), structure_error);
    CHECK_THROWS_AS(partition::parse("0;1"), structure_error);
    CHECK_THROWS_AS(partition::parse("0|1", 1), structure_error);
  }
}
