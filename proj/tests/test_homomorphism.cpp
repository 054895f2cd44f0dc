#include <catch_amalgamated.hpp>

#include "quandle/enumerate.hpp"
#include "quandle/homomorphism.hpp"

using namespace quandle;

namespace {

rack d3() { return rack(dihedral_table(3)); }
rack d4() { return rack(dihedral_table(4)); }
rack t1() { return rack(trivial_table(1)); }

std::vector<rack> racks_up_to(std::size_t max_order) {
  std::vector<rack> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (const auto& m : enumerate_racks(n, false, false)) out.emplace_back(m);
  }
  return out;
}

/// Nonempty subsets of {0..n-1}.
std::vector<std::vector<element>> subsets(std::size_t n) {
  std::vector<std::vector<element>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<element> s;
    for (element x = 0; x < n; ++x) {
      if (mask & (1u << x)) s.push_back(x);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("homomorphism examples", "[congruence][homomorphism]") {
  CHECK(is_homomorphism(finite_map::identity(3), d3(), d3()));
  CHECK(is_homomorphism(finite_map::constant(3, 1, 0), d3(), t1()));
  finite_map parity(2, {0, 1, 0, 1});
  CHECK(is_homomorphism(parity, d4(), rack(dihedral_table(2))));
  CHECK(dihedral_table(2) == trivial_table(2));
  // A transposition of d3 is an automorphism; a non-injective map onto two points is not a hom.
  CHECK(is_homomorphism(finite_map(3, {1, 0, 2}), d3(), d3()));
  CHECK_FALSE(is_homomorphism(finite_map(3, {0, 0, 1}), d3(), d3()));
  CHECK_THROWS_AS(is_homomorphism(finite_map::identity(2), d3(), d3()), structure_error);
  CHECK_THROWS_AS(finite_map(2, {0, 2}), structure_error);
}

TEST_CASE("kernel congruences", "[congruence][homomorphism]") {
  CHECK(kernel_congruence(finite_map::identity(3), d3(), d3()) == partition::discrete(3));
  CHECK(kernel_congruence(finite_map::constant(3, 1, 0), d3(), t1()) == partition::single_block(3));
  CHECK(kernel_congruence(finite_map(2, {0, 1, 0, 1}), d4(), rack(trivial_table(2))) ==
        partition::parse("0,2|1,3"));
  CHECK_THROWS_AS(kernel_congruence(finite_map(3, {0, 0, 1}), d3(), d3()), axiom_error);
}

TEST_CASE("first isomorphism examples", "[congruence][homomorphism]") {
  auto id = first_isomorphism(finite_map::identity(3), d3(), d3());
  CHECK(id.holds);
  CHECK(isomorphic(id.quotient.table.table(), dihedral_table(3)));

  auto par = first_isomorphism(finite_map(2, {0, 1, 0, 1}), d4(), rack(trivial_table(2)));
  CHECK(par.holds);
  CHECK(par.quotient.table.order() == 2);
  CHECK(par.image == std::vector<element>{0, 1});

  auto constant = first_isomorphism(finite_map::constant(4, 3, 2), d4(), d3());
  CHECK(constant.holds);
  CHECK(constant.quotient.table.order() == 1);
  CHECK(constant.image == std::vector<element>{2});
}

TEST_CASE("homomorphisms between small racks", "[congruence][homomorphism][property]") {
  auto all = racks_up_to(3);
  std::size_t total = 0;
  for (const auto& r : all) {
    for (const auto& s : all) {
      // Oracle count: maps checked directly against the primary table.
      std::size_t expected = 0;
      std::vector<element> img(r.order(), 0);
      while (true) {
        bool ok = true;
        for (element x = 0; ok && x < r.order(); ++x)
          for (element y = 0; ok && y < r.order(); ++y) ok = img[r(x, y)] == s(img[x], img[y]);
        expected += ok;
        std::size_t i = 0;
        while (i < img.size() && ++img[i] == s.order()) img[i++] = 0;
        if (i == img.size()) break;
      }
      auto homs = all_homomorphisms(r, s);
      REQUIRE(homs.size() == expected);
      for (const auto& f : homs) {
        ++total;
        REQUIRE(first_isomorphism_check(f, r, s));
        REQUIRE(classify_relation(r, kernel_congruence(f, r, s)) == congruence_class::both);
        // Images of subracks and nonempty preimages of subracks are subracks.
        for (const auto& a : subsets(r.order())) {
          if (is_subrack(r, a)) REQUIRE(is_subrack(s, image_of(f, a)));
        }
        for (const auto& b : subsets(s.order())) {
          auto pre = preimage_of(f, b);
          if (is_subrack(s, b) && !pre.empty()) REQUIRE(is_subrack(r, pre));
        }
      }
    }
  }
  CHECK(total > 0);
}

TEST_CASE("image and preimage helpers", "[congruence][homomorphism]") {
  finite_map parity(2, {0, 1, 0, 1});
  CHECK(image_of(parity, {0, 2}) == std::vector<element>{0});
  CHECK(image_of(parity, {3, 0}) == std::vector<element>{0, 1});
  CHECK(preimage_of(parity, {1}) == std::vector<element>{1, 3});
  CHECK(parity.range() == std::vector<element>{0, 1});
  auto sub = restrict_to(d4(), {0, 2});
  CHECK(sub.table() == trivial_table(2));
  CHECK_THROWS_AS(restrict_to(d3(), {0, 1}), axiom_error);
}
