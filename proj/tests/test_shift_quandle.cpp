#include <catch_amalgamated.hpp>

#include "quandle/demos.hpp"
#include "quandle/shift_quandle.hpp"

using namespace quandle;
using enum side;

namespace {

// Sampled sequences change value only inside [-16, 16], so looking at a
// window well past that decides everything below.
constexpr std::int64_t horizon = 64;

bool tilde_oracle(const biseq& a, const biseq& b) {
  for (std::int64_t i = 0; i <= horizon; ++i) {
    if (a.at(i) != b.at(i)) return false;
  }
  return true;
}

// Bounded search for j, k with a_i = b_{i+j} for all i >= k.
bool simeq_oracle(const biseq& a, const biseq& b) {
  for (std::int64_t j = -16; j <= 16; ++j) {
    for (std::int64_t k = -16; k <= 16; ++k) {
      bool ok = true;
      for (std::int64_t i = k; ok && i <= horizon; ++i) ok = a.at(i) == b.at(i + j);
      if (ok) return true;
    }
  }
  return false;
}

const auto W = make_half_congruence_witnesses();

}  // namespace

TEST_CASE("biseq canonical form and literals", "[shift_examples]") {
  CHECK(biseq(0, -3, {0, 0, 1, 0}, 0) == biseq::indicator(-1));
  CHECK(biseq(1, 5, {1, 1}, 1) == biseq::constant(1));
  CHECK(biseq::constant(1).start() == 0);
  CHECK(biseq::step_down(1) == biseq(1, -4, {1, 1, 1, 1, 1, 0}, 0));
  CHECK(biseq::indicator(0).to_string() == "L0:0:1:R0");
  CHECK(biseq::constant(0).to_string() == "L0::R0");
  CHECK(biseq::parse("L0:::R0") == biseq::constant(0));
  CHECK(biseq::parse("L0:0:1:R0") == biseq::indicator(0));
  CHECK_THROWS_AS(biseq::parse("L0::1:R0"), structure_error);
  CHECK(biseq::parse("L1:::R1") == biseq::constant(1));
  CHECK_THROWS_AS(biseq::parse("L1:4:R1"), structure_error);
  CHECK(biseq::parse("L1:-2:0110:R0") == biseq(1, -2, {0, 1, 1, 0}, 0));
  CHECK(biseq::parse("L0:0:1:R0") == W.alpha);
  CHECK(biseq::parse("L1:0:1:R0") == W.beta);
  CHECK(biseq::parse("L1::R1") == W.gamma);
  CHECK(W.beta.to_string() == "L1:1::R0");
  CHECK_THROWS_AS(biseq::parse("L0:0:12:R0"), structure_error);
  CHECK_THROWS_AS(biseq::parse("L2:0:1:R0"), structure_error);
  CHECK_THROWS_AS(biseq::parse("L0:x:1:R0"), structure_error);
  CHECK_THROWS_AS(biseq::parse("L0:0:1"), structure_error);
  // A start with an empty word is simply dropped.
  CHECK(biseq::parse("L1:3::R0") == biseq::step_down(3));

  biseq_sampler rng(11);
  for (int i = 0; i < 2000; ++i) {
    biseq a = rng();
    REQUIRE(biseq::parse(a.to_string()) == a);
  }
}

TEST_CASE("shifts", "[shift_examples]") {
  CHECK(shift(W.gamma, shift_direction::left) == W.gamma);
  CHECK(shift(W.gamma, shift_direction::right) == W.gamma);
  CHECK(shift(W.alpha, shift_direction::left) == biseq::indicator(-1));
  CHECK(shift(W.alpha, shift_direction::right) == biseq::indicator(1));
  biseq_sampler rng(1);
  for (int i = 0; i < 2000; ++i) {
    biseq a = rng();
    biseq l = shift(a, shift_direction::left);
    REQUIRE(shift(l, shift_direction::right) == a);
    for (std::int64_t k = -12; k <= 12; ++k) {
      REQUIRE(l.at(k) == a.at(k + 1));
      REQUIRE(shift(a, shift_direction::right).at(k) == a.at(k - 1));
    }
  }
}

TEST_CASE("the relations ~ and simeq", "[shift_examples]") {
  CHECK(rel_tilde(W.alpha, W.beta));
  CHECK(rel_tilde(W.zero, W.b));
  CHECK_FALSE(rel_tilde(W.alpha, W.gamma));
  CHECK(rel_simeq(W.alpha, W.beta));
  CHECK_FALSE(rel_simeq(W.alpha, W.gamma));

  biseq_sampler rng(2);
  for (int i = 0; i < 3000; ++i) {
    biseq a = rng(), b = rng();
    REQUIRE(rel_tilde(a, b) == tilde_oracle(a, b));
    REQUIRE(rel_simeq(a, b) == simeq_oracle(a, b));
    REQUIRE(rel_simeq(a, shift(a, shift_direction::left)));
    REQUIRE(rel_simeq(a, shift(a, shift_direction::right)));
    biseq c = rng.tilde_partner(a);
    REQUIRE(tilde_oracle(a, c));
    // ~ refines simeq.
    REQUIRE(rel_simeq(a, c));
  }
}

TEST_CASE("the constant action rack on sequences", "[shift_examples]") {
  CHECK(bql_op(W.gamma, W.alpha, primary) == W.gamma);
  CHECK(bql_op(W.alpha, W.beta, primary) == shift(W.alpha, shift_direction::left));
  biseq_sampler rng(3);
  for (int i = 0; i < 2000; ++i) {
    biseq a = rng(), b = rng(), c = rng();
    REQUIRE(bql_op(bql_op(a, b, primary), b, inverse) == a);
    REQUIRE(bql_op(bql_op(a, b, inverse), b, primary) == a);
    REQUIRE(bql_op(bql_op(a, b, primary), c, primary) ==
            bql_op(bql_op(a, c, primary), bql_op(b, c, primary), primary));
  }
  // ~ respects the left shift but not the right one.
  CHECK_FALSE(rel_tilde(shift(W.zero, shift_direction::right), shift(W.b, shift_direction::right)));
  CHECK(shift(W.b, shift_direction::right).at(0) == 1);
}

TEST_CASE("the quandle (B, |>)", "[shift_examples]") {
  CHECK(bq_op(W.alpha, W.alpha, primary) == W.alpha);
  CHECK(bq_op(W.alpha, W.gamma, inverse) == shift(W.alpha, shift_direction::right));
  CHECK(bq_op(W.alpha, W.beta, primary) == W.alpha);
  CHECK(bq_op(W.beta, W.gamma, inverse) == shift(W.beta, shift_direction::right));
  CHECK_FALSE(rel_tilde(bq_op(W.alpha, W.gamma, inverse), bq_op(W.beta, W.gamma, inverse)));

  biseq_sampler rng(4);
  for (int i = 0; i < 3000; ++i) {
    biseq a = rng(), b = rng(), c = rng();
    REQUIRE(bq_op(a, a, primary) == a);
    REQUIRE(bq_op(bq_op(a, b, primary), b, inverse) == a);
    REQUIRE(bq_op(bq_op(a, b, inverse), b, primary) == a);
    REQUIRE(bq_op(bq_op(a, b, primary), c, primary) == bq_op(bq_op(a, c, primary), bq_op(b, c, primary), primary));
    biseq a2 = rng.tilde_partner(a), b2 = rng.tilde_partner(b);
    REQUIRE(rel_tilde(bq_op(a, b, primary), bq_op(a2, b2, primary)));
  }
}

TEST_CASE("normal forms of the presented quandle", "[shift_examples]") {
  CHECK(b0_op(b0_element::a(2), b0_element::c(), primary) == b0_element::a(3));
  CHECK(b0_op(b0_element::c(), b0_element::b(-5), primary) == b0_element::c());
  CHECK(b0_op(b0_element::a(2), b0_element::b(-3), inverse) == b0_element::a(2));
  CHECK(b0_op(b0_element::b(0), b0_element::c(), inverse) == b0_element::b(-1));
  CHECK(b0_element::a(-2).to_string() == "a^-2");

  CHECK(embed_b0(b0_element::c()) == W.gamma);
  CHECK(embed_b0(b0_element::a(0)) == W.alpha);
  CHECK(embed_b0(b0_element::a(1)) == biseq::indicator(-1));
  CHECK(embed_b0(b0_element::b(0)) == W.beta);
  // The defining relations hold in the image.
  for (side s : {primary, inverse}) {
    CHECK(bq_op(W.alpha, W.beta, s) == W.alpha);
    CHECK(bq_op(W.beta, W.alpha, s) == W.beta);
    CHECK(bq_op(W.gamma, W.alpha, s) == W.gamma);
    CHECK(bq_op(W.gamma, W.beta, s) == W.gamma);
  }
}

TEST_CASE("demos pass", "[shift_examples][demo]") {
  demo_options opt;
  opt.samples = 2000;
  for (const auto& checks : {demo_b_ell(opt), demo_b_quandle(opt), demo_b0(opt)}) {
    for (const auto& c : checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.passed);
    }
  }
  CHECK(b0_window(20).size() == 83);
}
