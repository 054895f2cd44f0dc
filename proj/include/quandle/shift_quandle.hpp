#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "quandle/biseq.hpp"
#include "quandle/common.hpp"

namespace quandle {

/// a ~ b iff a_i = b_i for every i >= 0. Both sequences are constant from
/// their word ends onwards, so a finite window plus the right tails decides it.
inline bool rel_tilde(const biseq& a, const biseq& b) {
  if (a.right_tail() != b.right_tail()) return false;
  const std::int64_t hi = std::max(a.end(), b.end());
  for (std::int64_t i = 0; i < hi; ++i) {
    if (a.at(i) != b.at(i)) return false;
  }
  return true;
}

/// a ≃ b iff there are j, k with a_i = b_{i+j} for all i >= k.
///
/// For eventually constant sequences this is equality of right tails:
///  - if the tails differ, for any j the two sides settle on different
///    constants once i is past both word ends, so no k works;
///  - if the tails agree, take j = 0 and k beyond both word ends; both
///    sides are then the common tail value.
inline bool rel_simeq(const biseq& a, const biseq& b) { return a.right_tail() == b.right_tail(); }

/// The constant action rack B_l: a ▷ b = l(a), a ◁ b = r(a).
inline biseq bql_op(const biseq& a, const biseq& /*b*/, side s) {
  return shift(a, s == side::primary ? shift_direction::left : shift_direction::right);
}

/// The quandle (B, ▶): a ▶ b = a if a ≃ b, l(a) otherwise; ◀ uses r.
inline biseq bq_op(const biseq& a, const biseq& b, side s) {
  if (rel_simeq(a, b)) return a;
  return bql_op(a, b, s);
}

struct half_congruence_witnesses {
  biseq alpha;  // 1 at index 0 only
  biseq beta;   // 1 for i <= 0
  biseq gamma;  // all ones
  biseq zero;   // all zeros
  biseq b;      // 1 at index -1 only
};

inline half_congruence_witnesses make_half_congruence_witnesses() {
  return {biseq::indicator(0), biseq::step_down(1), biseq::constant(1), biseq::constant(0),
          biseq::indicator(-1)};
}

// Elements of the finitely presented quandle <a, b, c | a▷b = a, b▷a = b,
// c▷a = c, c▷b = c> in normal form a^k, b^k, c, where x^k = x S_c^k.

enum class b0_kind { a, b, c };

struct b0_element {
  b0_kind kind = b0_kind::c;
  std::int64_t k = 0;  // ignored (and kept 0) for c

  static b0_element a(std::int64_t k) { return {b0_kind::a, k}; }
  static b0_element b(std::int64_t k) { return {b0_kind::b, k}; }
  static b0_element c() { return {b0_kind::c, 0}; }

  std::string to_string() const {
    switch (kind) {
      case b0_kind::a: return "a^" + std::to_string(k);
      case b0_kind::b: return "b^" + std::to_string(k);
      case b0_kind::c: return "c";
    }
    return "?";
  }

  bool operator==(const b0_element&) const = default;
};

/// Product of normal forms:
///   x^k ▷ c = x^{k+1},  x^k ◁ c = x^{k-1},
///   c ▷ v = c ◁ v = c,
///   x^k ▷ y^l = x^k ◁ y^l = x^k      (x, y in {a, b}).
inline b0_element b0_op(const b0_element& u, const b0_element& v, side s) {
  if (u.kind == b0_kind::c) return u;
  if (v.kind == b0_kind::c) return {u.kind, u.k + (s == side::primary ? 1 : -1)};
  return u;
}

/// a^k -> l^k(alpha), b^k -> l^k(beta), c -> gamma.
inline biseq embed_b0(const b0_element& u) {
  static const auto w = make_half_congruence_witnesses();
  switch (u.kind) {
    case b0_kind::a: return w.alpha.shifted_left(u.k);
    case b0_kind::b: return w.beta.shifted_left(u.k);
    case b0_kind::c: return w.gamma;
  }
  return w.gamma;
}

/// Fixed-seed sampler for canonical sequences: word length 0..8, start in
/// [-8, 8], uniform bits and tails.
class biseq_sampler {
 public:
  explicit biseq_sampler(std::uint64_t seed) : rng_(seed) {}

  biseq operator()() {
    std::uniform_int_distribution<int> bitd(0, 1);
    std::uniform_int_distribution<int> lend(0, 8);
    std::uniform_int_distribution<std::int64_t> startd(-8, 8);
    std::vector<bit> word(static_cast<std::size_t>(lend(rng_)));
    for (auto& b : word) b = static_cast<bit>(bitd(rng_));
    bit l = static_cast<bit>(bitd(rng_));
    bit r = static_cast<bit>(bitd(rng_));
    return biseq(l, startd(rng_), std::move(word), r);
  }

  /// A sequence ~-related to a: bits at indices in [-10, -1] and the left
  /// tail are redrawn, everything at i >= 0 is kept.
  biseq tilde_partner(const biseq& a) {
    std::uniform_int_distribution<int> bitd(0, 1);
    const std::int64_t lo = -10;
    const std::int64_t hi = std::max<std::int64_t>(a.end(), 0);
    std::vector<bit> word;
    for (std::int64_t i = lo; i < hi; ++i) {
      word.push_back(i < 0 ? static_cast<bit>(bitd(rng_)) : a.at(i));
    }
    return biseq(static_cast<bit>(bitd(rng_)), lo, std::move(word), a.right_tail());
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace quandle
