#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandle/magma.hpp"
#include "quandle/partition.hpp"

namespace quandle {

/// Largest rack order for exhaustive congruence enumeration; Bell(8) = 4140
/// partitions, each checked in O(n^4).
inline constexpr std::size_t max_congruence_order = 8;

/// Raised by quotient() when the partition is not a full rack congruence.
class not_congruence_error : public axiom_error {
 public:
  explicit not_congruence_error(congruence_class c)
      : axiom_error("not a rack congruence (classified " + std::string(to_string(c)) + ")"), class_(c) {}

  congruence_class classification() const noexcept { return class_; }

 private:
  congruence_class class_;
};

/// Whether the partition satisfies the congruence condition for m:
/// a ~ c and b ~ d imply a*b ~ c*d.
inline bool is_congruence(const magma& m, const partition& p) {
  if (m.order() != p.order()) {
    throw structure_error("order mismatch: magma " + std::to_string(m.order()) + ", partition " +
                          std::to_string(p.order()));
  }
  const auto blocks = p.blocks();
  for (const auto& ac : blocks) {
    for (const auto& bd : blocks) {
      const std::size_t target = p.block_of(m(ac.front(), bd.front()));
      for (element a : ac) {
        for (element b : bd) {
          if (p.block_of(m(a, b)) != target) return false;
        }
      }
    }
  }
  return true;
}

inline congruence_class classify_relation(const rack& r, const partition& p) {
  return make_class(is_congruence(r.table(side::primary), p), is_congruence(r.table(side::inverse), p));
}

/// The induced operation [x]*[y] = [x*y] on blocks, or nullopt when it is
/// not well defined (exactly when p is not a *-congruence).
inline std::optional<magma> induced_table(const magma& m, const partition& p) {
  if (m.order() != p.order()) throw structure_error("order mismatch between magma and partition");
  const std::size_t k = p.block_count();
  constexpr element unset = static_cast<element>(-1);
  std::vector<element> flat(k * k, unset);
  for (element x = 0; x < m.order(); ++x) {
    for (element y = 0; y < m.order(); ++y) {
      element& cell = flat[p.block_of(x) * k + p.block_of(y)];
      element value = p.block_of(m(x, y));
      if (cell == unset) {
        cell = value;
      } else if (cell != value) {
        return std::nullopt;
      }
    }
  }
  return magma(k, std::move(flat));
}

/// A quotient rack together with the member list of each block; block
/// index b of the quotient is block b of the partition.
struct quotient_rack {
  rack table;
  std::vector<std::vector<element>> members;
};

inline quotient_rack quotient(const rack& r, const partition& p) {
  auto c = classify_relation(r, p);
  if (c != congruence_class::both) throw not_congruence_error(c);
  auto induced = induced_table(r.table(), p);
  return {rack(std::move(*induced)), p.blocks()};
}

struct classified_partition {
  partition relation;
  congruence_class classification;
};

inline std::vector<classified_partition> enumerate_congruences(const rack& r) {
  if (r.order() > max_congruence_order) {
    throw range_error("enumerate_congruences: order " + std::to_string(r.order()) + " exceeds " +
                      std::to_string(max_congruence_order));
  }
  std::vector<classified_partition> out;
  for (auto& p : all_partitions(r.order())) {
    auto c = classify_relation(r, p);
    out.push_back({std::move(p), c});
  }
  return out;
}

/// True iff no partition of r is a half congruence. For finite racks this
/// should always hold, since every symmetry has finite order.
inline bool finite_rack_theorem_check(const rack& r) {
  for (const auto& entry : enumerate_congruences(r)) {
    if (entry.classification == congruence_class::right_only ||
        entry.classification == congruence_class::left_only) {
      return false;
    }
  }
  return true;
}

/// Closure of a nonempty subset under both ▷ and ◁.
inline bool is_subrack(const rack& r, const std::vector<element>& subset) {
  if (subset.empty()) throw structure_error("is_subrack: subset must be nonempty");
  std::vector<bool> in(r.order(), false);
  for (element x : subset) {
    if (x >= r.order()) throw structure_error("is_subrack: element " + std::to_string(x) + " out of range");
    in[x] = true;
  }
  for (element x : subset) {
    for (element y : subset) {
      if (!in[r.op(x, y, side::primary)] || !in[r.op(x, y, side::inverse)]) return false;
    }
  }
  return true;
}

}  // namespace quandle
