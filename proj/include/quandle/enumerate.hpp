#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "quandle/magma.hpp"

namespace quandle {

/// Largest order accepted by enumerate_racks. The search visits at most
/// (n!)^n column tuples (about 2.5e10 for n = 5); backtracking on partial
/// self-distributivity keeps n = 5 well under a second.
inline constexpr std::size_t max_enumeration_order = 5;

/// Image of m under simultaneous relabelling of rows, columns and values by sigma.
inline magma relabel(const magma& m, const permutation& sigma) {
  const std::size_t n = m.order();
  std::vector<element> flat(n * n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) flat[sigma(x) * n + sigma(y)] = sigma(m(x, y));
  }
  return magma(n, std::move(flat));
}

/// Lexicographically least table in the isomorphism class of m.
inline magma canonical_form(const magma& m) {
  magma best = m;
  for (const auto& sigma : all_permutations(m.order())) {
    magma candidate = relabel(m, sigma);
    if (std::ranges::lexicographical_compare(candidate.table(), best.table())) best = std::move(candidate);
  }
  return best;
}

inline bool isomorphic(const magma& a, const magma& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

namespace detail {

class rack_search {
 public:
  rack_search(std::size_t n, bool quandles_only) : n_(n), quandles_only_(quandles_only), cols_(n) {
    for (const auto& p : all_permutations(n)) perms_.emplace_back(p.image().begin(), p.image().end());
  }

  std::vector<magma> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  // Every (x, y, z) whose columns z, y and y ▷ z are all assigned (indices
  // <= j) and that involves column j at least once.
  bool consistent(std::size_t j) const {
    for (element z = 0; z <= j; ++z) {
      const auto& cz = cols_[z];
      for (element y = 0; y <= j; ++y) {
        const element w = cz[y];
        if (w > j) continue;
        if (y != j && z != j && w != j) continue;
        const auto& cy = cols_[y];
        const auto& cw = cols_[w];
        for (element x = 0; x < n_; ++x) {
          if (cz[cy[x]] != cw[cz[x]]) return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t j) {
    if (j == n_) {
      std::vector<element> flat(n_ * n_);
      for (element x = 0; x < n_; ++x) {
        for (element y = 0; y < n_; ++y) flat[x * n_ + y] = cols_[y][x];
      }
      found_.emplace_back(n_, std::move(flat));
      return;
    }
    for (const auto& p : perms_) {
      if (quandles_only_ && p[j] != j) continue;
      cols_[j] = p;
      if (consistent(j)) extend(j + 1);
    }
  }

  std::size_t n_;
  bool quandles_only_ = false;
  std::vector<std::vector<element>> perms_;
  std::vector<std::vector<element>> cols_;
  std::vector<magma> found_;
};

}  // namespace detail

/// All racks (or quandles) on {0..n-1}, found by searching n-tuples of
/// column permutations. Labelled results come in lexicographic order of the
/// column tuple; with up_to_iso, one lexicographically least representative
/// per isomorphism class, sorted.
inline std::vector<magma> enumerate_racks(std::size_t n, bool quandles_only, bool up_to_iso) {
  if (n < 1 || n > max_enumeration_order) {
    throw range_error("enumerate_racks: order " + std::to_string(n) + " outside supported range 1.." +
                      std::to_string(max_enumeration_order));
  }
  auto labelled = detail::rack_search(n, quandles_only).run();
  if (!up_to_iso) return labelled;
  std::set<magma> reps;
  for (const auto& m : labelled) reps.insert(canonical_form(m));
  return {reps.begin(), reps.end()};
}

}  // namespace quandle
