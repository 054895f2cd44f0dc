#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "quandle/common.hpp"

namespace quandle {

/// A bijection of {0..n-1}, stored as its image array.
class permutation {
 public:
  permutation() = default;

  explicit permutation(std::vector<element> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (element v : image_) {
      if (v >= image_.size() || seen[v]) {
        throw structure_error("permutation: image is not a bijection");
      }
      seen[v] = true;
    }
  }

  static permutation identity(std::size_t n) {
    std::vector<element> img(n);
    std::iota(img.begin(), img.end(), element{0});
    return permutation(std::move(img));
  }

  std::size_t order() const noexcept { return image_.size(); }
  element operator()(element x) const { return image_[x]; }
  std::span<const element> image() const noexcept { return image_; }

  permutation inverse() const {
    std::vector<element> inv(image_.size());
    for (element x = 0; x < image_.size(); ++x) inv[image_[x]] = x;
    return permutation(std::move(inv));
  }

  /// Apply `this` first, then `next` (right-action convention, x S T).
  permutation then(const permutation& next) const {
    std::vector<element> img(image_.size());
    for (element x = 0; x < image_.size(); ++x) img[x] = next(image_[x]);
    return permutation(std::move(img));
  }

  bool is_identity() const noexcept {
    for (element x = 0; x < image_.size(); ++x) {
      if (image_[x] != x) return false;
    }
    return true;
  }

  /// Order in the symmetric group: lcm of the cycle lengths.
  std::size_t cycle_order() const {
    std::vector<bool> seen(image_.size(), false);
    std::size_t result = 1;
    for (element start = 0; start < image_.size(); ++start) {
      if (seen[start]) continue;
      std::size_t len = 0;
      for (element x = start; !seen[x]; x = image_[x]) {
        seen[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  auto operator<=>(const permutation&) const = default;

 private:
  std::vector<element> image_;
};

/// All permutations of {0..n-1} in lexicographic order.
inline std::vector<permutation> all_permutations(std::size_t n) {
  std::vector<element> img(n);
  std::iota(img.begin(), img.end(), element{0});
  std::vector<permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// A finite magma given by its operation table. Entry (row x, column y)
/// holds x * y, i.e. the result of y acting on x.
class magma {
 public:
  magma() = default;

  /// Flat row-major table of size n*n.
  magma(std::size_t n, std::vector<element> table) : order_(n), table_(std::move(table)) {
    if (n == 0) throw structure_error("magma: order must be positive");
    if (table_.size() != n * n) {
      throw structure_error("magma: table has " + std::to_string(table_.size()) +
                            " entries, expected " + std::to_string(n * n));
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] >= n) {
        throw structure_error("magma: entry out of range at row " + std::to_string(i / n) +
                              ", column " + std::to_string(i % n) + ": " +
                              std::to_string(table_[i]) + " >= " + std::to_string(n));
      }
    }
  }

  static magma from_rows(const std::vector<std::vector<element>>& rows) {
    const std::size_t n = rows.size();
    std::vector<element> flat;
    flat.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      if (rows[x].size() != n) {
        throw structure_error("magma: row " + std::to_string(x) + " has " +
                              std::to_string(rows[x].size()) + " entries, expected " +
                              std::to_string(n));
      }
      flat.insert(flat.end(), rows[x].begin(), rows[x].end());
    }
    return magma(n, std::move(flat));
  }

  template <typename F>
  static magma from_function(std::size_t n, F&& op) {
    std::vector<element> flat(n * n);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) flat[x * n + y] = static_cast<element>(op(x, y));
    }
    return magma(n, std::move(flat));
  }

  std::size_t order() const noexcept { return order_; }
  element operator()(element x, element y) const { return table_[x * order_ + y]; }
  std::span<const element> table() const noexcept { return table_; }

  /// Column y as a map x -> x * y. Only a permutation when the column is a bijection.
  std::vector<element> column(element y) const {
    std::vector<element> col(order_);
    for (element x = 0; x < order_; ++x) col[x] = (*this)(x, y);
    return col;
  }

  std::vector<std::vector<element>> rows() const {
    std::vector<std::vector<element>> out(order_);
    for (element x = 0; x < order_; ++x) {
      out[x].assign(table_.begin() + static_cast<std::ptrdiff_t>(x * order_),
                    table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * order_));
    }
    return out;
  }

  auto operator<=>(const magma&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<element> table_;
};

struct axiom_report {
  bool idempotent = false;
  bool right_invertible = false;
  bool right_self_distributive = false;
  bool is_rack = false;
  bool is_quandle = false;

  bool operator==(const axiom_report&) const = default;
};

inline bool is_idempotent(const magma& m) {
  for (element x = 0; x < m.order(); ++x) {
    if (m(x, x) != x) return false;
  }
  return true;
}

/// Index of the first column that is not a bijection, or order() if all are.
inline element first_non_invertible_column(const magma& m) {
  const std::size_t n = m.order();
  std::vector<bool> seen(n);
  for (element y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    for (element x = 0; x < n; ++x) {
      element v = m(x, y);
      if (seen[v]) return y;
      seen[v] = true;
    }
  }
  return n;
}

inline bool is_right_invertible(const magma& m) { return first_non_invertible_column(m) == m.order(); }

inline bool is_right_self_distributive(const magma& m) {
  const std::size_t n = m.order();
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      for (element z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(m(x, z), m(y, z))) return false;
      }
    }
  }
  return true;
}

inline axiom_report validate(const magma& m) {
  axiom_report r;
  r.idempotent = is_idempotent(m);
  r.right_invertible = is_right_invertible(m);
  r.right_self_distributive = is_right_self_distributive(m);
  r.is_rack = r.right_invertible && r.right_self_distributive;
  r.is_quandle = r.is_rack && r.idempotent;
  return r;
}

/// Table of the right inverse operation: x *̄ y = x S_y^{-1}.
inline magma inverse_table(const magma& m) {
  const std::size_t n = m.order();
  if (element bad = first_non_invertible_column(m); bad != n) {
    throw axiom_error("inverse_table: column " + std::to_string(bad) + " is not a permutation");
  }
  std::vector<element> inv(n * n);
  for (element y = 0; y < n; ++y) {
    for (element x = 0; x < n; ++x) inv[m(x, y) * n + y] = x;
  }
  return magma(n, std::move(inv));
}

/// A finite rack: a magma validated as right invertible and right
/// self-distributive, stored together with its inverse table.
class rack {
 public:
  explicit rack(magma primary) : primary_(std::move(primary)) {
    auto rep = validate(primary_);
    if (!rep.right_invertible) {
      throw axiom_error("not a rack: column " + std::to_string(first_non_invertible_column(primary_)) +
                        " is not a permutation");
    }
    if (!rep.right_self_distributive) throw axiom_error("not a rack: not right self-distributive");
    inverse_ = inverse_table(primary_);
    quandle_ = rep.idempotent;
  }

  std::size_t order() const noexcept { return primary_.order(); }
  bool is_quandle() const noexcept { return quandle_; }

  const magma& table(side s = side::primary) const noexcept {
    return s == side::primary ? primary_ : inverse_;
  }

  element op(element x, element y, side s = side::primary) const { return table(s)(x, y); }
  element operator()(element x, element y) const { return primary_(x, y); }

  /// The symmetry S_y : x -> x ▷ y.
  permutation symmetry(element y) const { return permutation(primary_.column(y)); }

  /// The rack with ▷ and ◁ exchanged.
  rack dual() const { return rack(inverse_, primary_, quandle_); }

  bool operator==(const rack& other) const { return primary_ == other.primary_; }

 private:
  rack(magma p, magma i, bool q) : primary_(std::move(p)), inverse_(std::move(i)), quandle_(q) {}

  magma primary_;
  magma inverse_;
  bool quandle_ = false;
};

/// Least n >= 1 with S_y^n = id for every y.
inline std::size_t exponent(const rack& r) {
  std::size_t n = 1;
  for (element y = 0; y < r.order(); ++y) n = std::lcm(n, r.symmetry(y).cycle_order());
  return n;
}

inline std::size_t exponent(const magma& m) { return exponent(rack(m)); }

/// Checks that ▷ and ◁ distribute over each other from the right.
inline bool mutual_distributivity_check(const rack& r) {
  const std::size_t n = r.order();
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      for (element z = 0; z < n; ++z) {
        using enum side;
        if (r.op(r.op(x, y, primary), z, inverse) !=
            r.op(r.op(x, z, inverse), r.op(y, z, inverse), primary)) {
          return false;
        }
        if (r.op(r.op(x, y, inverse), z, primary) !=
            r.op(r.op(x, z, primary), r.op(y, z, primary), inverse)) {
          return false;
        }
      }
    }
  }
  return true;
}

// Standard families.

inline magma trivial_table(std::size_t n) {
  return magma::from_function(n, [](element x, element) { return x; });
}

/// x ▷ y = 2y - x (mod n).
inline magma dihedral_table(std::size_t n) {
  return magma::from_function(n, [n](element x, element y) { return (2 * y + n - x) % n; });
}

/// x ▷ y = f(x).
inline magma constant_action_table(const permutation& f) {
  return magma::from_function(f.order(), [&f](element x, element) { return f(x); });
}

// Two operations on Z, x *1 y = 2x and x *2 y = floor(x / 2), that satisfy
// only one of the two inverse identities each. Neither is right
// invertible, so they have no finite-table form.

inline std::int64_t doubling_op(std::int64_t x, std::int64_t /*y*/) { return 2 * x; }

inline std::int64_t halving_op(std::int64_t x, std::int64_t /*y*/) {
  std::int64_t q = x / 2;
  if (x % 2 != 0 && x < 0) --q;
  return q;
}

}  // namespace quandle
