#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/common.hpp"

namespace quandle {

/// An equivalence relation on {0..n-1}, stored as a restricted-growth
/// string: block_of[x] is the block of x, blocks numbered by first appearance.
class partition {
 public:
  partition() = default;

  /// Accepts any labelling; renumbers blocks by first appearance.
  explicit partition(const std::vector<std::size_t>& labels) : block_of_(labels.size()) {
    if (labels.empty()) throw structure_error("partition: order must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> block
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == labels[x]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[x], seen.size());
        block_of_[x] = seen.size() - 1;
      } else {
        block_of_[x] = it->second;
      }
    }
    count_ = seen.size();
  }

  static partition discrete(std::size_t n) {
    std::vector<std::size_t> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = i;
    return partition(l);
  }

  static partition single_block(std::size_t n) { return partition(std::vector<std::size_t>(n, 0)); }

  /// Blocks must be disjoint and cover {0..n-1}.
  static partition from_blocks(std::size_t n, const std::vector<std::vector<element>>& blocks) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw structure_error("partition: empty block");
      for (element x : blocks[b]) {
        if (x >= n) throw structure_error("partition: element " + std::to_string(x) + " out of range");
        if (labels[x] != unset) throw structure_error("partition: element " + std::to_string(x) + " repeated");
        labels[x] = b;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (labels[x] == unset) throw structure_error("partition: element " + std::to_string(x) + " missing");
    }
    return partition(labels);
  }

  /// Parses "0,2|1,3". When n is 0 the order is inferred as max element + 1.
  static partition parse(std::string_view text, std::size_t n = 0) {
    std::vector<std::vector<element>> blocks(1);
    std::size_t max_seen = 0;
    std::size_t pos = 0;
    bool expect_number = true;
    while (pos < text.size()) {
      char ch = text[pos];
      if (ch == ' ') {
        ++pos;
      } else if (ch == '|' || ch == ',') {
        if (expect_number) throw structure_error("partition literal: missing element before '" + std::string(1, ch) + "'");
        if (ch == '|') blocks.emplace_back();
        expect_number = true;
        ++pos;
      } else {
        element v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc{}) {
          throw structure_error("partition literal: unexpected character '" + std::string(1, ch) + "' at offset " +
                                std::to_string(pos));
        }
        if (!expect_number) throw structure_error("partition literal: missing separator at offset " + std::to_string(pos));
        blocks.back().push_back(v);
        max_seen = std::max(max_seen, v);
        pos = static_cast<std::size_t>(ptr - text.data());
        expect_number = false;
      }
    }
    if (expect_number) throw structure_error("partition literal: empty or trailing separator");
    return from_blocks(n == 0 ? max_seen + 1 : n, blocks);
  }

  std::size_t order() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return count_; }
  std::size_t block_of(element x) const { return block_of_[x]; }
  bool related(element x, element y) const { return block_of_[x] == block_of_[y]; }
  const std::vector<std::size_t>& labels() const noexcept { return block_of_; }

  std::vector<std::vector<element>> blocks() const {
    std::vector<std::vector<element>> out(count_);
    for (element x = 0; x < block_of_.size(); ++x) out[block_of_[x]].push_back(x);
    return out;
  }

  std::string to_string() const {
    std::string s;
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b > 0) s += '|';
      for (std::size_t i = 0; i < bs[b].size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(bs[b][i]);
      }
    }
    return s;
  }

  auto operator<=>(const partition&) const = default;

 private:
  std::vector<std::size_t> block_of_;
  std::size_t count_ = 0;
};

/// Every partition of {0..n-1}, in lexicographic restricted-growth-string order.
inline std::vector<partition> all_partitions(std::size_t n) {
  if (n == 0) throw structure_error("all_partitions: order must be positive");
  std::vector<partition> out;
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max of rgs[0..i]
  while (true) {
    out.emplace_back(rgs);
    // Increment the rightmost position that may still grow.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      rgs[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  return out;
}

}  // namespace quandle
