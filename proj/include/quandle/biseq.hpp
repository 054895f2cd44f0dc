#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/common.hpp"

namespace quandle {

using bit = std::uint8_t;

enum class shift_direction { left, right };

/// A bi-infinite binary sequence (a_i), i in Z, that is constant below and
/// above some window:
///
///   a_i = left_tail         for i < start
///   a_i = word[i - start]   for start <= i < start + |word|
///   a_i = right_tail        for i >= start + |word|
///
/// Always held in canonical form: the word neither starts with left_tail nor
/// ends with right_tail, and a constant sequence has start = 0. Two values
/// denote the same sequence iff they compare equal.
class biseq {
 public:
  biseq() = default;

  biseq(bit left_tail, std::int64_t start, std::vector<bit> word, bit right_tail)
      : left_(left_tail), start_(start), word_(std::move(word)), right_(right_tail) {
    if (left_ > 1 || right_ > 1) throw structure_error("biseq: tails must be 0 or 1");
    for (bit b : word_) {
      if (b > 1) throw structure_error("biseq: word bits must be 0 or 1");
    }
    canonicalise();
  }

  static biseq constant(bit b) { return biseq(b, 0, {}, b); }

  /// Sequence equal to 1 exactly at the listed index.
  static biseq indicator(std::int64_t index) { return biseq(0, index, {1}, 0); }

  /// 1 for i < boundary, 0 for i >= boundary.
  static biseq step_down(std::int64_t boundary) { return biseq(1, boundary, {}, 0); }

  /// Parses "L<bit>:<start>:<word>:R<bit>", e.g. "L0:0:1:R0". The start
  /// field may be empty when the word is empty (it then defaults to 0), and
  /// constants may be written "L1::R1".
  static biseq parse(std::string_view text) {
    auto fail = [&](const std::string& why) {
      return structure_error("biseq literal '" + std::string(text) + "': " + why);
    };
    std::vector<std::string_view> parts;
    std::size_t from = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ':') {
        parts.push_back(text.substr(from, i - from));
        from = i + 1;
      }
    }
    // "L<bit>::R<bit>" is shorthand for an empty word with no start.
    if (parts.size() == 3 && parts[1].empty()) parts = {parts[0], {}, {}, parts[2]};
    if (parts.size() != 4) throw fail("expected four ':'-separated fields");
    auto tail = [&](std::string_view p, char tag) -> bit {
      if (p.size() != 2 || p[0] != tag || (p[1] != '0' && p[1] != '1')) {
        throw fail(std::string("tail field must be ") + tag + "0 or " + tag + "1");
      }
      return static_cast<bit>(p[1] - '0');
    };
    bit l = tail(parts[0], 'L');
    bit r = tail(parts[3], 'R');
    std::vector<bit> word;
    for (char c : parts[2]) {
      if (c != '0' && c != '1') throw fail("word must consist of 0 and 1");
      word.push_back(static_cast<bit>(c - '0'));
    }
    std::int64_t start = 0;
    if (!parts[1].empty()) {
      auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), start);
      if (ec != std::errc{} || ptr != parts[1].data() + parts[1].size()) throw fail("bad start index");
    } else if (!word.empty()) {
      throw fail("start index required when the word is nonempty");
    }
    return biseq(l, start, std::move(word), r);
  }

  bit left_tail() const noexcept { return left_; }
  bit right_tail() const noexcept { return right_; }
  std::int64_t start() const noexcept { return start_; }
  /// One past the last word index; the right tail begins here.
  std::int64_t end() const noexcept { return start_ + static_cast<std::int64_t>(word_.size()); }
  const std::vector<bit>& word() const noexcept { return word_; }
  bool is_constant() const noexcept { return word_.empty() && left_ == right_; }

  bit at(std::int64_t i) const {
    if (i < start_) return left_;
    if (i >= end()) return right_;
    return word_[static_cast<std::size_t>(i - start_)];
  }

  /// Shift by k places to the left: (l^k(a))_i = a_{i+k}. Negative k shifts right.
  biseq shifted_left(std::int64_t k) const {
    if (is_constant()) return *this;
    biseq out = *this;
    out.start_ -= k;
    return out;
  }

  std::string to_string() const {
    std::string s = "L" + std::to_string(left_) + ":";
    if (is_constant()) return s + ":R" + std::to_string(right_);
    s += std::to_string(start_) + ":";
    for (bit b : word_) s += static_cast<char>('0' + b);
    s += ":R" + std::to_string(right_);
    return s;
  }

  bool operator==(const biseq&) const = default;

 private:
  void canonicalise() {
    std::size_t lead = 0;
    while (lead < word_.size() && word_[lead] == left_) ++lead;
    if (lead > 0) {
      word_.erase(word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(lead));
      start_ += static_cast<std::int64_t>(lead);
    }
    while (!word_.empty() && word_.back() == right_) word_.pop_back();
    if (is_constant()) start_ = 0;
  }

  bit left_ = 0;
  std::int64_t start_ = 0;
  std::vector<bit> word_;
  bit right_ = 0;
};

/// l(a)_i = a_{i+1}; r(a)_i = a_{i-1}.
inline biseq shift(const biseq& a, shift_direction d) {
  return a.shifted_left(d == shift_direction::left ? 1 : -1);
}

}  // namespace quandle
