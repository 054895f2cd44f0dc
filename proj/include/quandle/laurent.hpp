#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quandle/common.hpp"

namespace quandle {

/// An integer Laurent polynomial in Z[t, t^-1], stored as (exponent,
/// coefficient) terms sorted by exponent with no zero coefficients. The
/// zero polynomial has no terms.
class laurent {
 public:
  using exponent_type = std::int64_t;
  using coefficient_type = std::int64_t;
  using term = std::pair<exponent_type, coefficient_type>;

  laurent() = default;

  laurent(coefficient_type constant) {  // NOLINT: implicit from integer constants
    if (constant != 0) terms_.emplace_back(0, constant);
  }

  static laurent monomial(coefficient_type c, exponent_type e) {
    laurent p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }

  static laurent t(exponent_type e = 1) { return monomial(1, e); }

  /// Terms may be unsorted, repeated or zero.
  static laurent from_terms(std::vector<term> ts) {
    std::sort(ts.begin(), ts.end());
    laurent p;
    for (const auto& [e, c] : ts) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
      } else {
        p.terms_.emplace_back(e, c);
      }
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  /// Parses a signed monomial list such as "t^2 - 3 + 2t^-1" or "-t + 4*t^3".
  static laurent parse(std::string_view text);

  const std::vector<term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  coefficient_type coefficient(exponent_type e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const term& a, exponent_type x) { return a.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
  }

  /// Lowest and highest exponent; only meaningful when nonzero.
  exponent_type min_exponent() const { return terms_.front().first; }
  exponent_type max_exponent() const { return terms_.back().first; }

  /// Multiply by t^k.
  laurent shifted(exponent_type k) const {
    laurent p = *this;
    for (auto& [e, c] : p.terms_) e += k;
    return p;
  }

  laurent operator-() const {
    laurent p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend laurent operator+(const laurent& a, const laurent& b) { return combine(a, b, 1); }
  friend laurent operator-(const laurent& a, const laurent& b) { return combine(a, b, -1); }

  friend laurent operator*(const laurent& a, const laurent& b) {
    std::vector<term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) ts.emplace_back(ea + eb, ca * cb);
    }
    return from_terms(std::move(ts));
  }

  laurent& operator+=(const laurent& o) { return *this = *this + o; }
  laurent& operator-=(const laurent& o) { return *this = *this - o; }

  std::string to_string() const;

  bool operator==(const laurent&) const = default;

 private:
  static laurent combine(const laurent& a, const laurent& b, coefficient_type sign) {
    laurent p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        p.terms_.emplace_back(b.terms_[j].first, sign * b.terms_[j].second);
        ++j;
      } else {
        coefficient_type c = a.terms_[i].second + sign * b.terms_[j].second;
        if (c != 0) p.terms_.emplace_back(a.terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<term> terms_;
};

inline std::string laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    const bool negative = c < 0;
    const coefficient_type mag = negative ? -c : c;
    if (it == terms_.rbegin()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += 't';
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

inline laurent laurent::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    return structure_error("polynomial '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), out);
    if (ec != std::errc{}) return false;
    pos = static_cast<std::size_t>(ptr - text.data());
    return true;
  };

  std::vector<term> ts;
  bool first = true;
  skip_space();
  if (pos == text.size()) throw fail("empty polynomial");
  while (true) {
    skip_space();
    coefficient_type sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    coefficient_type coef = 1;
    bool have_coef = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (!read_int(coef)) throw fail("bad coefficient");
      have_coef = true;
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_space();
        if (pos >= text.size() || text[pos] != 't') throw fail("expected 't' after '*'");
      }
    }
    exponent_type e = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (!read_int(e)) throw fail("bad exponent");
      }
    } else if (!have_coef) {
      throw fail("expected a coefficient or 't'");
    }
    ts.emplace_back(e, sign * coef);
    skip_space();
    if (pos == text.size()) break;
  }
  return from_terms(std::move(ts));
}

inline bool in_poly_ring(const laurent& p) { return p.is_zero() || p.min_exponent() >= 0; }

/// Sum of coefficients, p(1).
inline laurent::coefficient_type eval_at_one(const laurent& p) {
  laurent::coefficient_type s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

/// Exact quotient a / b in Z[t, t^-1] with integer coefficients, or nullopt.
/// Both sides are first multiplied by a power of t to make the lowest
/// exponent 0; ordinary long division in Z[t] follows.
inline std::optional<laurent> divide_exact(const laurent& a, const laurent& b) {
  if (b.is_zero()) throw structure_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return laurent{};
  const auto shift = a.min_exponent() - b.min_exponent();
  laurent rem = a.shifted(-a.min_exponent());
  const laurent div = b.shifted(-b.min_exponent());
  const auto lead_exp = div.max_exponent();
  const auto lead = div.coefficient(lead_exp);
  std::vector<laurent::term> quotient;
  while (!rem.is_zero() && rem.max_exponent() >= lead_exp) {
    const auto e = rem.max_exponent();
    const auto c = rem.coefficient(e);
    if (c % lead != 0) return std::nullopt;
    const laurent step = laurent::monomial(c / lead, e - lead_exp);
    quotient.emplace_back(e - lead_exp, c / lead);
    rem -= step * div;
  }
  if (!rem.is_zero()) return std::nullopt;
  return laurent::from_terms(std::move(quotient)).shifted(shift);
}

}  // namespace quandle
