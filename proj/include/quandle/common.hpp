#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quandle {

using element = std::size_t;

/// Which of the two rack operations is meant: the primary operation x ▷ y
/// or its right inverse x ◁ y.
enum class side { primary, inverse };

constexpr side opposite(side s) noexcept {
  return s == side::primary ? side::inverse : side::primary;
}

constexpr std::string_view to_string(side s) noexcept {
  return s == side::primary ? "primary" : "inverse";
}

/// Classification of an equivalence relation against the two rack
/// operations. right_only / left_only are the half congruences.
enum class congruence_class { both, right_only, left_only, neither };

constexpr congruence_class make_class(bool respects_primary, bool respects_inverse) noexcept {
  if (respects_primary && respects_inverse) return congruence_class::both;
  if (respects_primary) return congruence_class::right_only;
  if (respects_inverse) return congruence_class::left_only;
  return congruence_class::neither;
}

constexpr bool respects(congruence_class c, side s) noexcept {
  if (c == congruence_class::both) return true;
  if (c == congruence_class::neither) return false;
  return (c == congruence_class::right_only) == (s == side::primary);
}

/// Swaps right_only and left_only; used for dual racks.
constexpr congruence_class dual(congruence_class c) noexcept {
  switch (c) {
    case congruence_class::right_only: return congruence_class::left_only;
    case congruence_class::left_only: return congruence_class::right_only;
    default: return c;
  }
}

constexpr std::string_view to_string(congruence_class c) noexcept {
  switch (c) {
    case congruence_class::both: return "Both";
    case congruence_class::right_only: return "RightOnly";
    case congruence_class::left_only: return "LeftOnly";
    case congruence_class::neither: return "Neither";
  }
  return "?";
}

/// Malformed input: a table entry out of range, a bad literal, mismatched
/// dimensions. Distinct from an axiom simply being false.
class structure_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but lacks a property the operation requires
/// (e.g. a rack was expected).
class axiom_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An argument lies outside the supported range of an operation.
class range_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace quandle
