#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/common.hpp"
#include "quandle/rational.hpp"

namespace quandle {

/// Weight of a weighted average quandle Q_tau on the rationals, tau = p/q
/// in lowest terms with q > 0.
class tau_weight {
 public:
  explicit tau_weight(rational value) : value_(std::move(value)) {
    if (value_ == 0) throw axiom_error("weight tau must be nonzero");
  }

  const rational& value() const noexcept { return value_; }
  integer p() const { return num(value_); }
  integer q() const { return den(value_); }
  bool nontrivial() const { return value_ != 1; }
  tau_weight inverse() const { return tau_weight(1 / value_); }

  /// The weight of the operation on the given side: tau or tau^-1.
  rational on(side s) const { return s == side::primary ? value_ : rational(1 / value_); }

  bool operator==(const tau_weight&) const = default;

 private:
  rational value_;
};

/// x ▷ y = tau x + (1 - tau) y; the inverse side uses tau^-1.
inline rational wa_op(const rational& x, const rational& y, const tau_weight& tau, side s) {
  const rational t = tau.on(s);
  return t * x + (1 - t) * y;
}

/// A subgroup of Q of one of the forms {0}, Q, or g * Z[1/m] = {g k / m^l}.
///
/// Normalised so that equal subgroups compare equal: m is replaced by its
/// radical and g has every prime factor of m divided out.
class subgroup {
 public:
  enum class kind { zero, all, scaled };

  static subgroup zero() { return subgroup(kind::zero, 0, 1); }
  static subgroup all() { return subgroup(kind::all, 0, 1); }

  static subgroup scaled(const rational& g, const integer& m) {
    if (g <= 0) throw structure_error("subgroup: generator g must be positive");
    if (m < 1) throw structure_error("subgroup: m must be a positive integer");
    const integer rad = radical(m);
    integer n = strip_common_primes(num(g), rad);
    integer d = strip_common_primes(den(g), rad);
    return subgroup(kind::scaled, rational(n, d), rad);
  }

  /// Z[1/r] for a nonzero integer r.
  static subgroup localisation(const integer& r) {
    if (r == 0) throw structure_error("subgroup: D_r needs r != 0");
    return scaled(1, r < 0 ? integer(-r) : r);
  }

  static subgroup integers() { return scaled(1, 1); }

  /// "zero", "all", or "g:m" (e.g. "1:3" = Z[1/3], "2/7:3").
  static subgroup parse(std::string_view text) {
    if (text == "zero") return zero();
    if (text == "all") return all();
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw structure_error("subgroup literal '" + std::string(text) + "': expected zero, all, or g:m");
    }
    return scaled(parse_rational(text.substr(0, colon)), parse_integer(text.substr(colon + 1)));
  }

  kind tag() const noexcept { return kind_; }
  const rational& generator() const noexcept { return g_; }
  const integer& modulus() const noexcept { return m_; }

  std::string to_string() const {
    switch (kind_) {
      case kind::zero: return "zero";
      case kind::all: return "all";
      case kind::scaled: return quandle::to_string(g_) + ":" + m_.str();
    }
    return "?";
  }

  bool operator==(const subgroup&) const = default;

 private:
  subgroup(kind k, rational g, integer m) : kind_(k), g_(std::move(g)), m_(std::move(m)) {}

  kind kind_;
  rational g_;
  integer m_;
};

inline bool contains(const subgroup& d, const rational& x) {
  switch (d.tag()) {
    case subgroup::kind::zero: return x == 0;
    case subgroup::kind::all: return true;
    case subgroup::kind::scaled: return primes_divide(den(rational(x / d.generator())), d.modulus());
  }
  return false;
}

/// Whether rho * D is contained in D.
inline bool closed_under(const subgroup& d, const rational& rho) {
  if (rho == 0) throw structure_error("closed_under: multiplier must be nonzero");
  if (d.tag() != subgroup::kind::scaled) return true;
  return primes_divide(den(rho), d.modulus());
}

/// Classifies the coset relation x ~ y <=> y - x in D on Q_tau.
inline congruence_class congruence_status(const subgroup& d, const tau_weight& tau) {
  if (!tau.nontrivial()) throw axiom_error("trivial weighted average quandle (tau = 1)");
  return make_class(closed_under(d, tau.value()), closed_under(d, tau.inverse().value()));
}

struct quadruple {
  rational a, b, c, d;
};

/// For a side on which the coset relation of D fails to be a congruence,
/// returns a, b, c, d with c - a and d - b in D but (c op d) - (a op b) not
/// in D. Returns nullopt when that side is in fact a congruence.
inline std::optional<quadruple> find_half_witness(const subgroup& d, const tau_weight& tau, side failing) {
  if (!tau.nontrivial()) throw axiom_error("trivial weighted average quandle (tau = 1)");
  if (closed_under(d, tau.on(failing))) return std::nullopt;

  auto check = [&](const quadruple& w) {
    return contains(d, w.c - w.a) && contains(d, w.d - w.b) &&
           !contains(d, wa_op(w.c, w.d, tau, failing) - wa_op(w.a, w.b, tau, failing));
  };

  // Only scaled subgroups can fail; try (0, 0, g, 0) first.
  const rational g = d.generator();
  if (quadruple w{0, 0, g, 0}; check(w)) return w;
  const std::array<rational, 5> bases{0, 1, -1, rational(1, 2), 2};
  for (int mult = 1; mult <= 4; ++mult) {
    for (const auto& a : bases) {
      for (const auto& b : bases) {
        quadruple w{a, b, a + g * mult, b};
        if (check(w)) return w;
        w = quadruple{a, b, a, b + g * mult};
        if (check(w)) return w;
      }
    }
  }
  throw std::logic_error("find_half_witness: no witness found for a failing side");
}

/// Fixed-seed sampler for rationals and subgroup elements.
///
/// Element of g Z[1/m]: g k / m^l with k uniform in [-100, 100] and l
/// uniform in [0, 4]. Element of Q (and free rationals in general):
/// k / n with k uniform in [-100, 100], n uniform in [1, 100].
class rational_sampler {
 public:
  static constexpr std::int64_t coefficient_bound = 100;
  static constexpr int exponent_bound = 4;

  explicit rational_sampler(std::uint64_t seed) : rng_(seed) {}

  rational any() {
    std::uniform_int_distribution<std::int64_t> kd(-coefficient_bound, coefficient_bound);
    std::uniform_int_distribution<std::int64_t> nd(1, coefficient_bound);
    return rational(kd(rng_), nd(rng_));
  }

  rational element_of(const subgroup& d) {
    switch (d.tag()) {
      case subgroup::kind::zero: return 0;
      case subgroup::kind::all: return any();
      case subgroup::kind::scaled: {
        std::uniform_int_distribution<std::int64_t> kd(-coefficient_bound, coefficient_bound);
        std::uniform_int_distribution<int> ld(0, exponent_bound);
        integer denom = pow(d.modulus(), static_cast<unsigned>(ld(rng_)));
        return d.generator() * rational(integer(kd(rng_)), denom);
      }
    }
    return 0;
  }

 private:
  std::mt19937_64 rng_;
};

/// Draws `samples` quadruples with c = a + d1, d = b + d2 (d1, d2 in D) and
/// checks that (c op d) - (a op b) lies in D for the given side.
inline bool sampled_relation_check(const subgroup& d, const tau_weight& tau, side s, std::size_t samples,
                                   std::uint64_t seed) {
  rational_sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    rational a = rng.any();
    rational b = rng.any();
    rational c = a + rng.element_of(d);
    rational e = b + rng.element_of(d);
    if (!contains(d, wa_op(c, e, tau, s) - wa_op(a, b, tau, s))) return false;
  }
  return true;
}

/// The elements used to recover a difference set from a ▷-congruence: with
/// y = x + delta, u = (a - tau x) / (1 - tau) and v = (a - (1 - tau) x) / tau,
///   x ▷ u = a,  y ▷ u = a + tau delta,  v ▷ x = a,  v ▷ y = a + (1 - tau) delta.
struct difference_probe {
  rational x_on_u, y_on_u, v_on_x, v_on_y;
};

inline difference_probe probe_difference(const tau_weight& tau, const rational& x, const rational& delta,
                                         const rational& a) {
  if (!tau.nontrivial()) throw axiom_error("trivial weighted average quandle (tau = 1)");
  const rational& t = tau.value();
  const rational y = x + delta;
  const rational u = (a - t * x) / (1 - t);
  const rational v = (a - (1 - t) * x) / t;
  return {wa_op(x, u, tau, side::primary), wa_op(y, u, tau, side::primary), wa_op(v, x, tau, side::primary),
          wa_op(v, y, tau, side::primary)};
}

// Four-case classification of nontrivial Q_tau.

struct tau_witness {
  std::string name;  // "Z", "D_p", "D_q", "D_pq"
  subgroup group;
  congruence_class status;
  std::optional<quadruple> primary_failure;
  std::optional<quadruple> inverse_failure;
};

struct tau_classification {
  int case_number = 0;
  std::string explanation;
  std::vector<tau_witness> witnesses;
};

namespace detail {

inline integer abs_int(integer x) { return x < 0 ? integer(-x) : x; }

}  // namespace detail

/// Case 1: tau = -1. Case 2: 1/tau in Z. Case 3: tau in Z. Case 4: neither.
/// Each witness subgroup's status is recomputed by congruence_status and
/// compared against what the case analysis predicts.
inline tau_classification classify_tau(const tau_weight& tau) {
  if (!tau.nontrivial()) throw axiom_error("trivial weighted average quandle (tau = 1)");
  const integer p = detail::abs_int(tau.p());
  const integer q = tau.q();

  tau_classification out;
  if (tau.value() == -1) {
    out.case_number = 1;
    out.explanation = "tau = -1: tau = 1/tau, so the primary and inverse congruences coincide";
  } else if (p == 1) {
    out.case_number = 2;
    out.explanation =
        "1/tau is an integer: every primary congruence is an inverse congruence, not conversely";
  } else if (q == 1) {
    out.case_number = 3;
    out.explanation =
        "tau is an integer: every inverse congruence is a primary congruence, not conversely";
  } else {
    out.case_number = 4;
    out.explanation = "tau, 1/tau not integers: half congruences exist on both sides";
  }

  using enum congruence_class;
  auto expect = [&](bool primary, bool inverse) { return make_class(primary, inverse); };
  struct spec_row {
    const char* name;
    subgroup group;
    congruence_class predicted;
  };
  const spec_row rows[] = {
      {"Z", subgroup::integers(), expect(q == 1, p == 1)},
      {"D_p", subgroup::localisation(p), expect(q == 1, true)},
      {"D_q", subgroup::localisation(q), expect(true, p == 1)},
      {"D_pq", subgroup::localisation(p * q), both},
  };
  for (const auto& row : rows) {
    auto status = congruence_status(row.group, tau);
    if (status != row.predicted) {
      throw std::logic_error("classify_tau: status of " + std::string(row.name) + " is " +
                             std::string(to_string(status)) + ", case analysis predicts " +
                             std::string(to_string(row.predicted)));
    }
    out.witnesses.push_back({row.name, row.group, status, find_half_witness(row.group, tau, side::primary),
                             find_half_witness(row.group, tau, side::inverse)});
  }
  return out;
}

}  // namespace quandle
