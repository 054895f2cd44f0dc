#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "quandle/common.hpp"
#include "quandle/laurent.hpp"

namespace quandle {

/// Z[t, t^-1] as an Alexander quandle over itself:
/// f ▷ g = t f + (1 - t) g, f ◁ g = t^-1 f + (1 - t^-1) g.
inline laurent alexander_op(const laurent& f, const laurent& g, side s) {
  const laurent tt = laurent::t(s == side::primary ? 1 : -1);
  return tt * f + (laurent(1) - tt) * g;
}

/// The relation f ~ g iff g - f lies in Z[t] and (g - f)(1) is in {0, 1}
/// when f(1) is even, {0, -1} when f(1) is odd.
inline bool example_relation(const laurent& f, const laurent& g) {
  const laurent diff = g - f;
  if (!in_poly_ring(diff)) return false;
  const auto v = eval_at_one(diff);
  const bool even = eval_at_one(f) % 2 == 0;
  return v == 0 || v == (even ? 1 : -1);
}

/// D_A = { p in Z[t] : p(1) = 0 }.
inline bool dA_membership(const laurent& p) { return in_poly_ring(p) && eval_at_one(p) == 0; }

/// D_f = D_A ∪ (±1 + D_A), the sign being + for even f(1) and - for odd.
inline bool dF_membership(const laurent& f, const laurent& d) {
  const bool even = eval_at_one(f) % 2 == 0;
  return dA_membership(d) || dA_membership(d - laurent(even ? 1 : -1));
}

enum class ring_kind { poly, laurent_ring };

/// The principal submodule generated by h over Z[t] or Z[t, t^-1].
struct principal_submodule {
  laurent generator;
  ring_kind ring = ring_kind::poly;

  principal_submodule(laurent h, ring_kind r) : generator(std::move(h)), ring(r) {
    if (generator.is_zero()) throw structure_error("principal_submodule: generator must be nonzero");
  }

  bool contains(const laurent& p) const {
    auto q = divide_exact(p, generator);
    if (!q) return false;
    return ring == ring_kind::laurent_ring || in_poly_ring(*q);
  }

  std::string to_string() const {
    return "(" + generator.to_string() + ")" + (ring == ring_kind::poly ? "Z[t]" : "Z[t,t^-1]");
  }
};

/// f ~ g iff g - f lies in the submodule.
inline bool submodule_relation(const principal_submodule& m, const laurent& f, const laurent& g) {
  return m.contains(g - f);
}

/// Fixed-seed polynomial sampler: each exponent in [lo, hi] gets an
/// independent coefficient uniform in [-3, 3].
class laurent_sampler {
 public:
  static constexpr laurent::coefficient_type coefficient_bound = 3;

  explicit laurent_sampler(std::uint64_t seed) : rng_(seed) {}

  laurent operator()(laurent::exponent_type lo, laurent::exponent_type hi) {
    std::uniform_int_distribution<laurent::coefficient_type> cd(-coefficient_bound, coefficient_bound);
    std::vector<laurent::term> ts;
    for (auto e = lo; e <= hi; ++e) ts.emplace_back(e, cd(rng_));
    return laurent::from_terms(std::move(ts));
  }

  /// Element of D_A: a Z[t] polynomial with exponents in [0, 4] and its
  /// value at 1 subtracted from the constant term.
  laurent element_of_dA() {
    laurent p = (*this)(0, 4);
    return p - laurent(eval_at_one(p));
  }

  /// A random element of D_f.
  laurent element_of_dF(const laurent& f) {
    std::uniform_int_distribution<int> coin(0, 1);
    laurent d = element_of_dA();
    if (coin(rng_) == 1) d += laurent(eval_at_one(f) % 2 == 0 ? 1 : -1);
    return d;
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A quadruple (f, f', g, g') with f ~ f', g ~ g' under the given relation
/// whose images under the operation on `failing` are unrelated.
struct poly_quadruple {
  laurent f, f2, g, g2;
};

/// Seeded check that the example relation respects the operation on side s.
/// Returns the first violating quadruple found, if any.
inline std::optional<poly_quadruple> example_relation_violation(side s, std::size_t samples, std::uint64_t seed) {
  laurent_sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    laurent f = rng(-4, 4);
    laurent g = rng(-4, 4);
    laurent f2 = f + rng.element_of_dF(f);
    laurent g2 = g + rng.element_of_dF(g);
    if (!example_relation(alexander_op(f, g, s), alexander_op(f2, g2, s))) return poly_quadruple{f, f2, g, g2};
  }
  return std::nullopt;
}

/// Seeded check that the coset relation of a principal submodule respects the
/// operation on side s. Multipliers come from the submodule's own ring:
/// exponents [0, 4] for Z[t], [-4, 4] for Z[t, t^-1].
inline std::optional<poly_quadruple> submodule_relation_violation(const principal_submodule& m, side s,
                                                                   std::size_t samples, std::uint64_t seed) {
  laurent_sampler rng(seed);
  const laurent::exponent_type lo = m.ring == ring_kind::poly ? 0 : -4;
  for (std::size_t i = 0; i < samples; ++i) {
    laurent f = rng(-4, 4);
    laurent g = rng(-4, 4);
    laurent f2 = f + m.generator * rng(lo, 4);
    laurent g2 = g + m.generator * rng(lo, 4);
    if (!submodule_relation(m, alexander_op(f, g, s), alexander_op(f2, g2, s))) {
      return poly_quadruple{f, f2, g, g2};
    }
  }
  return std::nullopt;
}

}  // namespace quandle
