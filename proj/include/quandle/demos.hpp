#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quandle/alexander.hpp"
#include "quandle/shift_quandle.hpp"

namespace quandle {

/// One asserted (in)equality reported by a demo.
struct demo_check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct demo_options {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::int64_t b0_window = 20;
};

namespace detail {

inline std::string seq(const biseq& a) { return a.to_string(); }

}  // namespace detail

/// The constant action rack B_l: ~ respects l but not r.
inline std::vector<demo_check> demo_b_ell(const demo_options& opt) {
  using detail::seq;
  const auto w = make_half_congruence_witnesses();
  const biseq ra = shift(w.zero, shift_direction::right);
  const biseq rb = shift(w.b, shift_direction::right);
  std::vector<demo_check> out;
  out.push_back({"a ~ b", rel_tilde(w.zero, w.b), "a = " + seq(w.zero) + ", b = " + seq(w.b)});
  out.push_back({"r(a) !~ r(b)", !rel_tilde(ra, rb),
                 "(r(a))_0 = " + std::to_string(ra.at(0)) + ", (r(b))_0 = " + std::to_string(rb.at(0))});

  biseq_sampler rng(opt.seed);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    biseq a = rng();
    biseq b = rng.tilde_partner(a);
    if (!rel_tilde(a, b) || !rel_tilde(shift(a, shift_direction::left), shift(b, shift_direction::left))) ++failures;
  }
  out.push_back({"a ~ b implies l(a) ~ l(b) (sampled)", failures == 0,
                 std::to_string(opt.samples) + " samples, " + std::to_string(failures) + " failures"});
  return out;
}

/// The quandle (B, ▶): ~ is a ▶-congruence but not a ◀-congruence.
inline std::vector<demo_check> demo_b_quandle(const demo_options& opt) {
  using detail::seq;
  const auto w = make_half_congruence_witnesses();
  const biseq r_alpha = shift(w.alpha, shift_direction::right);
  const biseq r_beta = shift(w.beta, shift_direction::right);
  const biseq alpha_gamma = bq_op(w.alpha, w.gamma, side::inverse);
  const biseq beta_gamma = bq_op(w.beta, w.gamma, side::inverse);

  std::vector<demo_check> out;
  out.push_back({"alpha ~ beta", rel_tilde(w.alpha, w.beta), seq(w.alpha) + " ~ " + seq(w.beta)});
  out.push_back({"alpha <| gamma = r(alpha)", alpha_gamma == r_alpha, seq(alpha_gamma)});
  out.push_back({"beta <| gamma = r(beta)", beta_gamma == r_beta, seq(beta_gamma)});
  out.push_back({"r(alpha) !~ r(beta)", !rel_tilde(r_alpha, r_beta), seq(r_alpha) + " vs " + seq(r_beta)});
  out.push_back({"[r(alpha)] and [r(beta)] both solve X |> [gamma] = [alpha]",
                 rel_tilde(bq_op(r_alpha, w.gamma, side::primary), w.alpha) &&
                     rel_tilde(bq_op(r_beta, w.gamma, side::primary), w.alpha) && !rel_tilde(r_alpha, r_beta),
                 "two distinct classes solve the same equation"});

  biseq_sampler rng(opt.seed);
  std::size_t axiom_failures = 0;
  std::size_t congruence_failures = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    biseq a = rng(), b = rng(), c = rng();
    using enum side;
    bool ok = bq_op(a, a, primary) == a && bq_op(bq_op(a, b, primary), b, inverse) == a &&
              bq_op(bq_op(a, b, inverse), b, primary) == a &&
              bq_op(bq_op(a, b, primary), c, primary) ==
                  bq_op(bq_op(a, c, primary), bq_op(b, c, primary), primary);
    if (!ok) ++axiom_failures;
    biseq a2 = rng.tilde_partner(a), b2 = rng.tilde_partner(b);
    if (!rel_tilde(bq_op(a, b, primary), bq_op(a2, b2, primary))) ++congruence_failures;
  }
  out.push_back({"quandle axioms (sampled)", axiom_failures == 0,
                 std::to_string(opt.samples) + " triples, " + std::to_string(axiom_failures) + " failures"});
  out.push_back({"~ respects |> (sampled)", congruence_failures == 0,
                 std::to_string(opt.samples) + " quadruples, " + std::to_string(congruence_failures) + " failures"});
  return out;
}

/// Elements a^k, b^k (|k| <= window) and c of the finitely presented quandle.
inline std::vector<b0_element> b0_window(std::int64_t window) {
  std::vector<b0_element> out;
  for (std::int64_t k = -window; k <= window; ++k) {
    out.push_back(b0_element::a(k));
    out.push_back(b0_element::b(k));
  }
  out.push_back(b0_element::c());
  return out;
}

/// The normal-form model of the presented quandle and its embedding in (B, ▶).
inline std::vector<demo_check> demo_b0(const demo_options& opt) {
  const auto elems = b0_window(opt.b0_window);
  // Products may leave the window (a^20 ▷ c = a^21); b0_op is total, so
  // they are evaluated exactly rather than truncated.
  std::size_t axiom_failures = 0;
  for (const auto& u : elems) {
    using enum side;
    if (b0_op(u, u, primary) != u) ++axiom_failures;
    for (const auto& v : elems) {
      if (b0_op(b0_op(u, v, primary), v, inverse) != u) ++axiom_failures;
      if (b0_op(b0_op(u, v, inverse), v, primary) != u) ++axiom_failures;
      for (const auto& x : elems) {
        auto lhs = b0_op(b0_op(u, v, primary), x, primary);
        if (lhs != b0_op(b0_op(u, x, primary), b0_op(v, x, primary), primary)) ++axiom_failures;
      }
    }
  }
  std::size_t hom_failures = 0;
  for (const auto& u : elems) {
    for (const auto& v : elems) {
      for (side s : {side::primary, side::inverse}) {
        if (embed_b0(b0_op(u, v, s)) != bq_op(embed_b0(u), embed_b0(v), s)) ++hom_failures;
      }
    }
  }
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (embed_b0(elems[i]) == embed_b0(elems[j])) ++collisions;
    }
  }
  const std::string window = "|k| <= " + std::to_string(opt.b0_window) + ", " + std::to_string(elems.size()) + " elements";
  return {
      {"quandle axioms on normal forms", axiom_failures == 0, window + ", " + std::to_string(axiom_failures) + " failures"},
      {"embedding is a homomorphism (both operations)", hom_failures == 0,
       window + ", " + std::to_string(hom_failures) + " failures"},
      {"embedding is injective", collisions == 0, window + ", " + std::to_string(collisions) + " collisions"},
  };
}

/// The Z[t, t^-1] example relation and its difference sets.
inline std::vector<demo_check> demo_alexander(const demo_options& opt) {
  std::vector<demo_check> out;
  auto primary = example_relation_violation(side::primary, opt.samples, opt.seed);
  out.push_back({"example relation respects |> (sampled)", !primary.has_value(),
                 std::to_string(opt.samples) + " quadruples"});

  // D_f depends on the parity of f(1): +1 in D_0, -1 in D_1.
  const laurent zero, one(1);
  out.push_back({"D_0 != D_1", dF_membership(zero, 1) && !dF_membership(zero, -1) && dF_membership(one, -1) &&
                                   !dF_membership(one, 1),
                 "+1 in D_0 only, -1 in D_1 only"});

  auto inverse = example_relation_violation(side::inverse, opt.samples, opt.seed);
  std::string detail = "none found at this scale";
  if (inverse) {
    detail = "f = " + inverse->f.to_string() + ", f' = " + inverse->f2.to_string() + ", g = " +
             inverse->g.to_string() + ", g' = " + inverse->g2.to_string();
  }
  // Reported, not asserted: the inverse direction is an empirical question.
  out.push_back({"example relation vs <| (informational): violation " + std::string(inverse ? "found" : "not found"),
                 true, detail});

  for (const auto& h : {laurent(2), laurent::parse("t - 1"), laurent::parse("t^2 + 1")}) {
    for (ring_kind rk : {ring_kind::poly, ring_kind::laurent_ring}) {
      principal_submodule m(h, rk);
      bool rt = !submodule_relation_violation(m, side::primary, opt.samples, opt.seed);
      out.push_back({"submodule " + m.to_string() + " respects |> (sampled)", rt, std::to_string(opt.samples) + " quadruples"});
      auto lt = submodule_relation_violation(m, side::inverse, opt.samples, opt.seed);
      if (rk == ring_kind::laurent_ring) {
        out.push_back({"submodule " + m.to_string() + " respects <| (sampled)", !lt.has_value(),
                       std::to_string(opt.samples) + " quadruples"});
      } else {
        out.push_back({"submodule " + m.to_string() + " vs <| (informational): violation " +
                           std::string(lt ? "found" : "not found"),
                       true, lt ? "f' - f = " + (lt->f2 - lt->f).to_string() + ", g' - g = " + (lt->g2 - lt->g).to_string()
                                : "none found at this scale"});
      }
    }
  }
  return out;
}

}  // namespace quandle
