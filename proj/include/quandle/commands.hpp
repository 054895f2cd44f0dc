#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quandle/congruence.hpp"
#include "quandle/demos.hpp"
#include "quandle/enumerate.hpp"
#include "quandle/homomorphism.hpp"
#include "quandle/rack_io.hpp"
#include "quandle/weighted_average.hpp"

namespace quandle::cli {

using json = nlohmann::ordered_json;

/// Outcome of one command. An error carries an empty payload and at least
/// one diagnostic; `assertions_passed` is false when an ok command embeds
/// checks (demos) and one of them failed.
struct command_result {
  bool ok = true;
  json payload = json::object();
  std::vector<std::string> diagnostics;
  bool assertions_passed = true;

  int exit_code() const { return ok && assertions_passed ? 0 : 1; }

  json to_json() const {
    json j;
    j["status"] = ok ? "ok" : "error";
    j["payload"] = payload;
    j["diagnostics"] = diagnostics;
    return j;
  }

  static command_result error(std::string message) {
    command_result r;
    r.ok = false;
    r.payload = json::object();
    r.diagnostics.push_back(std::move(message));
    return r;
  }
};

/// Runs fn, turning any exception into an error result.
template <typename F>
command_result guarded(F&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return command_result::error(e.what());
  }
}

namespace detail {

inline json table_json(const magma& m) { return m.rows(); }

inline json blocks_json(const partition& p) { return p.blocks(); }

inline std::vector<element> parse_index_list(const std::string& text) {
  std::vector<element> out;
  if (text.empty()) return out;
  std::size_t from = 0;
  while (from <= text.size()) {
    std::size_t comma = text.find(',', from);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(from, comma - from);
    if (tok.empty() || tok.find_first_not_of("0123456789 ") != std::string::npos) {
      throw structure_error("bad index list '" + text + "'");
    }
    out.push_back(std::stoul(tok));
    from = comma + 1;
  }
  return out;
}

inline json quadruple_json(const quadruple& q) {
  return json::array({to_string(q.a), to_string(q.b), to_string(q.c), to_string(q.d)});
}

inline json checks_json(const std::vector<demo_check>& checks, bool& all_passed) {
  json arr = json::array();
  all_passed = true;
  for (const auto& c : checks) {
    arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all_passed = all_passed && c.passed;
  }
  return arr;
}

}  // namespace detail

inline command_result cmd_validate_table(const magma& m) {
  auto rep = validate(m);
  command_result r;
  r.payload["order"] = m.order();
  r.payload["idempotent"] = rep.idempotent;
  r.payload["right_invertible"] = rep.right_invertible;
  r.payload["right_self_distributive"] = rep.right_self_distributive;
  r.payload["is_rack"] = rep.is_rack;
  r.payload["is_quandle"] = rep.is_quandle;
  if (rep.is_rack) r.payload["exponent"] = exponent(rack(m));
  return r;
}

inline command_result cmd_validate(const std::string& path) {
  return guarded([&] { return cmd_validate_table(load_rack(path)); });
}

inline command_result cmd_inverse(const std::string& path) {
  return guarded([&] {
    auto inv = inverse_table(load_rack(path));
    command_result r;
    r.payload["order"] = inv.order();
    r.payload["table"] = detail::table_json(inv);
    return r;
  });
}

inline command_result cmd_enumerate(std::size_t n, bool quandles_only, bool up_to_iso) {
  return guarded([&] {
    auto racks = enumerate_racks(n, quandles_only, up_to_iso);
    command_result r;
    r.payload["order"] = n;
    r.payload["quandles_only"] = quandles_only;
    r.payload["up_to_iso"] = up_to_iso;
    r.payload["count"] = racks.size();
    json tables = json::array();
    for (const auto& m : racks) tables.push_back(detail::table_json(m));
    r.payload["racks"] = tables;
    return r;
  });
}

/// Full classified partition list, or one classification with `partition`.
inline command_result cmd_congruences(const std::string& path, const std::optional<std::string>& partition_literal) {
  return guarded([&] {
    rack rk(load_rack(path));
    command_result r;
    if (partition_literal) {
      auto p = partition::parse(*partition_literal, rk.order());
      r.payload = {{"blocks", detail::blocks_json(p)}, {"class", to_string(classify_relation(rk, p))}};
      return r;
    }
    if (rk.order() > max_congruence_order) {
      throw range_error("order too large: " + std::to_string(rk.order()) + " > " +
                        std::to_string(max_congruence_order));
    }
    json arr = json::array();
    for (const auto& e : enumerate_congruences(rk)) {
      arr.push_back({{"blocks", detail::blocks_json(e.relation)}, {"class", to_string(e.classification)}});
    }
    r.payload = arr;
    return r;
  });
}

inline command_result cmd_quotient(const std::string& path, const std::string& partition_literal) {
  return guarded([&] {
    rack rk(load_rack(path));
    auto p = partition::parse(partition_literal, rk.order());
    try {
      auto q = quotient(rk, p);
      command_result r;
      r.payload["order"] = q.table.order();
      r.payload["table"] = detail::table_json(q.table.table());
      r.payload["members"] = q.members;
      r.payload["is_quandle"] = q.table.is_quandle();
      return r;
    } catch (const not_congruence_error& e) {
      auto r = command_result::error(e.what());
      r.diagnostics.push_back("classification: " + std::string(to_string(e.classification())));
      return r;
    }
  });
}

inline command_result cmd_subrack(const std::string& path, const std::string& subset) {
  return guarded([&] {
    rack rk(load_rack(path));
    auto elems = detail::parse_index_list(subset);
    command_result r;
    r.payload["subset"] = elems;
    r.payload["is_subrack"] = is_subrack(rk, elems);
    return r;
  });
}

inline command_result cmd_hom_check(const std::string& domain, const std::string& codomain, const std::string& map) {
  return guarded([&] {
    rack r(load_rack(domain));
    rack s(load_rack(codomain));
    finite_map f(s.order(), detail::parse_index_list(map));
    command_result out;
    bool hom = is_homomorphism(f, r, s);
    out.payload["is_homomorphism"] = hom;
    if (hom) out.payload["kernel"] = detail::blocks_json(kernel_congruence(f, r, s));
    return out;
  });
}

inline command_result cmd_iso_check(const std::string& domain, const std::string& codomain, const std::string& map) {
  return guarded([&] {
    rack r(load_rack(domain));
    rack s(load_rack(codomain));
    finite_map f(s.order(), detail::parse_index_list(map));
    auto res = first_isomorphism(f, r, s);
    command_result out;
    out.payload["holds"] = res.holds;
    out.payload["quotient_order"] = res.quotient.table.order();
    out.payload["quotient_table"] = detail::table_json(res.quotient.table.table());
    out.payload["members"] = res.quotient.members;
    out.payload["image"] = res.image;
    out.payload["psi"] = res.induced.image();
    out.assertions_passed = res.holds;
    return out;
  });
}

struct tau_options {
  std::optional<std::string> subgroup;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

namespace detail {

inline json witness_json(const subgroup& d, const tau_weight& tau, const tau_options& opt, bool& all_ok,
                         const std::string* name = nullptr) {
  json w;
  if (name) w["name"] = *name;
  w["descriptor"] = d.to_string();
  auto status = congruence_status(d, tau);
  w["status"] = to_string(status);
  json half = json::object();
  json sampled = json::object();
  for (side s : {side::primary, side::inverse}) {
    const std::string key(to_string(s));
    if (respects(status, s)) {
      bool pass = sampled_relation_check(d, tau, s, opt.samples, opt.seed);
      sampled[key] = pass;
      all_ok = all_ok && pass;
    } else {
      auto q = find_half_witness(d, tau, s);
      all_ok = all_ok && q.has_value();
      if (q) half[key] = quadruple_json(*q);
    }
  }
  if (!half.empty()) w["half_witness"] = half;
  w["sampled"] = sampled;
  return w;
}

}  // namespace detail

inline command_result cmd_classify_tau(const std::string& tau_literal, const tau_options& opt = {}) {
  return guarded([&] {
    tau_weight tau(parse_rational(tau_literal));
    auto cls = classify_tau(tau);
    command_result r;
    bool all_ok = true;
    r.payload["tau"] = to_string(tau.value());
    r.payload["case"] = cls.case_number;
    r.payload["explanation"] = cls.explanation;
    json ws = json::array();
    for (const auto& w : cls.witnesses) ws.push_back(detail::witness_json(w.group, tau, opt, all_ok, &w.name));
    r.payload["witnesses"] = ws;
    if (opt.subgroup) {
      r.payload["subgroup"] = detail::witness_json(subgroup::parse(*opt.subgroup), tau, opt, all_ok);
    }
    r.assertions_passed = all_ok;
    return r;
  });
}

inline const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"b_ell", "b_quandle", "b0", "alexander"};
  return names;
}

inline command_result cmd_demo(const std::string& name, const demo_options& opt = {}) {
  return guarded([&] {
    std::vector<demo_check> checks;
    if (name == "b_ell") {
      checks = demo_b_ell(opt);
    } else if (name == "b_quandle") {
      checks = demo_b_quandle(opt);
    } else if (name == "b0") {
      checks = demo_b0(opt);
    } else if (name == "alexander") {
      checks = demo_alexander(opt);
    } else {
      throw structure_error("unknown demo '" + name + "' (expected b_ell, b_quandle, b0 or alexander)");
    }
    command_result r;
    bool all = true;
    r.payload["demo"] = name;
    r.payload["checks"] = detail::checks_json(checks, all);
    r.payload["all_passed"] = all;
    r.assertions_passed = all;
    return r;
  });
}

}  // namespace quandle::cli
