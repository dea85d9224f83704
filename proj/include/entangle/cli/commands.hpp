// Copyright 2026 The entangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "entangle/cli/state_io.hpp"
#include "entangle/concurrence.hpp"
#include "entangle/invariance_suite.hpp"
#include "entangle/invariants.hpp"
#include "entangle/local_unitary.hpp"
#include "entangle/separability.hpp"
#include "entangle/spectrum.hpp"

namespace entangle::cli {

using io::json;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 1;
inline constexpr int entangled = 3;
inline constexpr int indeterminate = 4;
inline constexpr int drift = 5;
}  // namespace exit_code

enum class Format { json, text };

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string output;
};

struct GenOptions {
  std::string kind;
  std::optional<int> n;
  std::optional<int> m;
  std::uint64_t seed = 0;
  std::string out_path;  // empty: output only
};

inline const std::vector<std::string>& analysis_names() {
  static const std::vector<std::string> names{"invariants", "concurrence", "schmidt", "eof", "charpoly"};
  return names;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void render_text(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) render_text(j[k], prefix + "[" + std::to_string(k) + "]", rows);
  } else if (j.is_number_float()) {
    rows.emplace_back(prefix, format_double(j.get<double>()));
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

inline std::string render(const json& j, Format format) {
  if (format == Format::json) return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  render_text(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [key, value] : rows) out += key + std::string(width - key.size() + 2, ' ') + value + "\n";
  return out;
}

inline CommandResult error_result(const std::string& code, const std::string& message) {
  json err = {{"error", {{"code", code}, {"message", message}}}};
  return {exit_code::input_error, err.dump(2) + "\n"};
}

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_result(std::string(to_string(e.code())), e.what());
  } catch (const json::exception& e) {
    return error_result("ParseError", e.what());
  }
}

inline json report_json(const ConcurrenceReport& r) {
  return {{"value", r.value}, {"route_invariant", r.route_invariant}, {"route_minors", r.route_minors}, {"discrepancy", r.discrepancy}};
}

inline std::string normalize_kind(std::string kind) {
  std::replace(kind.begin(), kind.end(), '-', '_');
  if (kind == "paper_5_6") kind = "paper_5_6_example";
  return kind;
}

}  // namespace detail

/// Writes a state file. Kinds: product, max_entangled, bell, ghz,
/// paper_5_6_example, random, random_product ('-' and '_' interchangeable).
inline CommandResult cmd_gen(const GenOptions& opt) {
  return detail::guarded([&]() -> CommandResult {
    const std::string kind = detail::normalize_kind(opt.kind);
    const Seed seed{opt.seed};
    std::optional<PureMultipartiteState> state;
    auto dims = [&](int n_default, int m_default) { return std::pair{opt.n.value_or(n_default), opt.m.value_or(m_default)}; };

    if (kind == "random" || kind == "random_product") {
      auto [n, m] = dims(2, 2);
      state = kind == "random" ? random_state(n, m, seed) : random_product_state(n, m, seed);
    } else {
      static const std::vector<std::pair<std::string, NamedState>> named{
          {"product", NamedState::product},     {"max_entangled", NamedState::max_entangled},
          {"bell", NamedState::bell},           {"ghz", NamedState::ghz},
          {"paper_5_6_example", NamedState::paper_5_6_example},
      };
      auto it = std::find_if(named.begin(), named.end(), [&](const auto& e) { return e.first == kind; });
      if (it == named.end()) throw Error(ErrorCode::incompatible_params, "unknown kind '" + opt.kind + "'");
      const bool three = it->second == NamedState::ghz || it->second == NamedState::paper_5_6_example;
      auto [n, m] = dims(2, three ? 3 : 2);
      state = make_named(it->second, n, m);
    }

    const std::string text = io::to_json(*state, kind).dump(2) + "\n";
    if (!opt.out_path.empty()) io::write_text_file(opt.out_path, text);
    return {exit_code::ok, text};
  });
}

inline CommandResult cmd_analyze(const std::string& in_path, const std::set<std::string>& what, Format format) {
  return detail::guarded([&]() -> CommandResult {
    for (const std::string& w : what) {
      if (std::find(analysis_names().begin(), analysis_names().end(), w) == analysis_names().end()) {
        throw Error(ErrorCode::invalid_argument, "unknown analysis '" + w + "'");
      }
    }
    const io::StateFile file = io::state_from_json(io::read_json_file(in_path));
    const PureMultipartiteState& state = file.state;
    auto wants = [&](const char* name) { return what.empty() || what.count(name) > 0; };

    json out;
    out["input"] = {{"parties", state.parties()}, {"dim", state.dim()}, {"label", file.label.value_or("")}};

    std::optional<PureBipartiteState> bi;
    if (state.parties() == 2) bi.emplace(state);
    const json skipped = {{"skipped", "requires parties=2"}};

    if (wants("invariants")) {
      json inv;
      json parts = json::object();
      for (const Bipartition& part : enumerate_bipartitions(state.parties())) parts[part.label()] = bipartition_invariant(state, part);
      inv["bipartitions"] = parts;
      if (bi) inv["I"] = invariant_vector(*bi).values;
      if (state.parties() == 3) {
        const TripartiteInvariants t = tripartite_invariants(state);
        inv["tripartite"] = {{"I0", t.i0}, {"I1", t.i1}, {"I2", t.i2}, {"I3", t.i3}};
      }
      out["invariants"] = inv;
    }
    if (wants("concurrence")) {
      json c;
      c["multipartite"] = detail::report_json(concurrence_multipartite(state));
      if (bi) c["bipartite"] = detail::report_json(concurrence_bipartite(*bi));
      if (state.parties() == 3) c["tripartite"] = detail::report_json(concurrence_tripartite(state));
      out["concurrence"] = c;
    }
    if (wants("schmidt")) {
      if (bi) {
        json s = {{"values", schmidt_spectrum(*bi).values}};
        if (bi->dim() == 3) {
          const ClosedFormN3 cf = checked_closed_form_n3(*bi);
          s["closed_form_n3"] = {{"lambdas", cf.lambdas}, {"C3", cf.c3}, {"phi", cf.phi}};
        }
        out["schmidt"] = s;
      } else {
        out["schmidt"] = skipped;
      }
    }
    if (wants("eof")) out["eof"] = bi ? json(eof_of_state(*bi)) : skipped;
    if (wants("charpoly")) {
      if (bi) {
        json cp = json::object();
        for (const auto& [k, v] : char_poly_coeffs(invariant_vector(*bi)).c) cp["c_" + std::to_string(k)] = v;
        out["charpoly"] = cp;
      } else {
        out["charpoly"] = skipped;
      }
    }
    return {exit_code::ok, detail::render(out, format)};
  });
}

inline json verdict_json(const SeparabilityVerdict& v) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"separable", v.separable},
          {"verdict", std::string(to_string(v.verdict))},
          {"decided_by", std::string(to_string(v.decided_by))},
          {"violated", std::string(to_string(v.violated))},
          {"theta", opt(v.theta)},
          {"mixing_value", opt(v.mixing_value)},
          {"ppt_agrees", opt(v.ppt_agrees)},
          {"ppt_min_eigenvalue", opt(v.ppt_min_eigenvalue)}};
}

inline CommandResult cmd_sepcheck(const std::string& in_path, bool with_ppt, Format format = Format::json) {
  return detail::guarded([&]() -> CommandResult {
    const RankTwoMixedState rho = io::rank_two_from_json(io::read_json_file(in_path));
    const SeparabilityVerdict v = separability_check(rho, with_ppt);
    const int code = v.verdict == Verdict::separable  ? exit_code::ok
                     : v.verdict == Verdict::entangled ? exit_code::entangled
                                                       : exit_code::indeterminate;
    return {code, detail::render(verdict_json(v), format)};
  });
}

inline CommandResult cmd_lutest(const std::string& in_path, int trials, std::uint64_t seed, Format format = Format::json) {
  return detail::guarded([&]() -> CommandResult {
    if (trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
    const io::StateFile file = io::state_from_json(io::read_json_file(in_path));
    const InvarianceReport report = invariance_suite(file.state, trials, Seed{seed});
    const bool passed = report.worst() <= tol::lu_drift;
    json out = {{"trials", trials},
                {"seed", seed},
                {"tolerance", tol::lu_drift},
                {"max_drift", report.max_drift},
                {"worst", report.worst()},
                {"passed", passed}};
    return {passed ? exit_code::ok : exit_code::drift, detail::render(out, format)};
  });
}

}  // namespace entangle::cli
