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

// JSON state files.
//
// A pure state is an object
//   {"parties": M, "dim": N, "amplitudes": [{"re": x, "im": y}, ...], "label": "..."}
// with N^M amplitudes row-major, party 1 slowest; "label" is optional.
// A rank-2 mixed state is {"p": p, "E1": <state>, "E2": <state>} where both
// embedded states have parties = 2.

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "entangle/separability.hpp"
#include "entangle/state.hpp"

namespace entangle::io {

using nlohmann::json;

struct StateFile {
  PureMultipartiteState state;
  std::optional<std::string> label;
};

namespace detail {

inline Error field_error(const std::string& field, const std::string& what) {
  return Error(ErrorCode::parse_error, "field '" + field + "': " + what);
}

inline const json& require(const json& obj, const std::string& key, const std::string& ctx) {
  if (!obj.is_object()) throw field_error(ctx.empty() ? "<root>" : ctx, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw field_error(ctx.empty() ? key : ctx + "." + key, "missing");
  return *it;
}

inline int require_int(const json& obj, const std::string& key, const std::string& ctx) {
  const json& v = require(obj, key, ctx);
  if (!v.is_number_integer()) throw field_error(ctx.empty() ? key : ctx + "." + key, "expected an integer");
  return v.get<int>();
}

inline double require_number(const json& obj, const std::string& key, const std::string& ctx) {
  const json& v = require(obj, key, ctx);
  if (!v.is_number()) throw field_error(ctx.empty() ? key : ctx + "." + key, "expected a number");
  return v.get<double>();
}

}  // namespace detail

inline json to_json(const PureMultipartiteState& state, const std::optional<std::string>& label = std::nullopt) {
  json amps = json::array();
  for (const Complex& a : state.amplitudes()) amps.push_back({{"re", a.real()}, {"im", a.imag()}});
  json j = {{"parties", state.parties()}, {"dim", state.dim()}, {"amplitudes", std::move(amps)}};
  if (label) j["label"] = *label;
  return j;
}

inline json to_json(const PureBipartiteState& state) { return to_json(state.to_multipartite()); }

inline StateFile state_from_json(const json& j, const std::string& ctx = "") {
  const int parties = detail::require_int(j, "parties", ctx);
  const int dim = detail::require_int(j, "dim", ctx);
  const std::string amps_ctx = ctx.empty() ? "amplitudes" : ctx + ".amplitudes";
  const json& amps = detail::require(j, "amplitudes", ctx);
  if (!amps.is_array()) throw detail::field_error(amps_ctx, "expected an array");
  std::vector<Complex> values;
  values.reserve(amps.size());
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const std::string elem = amps_ctx + "[" + std::to_string(k) + "]";
    values.emplace_back(detail::require_number(amps[k], "re", elem), detail::require_number(amps[k], "im", elem));
  }
  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw detail::field_error(ctx.empty() ? "label" : ctx + ".label", "expected a string");
    label = j["label"].get<std::string>();
  }
  return StateFile{PureMultipartiteState(parties, dim, std::move(values)), std::move(label)};
}

inline RankTwoMixedState rank_two_from_json(const json& j) {
  const double p = detail::require_number(j, "p", "");
  auto vec = [&](const char* key) {
    StateFile f = state_from_json(detail::require(j, key, ""), key);
    if (f.state.parties() != 2) throw detail::field_error(std::string(key) + ".parties", "eigenvectors must be bipartite");
    return PureBipartiteState(f.state);
  };
  return RankTwoMixedState(p, vec("E1"), vec("E2"));
}

inline json to_json(const RankTwoMixedState& rho) {
  return {{"p", rho.p()}, {"E1", to_json(rho.e1())}, {"E2", to_json(rho.e2())}};
}

/// Parse errors carry nlohmann's line/column context.
inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace entangle::io
