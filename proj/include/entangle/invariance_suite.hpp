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
#include <cmath>
#include <map>
#include <string>

#include "entangle/concurrence.hpp"
#include "entangle/invariants.hpp"
#include "entangle/local_unitary.hpp"
#include "entangle/spectrum.hpp"

namespace entangle {

/// Every quantity the library declares invariant under local unitaries,
/// keyed by a stable name.
inline std::map<std::string, double> declared_invariants(const PureMultipartiteState& state) {
  std::map<std::string, double> q;
  for (const Bipartition& part : enumerate_bipartitions(state.parties())) {
    q["I" + part.label()] = bipartition_invariant(state, part);
  }
  q["C_multipartite"] = concurrence_multipartite(state).value;

  if (state.parties() == 2) {
    const PureBipartiteState bi(state);
    const InvariantVector inv = invariant_vector(bi);
    for (int a = 0; a < inv.dim(); ++a) q["I_alpha[" + std::to_string(a) + "]"] = inv[a];
    q["C_bipartite"] = concurrence_bipartite(bi).value;
    const SchmidtSpectrum spec = schmidt_spectrum(bi);
    for (int k = 0; k < spec.dim(); ++k) q["schmidt[" + std::to_string(k) + "]"] = spec.values[static_cast<std::size_t>(k)];
    q["eof"] = entanglement_of_formation(spec);
  }
  if (state.parties() == 3) {
    const TripartiteInvariants t = tripartite_invariants(state);
    q["tripartite.I0"] = t.i0;
    q["tripartite.I1"] = t.i1;
    q["tripartite.I2"] = t.i2;
    q["tripartite.I3"] = t.i3;
    q["C_tripartite"] = concurrence_tripartite(state).value;
  }
  return q;
}

struct InvarianceReport {
  int trials = 0;
  std::map<std::string, double> max_drift;

  double worst() const {
    double w = 0.0;
    for (const auto& [name, d] : max_drift) w = std::max(w, d);
    return w;
  }
};

/// Trial t draws its local unitaries from derive_seed(seed, t), so the
/// report does not depend on the order trials run in.
inline InvarianceReport invariance_suite(const PureMultipartiteState& state, int trials, Seed seed) {
  if (trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  const std::map<std::string, double> reference = declared_invariants(state);
  InvarianceReport report;
  report.trials = trials;
  for (const auto& [name, value] : reference) report.max_drift[name] = 0.0;

  for (int t = 0; t < trials; ++t) {
    const LocalUnitaryTuple lus =
        random_local_unitaries(state.parties(), state.dim(), derive_seed(seed, static_cast<std::uint64_t>(t)));
    const std::map<std::string, double> moved = declared_invariants(apply_local(state, lus));
    for (const auto& [name, value] : moved) {
      double& worst = report.max_drift[name];
      worst = std::max(worst, std::abs(value - reference.at(name)));
    }
  }
  return report;
}

}  // namespace entangle
