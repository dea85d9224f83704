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

#include <cmath>
#include <string>
#include <vector>

#include "entangle/state.hpp"

namespace entangle {

/// Local-unitary invariants I_0 ... I_{N-1} of a bipartite pure state,
/// I_alpha = Tr[(A A^dagger)^(alpha+1)].
struct InvariantVector {
  std::vector<double> values;

  int dim() const noexcept { return static_cast<int>(values.size()); }
  double operator[](int alpha) const { return values[static_cast<std::size_t>(alpha)]; }
};

struct TripartiteInvariants {
  double i0 = 0.0;
  double i1 = 0.0;  // third index exchanged: purity of party 3
  double i2 = 0.0;  // second index exchanged: purity of party 2
  double i3 = 0.0;  // first index exchanged: purity of party 1
};

namespace detail {

inline double real_trace(Complex tr, const char* what) {
  if (std::abs(tr.imag()) > tol::real_cast) {
    throw Error(ErrorCode::internal_numerical_error,
                std::string(what) + " has imaginary residue " + std::to_string(tr.imag()));
  }
  return tr.real();
}

inline double squared_norm(std::span<const Complex> amps) {
  double s = 0.0;
  for (const Complex& a : amps) s += std::norm(a);
  return s;
}

}  // namespace detail

inline InvariantVector invariant_vector(const PureBipartiteState& state) {
  const Matrix rho = reduced_density(state).matrix;
  InvariantVector out;
  out.values.reserve(static_cast<std::size_t>(state.dim()));
  Matrix power = rho;
  for (int alpha = 0; alpha < state.dim(); ++alpha) {
    if (alpha > 0) power = power * rho;
    out.values.push_back(detail::real_trace(power.trace(), "Tr(AA^dagger)^k"));
  }
  return out;
}

inline double invariant_I(const PureBipartiteState& state, int alpha) {
  if (alpha < 0 || alpha >= state.dim()) {
    throw Error(ErrorCode::alpha_out_of_range,
                "alpha=" + std::to_string(alpha) + " not in [0, " + std::to_string(state.dim() - 1) + "]");
  }
  const Matrix rho = reduced_density(state).matrix;
  Matrix power = rho;
  for (int k = 0; k < alpha; ++k) power = power * rho;
  return detail::real_trace(power.trace(), "Tr(AA^dagger)^k");
}

/// I_{alpha beta} for the split `part` | complement: the purity of either
/// reduction, evaluated on the Gram matrix of the smaller side.
inline double bipartition_invariant(const PureMultipartiteState& state, const Bipartition& part) {
  const Matrix psi = matricize(state, part);
  const Matrix gram = psi.rows() <= psi.cols() ? Matrix(psi * psi.adjoint()) : Matrix(psi.adjoint() * psi);
  return detail::real_trace((gram * gram).trace(), "bipartition invariant");
}

inline TripartiteInvariants tripartite_invariants(const PureMultipartiteState& state) {
  if (state.parties() != 3) {
    throw Error(ErrorCode::wrong_party_count, "tripartite invariants need M=3, got " + std::to_string(state.parties()));
  }
  return TripartiteInvariants{
      detail::squared_norm(state.amplitudes()),
      bipartition_invariant(state, Bipartition(3, {0, 1})),
      bipartition_invariant(state, Bipartition(3, {0, 2})),
      bipartition_invariant(state, Bipartition(3, {0})),
  };
}

}  // namespace entangle
