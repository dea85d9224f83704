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

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include "entangle/concurrence.hpp"
#include "entangle/invariants.hpp"
#include "entangle/state.hpp"

namespace entangle {

/// Schmidt coefficients squared, i.e. the eigenvalues of A A^dagger,
/// in descending order.
struct SchmidtSpectrum {
  std::vector<double> values;

  int dim() const noexcept { return static_cast<int>(values.size()); }
};

/// Leading coefficients of the characteristic polynomial of A A^dagger,
/// keyed by k. c_k is the elementary symmetric polynomial e_{N-k} of the
/// spectrum; only k = N-1 ... N-4 (and k >= 0) are produced, c_N = 1.
struct CharPolyCoeffs {
  int n = 0;
  std::map<int, double> c;

  double at(int k) const {
    if (k == n) return 1.0;
    auto it = c.find(k);
    if (it == c.end()) throw Error(ErrorCode::invalid_argument, "coefficient c_" + std::to_string(k) + " not produced");
    return it->second;
  }
};

/// Trigonometric solution for N = 3. lambdas[0] is the largest root,
/// lambdas[1] the smallest.
struct ClosedFormN3 {
  std::array<double, 3> lambdas{};
  double c3 = 0.0;
  double phi = 0.0;
};

inline SchmidtSpectrum schmidt_spectrum(const PureBipartiteState& state) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(reduced_density(state).matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::eigen_failure, "Hermitian eigensolver did not converge");
  SchmidtSpectrum out;
  const Eigen::VectorXd& ev = solver.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  for (double& v : out.values) {
    if (v < -tol::spectrum) {
      throw Error(ErrorCode::internal_numerical_error, "negative Schmidt weight " + std::to_string(v));
    }
    v = std::max(v, 0.0);
  }
  return out;
}

/// -sum Lambda log2 Lambda, with 0 log 0 = 0.
inline double entanglement_of_formation(const SchmidtSpectrum& spec) {
  double e = 0.0;
  for (double v : spec.values)
    if (v > 0.0) e -= v * std::log2(v);
  return std::max(e, 0.0);
}

inline double eof_of_state(const PureBipartiteState& state) { return entanglement_of_formation(schmidt_spectrum(state)); }

/// C_N of any pure state with this spectrum.
inline double concurrence_of_spectrum(const SchmidtSpectrum& spec) {
  double s1 = 0.0, s2 = 0.0;
  for (double v : spec.values) {
    s1 += v;
    s2 += v * v;
  }
  const double n = static_cast<double>(spec.dim());
  return detail::checked_sqrt(n / (n - 1.0) * (s1 * s1 - s2), "C_N of spectrum");
}

inline CharPolyCoeffs char_poly_coeffs(const InvariantVector& inv) {
  const int n = inv.dim();
  if (n < 2) throw Error(ErrorCode::incompatible_params, "need N >= 2");
  CharPolyCoeffs out;
  out.n = n;
  const double i0 = inv[0];
  const double i1 = inv[1];
  out.c[n - 1] = i0;
  out.c[n - 2] = 0.5 * (i0 * i0 - i1);
  if (n >= 3) {
    const double i2 = inv[2];
    out.c[n - 3] = (i0 * i0 * i0 + 2.0 * i2 - 3.0 * i0 * i1) / 6.0;
  }
  if (n >= 4) {
    const double i2 = inv[2];
    const double i3 = inv[3];
    out.c[n - 4] =
        (i0 * i0 * i0 * i0 - 6.0 * i0 * i0 * i1 + 8.0 * i0 * i2 + 3.0 * i1 * i1 - 6.0 * i3) / 24.0;
  }
  return out;
}

/// Roots of Lambda^3 - Lambda^2 + c1 Lambda - c0 with c1 = c_{N-2} and
/// c0 = c_{N-3}:
///   Lambda = 1/3 + (2/3) cos(phi/3 + 2 pi k/3) sqrt(1 - C_3^2),
///   C_3^2 = 3/2 (I_0^2 - I_1), B1 = 2 - 9 c1 + 27 c0,
///   B2 = |4 (3 c1 - 1)^3 + B1^2|, phi = atan2(sqrt(B2), B1) in [0, pi].
inline ClosedFormN3 eigenvalues_n3_closed_form(const InvariantVector& inv) {
  if (inv.dim() != 3) throw Error(ErrorCode::incompatible_params, "closed form needs N=3, got " + std::to_string(inv.dim()));
  const CharPolyCoeffs cp = char_poly_coeffs(inv);
  const double c1 = cp.at(1);
  const double c0 = cp.at(0);

  ClosedFormN3 out;
  const double c3_squared = 1.5 * (inv[0] * inv[0] - inv[1]);
  out.c3 = std::sqrt(std::clamp(c3_squared, 0.0, 1.0));
  if (std::abs(out.c3 - 1.0) <= tol::closed_form_degenerate) {
    out.lambdas = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return out;
  }

  const double b1 = 2.0 - 9.0 * c1 + 27.0 * c0;
  const double b2 = std::abs(4.0 * std::pow(3.0 * c1 - 1.0, 3) + b1 * b1);
  out.phi = std::atan2(std::sqrt(b2), b1);

  const double radius = std::sqrt(std::max(1.0 - c3_squared, 0.0));
  const double cs = std::cos(out.phi / 3.0);
  const double sn = std::sqrt(3.0) * std::sin(out.phi / 3.0);
  out.lambdas = {
      1.0 / 3.0 + 2.0 / 3.0 * cs * radius,
      1.0 / 3.0 - (cs + sn) * radius / 3.0,
      1.0 / 3.0 - (cs - sn) * radius / 3.0,
  };
  return out;
}

/// Closed form cross-checked against the eigendecomposition of the state.
inline ClosedFormN3 checked_closed_form_n3(const PureBipartiteState& state) {
  const ClosedFormN3 cf = eigenvalues_n3_closed_form(invariant_vector(state));
  const SchmidtSpectrum spec = schmidt_spectrum(state);
  std::array<double, 3> sorted = cf.lambdas;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (int k = 0; k < 3; ++k) {
    const double diff = std::abs(sorted[static_cast<std::size_t>(k)] - spec.values[static_cast<std::size_t>(k)]);
    if (diff > tol::closed_form_mismatch) {
      throw Error(ErrorCode::closed_form_mismatch, "closed form differs from eigendecomposition by " + std::to_string(diff));
    }
  }
  return cf;
}

}  // namespace entangle
