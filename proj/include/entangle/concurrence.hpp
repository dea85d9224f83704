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

#include <Eigen/SVD>

#include <cmath>
#include <string>
#include <vector>

#include "entangle/state.hpp"

namespace entangle {

/// Generalized concurrence evaluated by two independent routes: from the
/// biquadratic invariants, and from the literal sum of squared 2x2 minors.
struct ConcurrenceReport {
  double value = 0.0;  // == route_invariant
  double route_invariant = 0.0;
  double route_minors = 0.0;
  double discrepancy = 0.0;
};

namespace detail {

inline double checked_sqrt(double radicand, const char* what) {
  if (radicand < -tol::radicand) {
    throw Error(ErrorCode::internal_numerical_error,
                std::string(what) + ": negative radicand " + std::to_string(radicand));
  }
  return std::sqrt(std::max(radicand, 0.0));
}

inline ConcurrenceReport make_report(double by_invariants, double by_minors) {
  ConcurrenceReport r{by_invariants, by_invariants, by_minors, std::abs(by_invariants - by_minors)};
  if (r.discrepancy > tol::route_agreement) {
    throw Error(ErrorCode::internal_numerical_error,
                "concurrence routes disagree by " + std::to_string(r.discrepancy));
  }
  return r;
}

/// I_0^2 - Tr[(psi psi^dagger)^2] for the split psi encodes, evaluated as
/// 2 sum_{i<j} s_i^2 s_j^2 over the singular values of psi. No cancellation:
/// product states come out near 1e-32, not 1e-16.
inline double purity_gap(const Matrix& psi) {
  Eigen::JacobiSVD<Matrix> svd(psi);
  const Eigen::VectorXd& s = svd.singularValues();
  double gap = 0.0;
  double prefix = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const double w = s(k) * s(k);
    gap += w * prefix;
    prefix += w;
  }
  return 2.0 * gap;
}

/// sum over all ordered (r, r', c, c') of |m(r,c) m(r',c') - m(r,c') m(r',c)|^2.
/// Each unordered minor appears twice in each index pair. Products are
/// spelled out in real arithmetic; std::complex multiplication carries
/// NaN recovery that dominates the runtime of this loop.
inline double minor_sum(const Matrix& m) {
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  const RowMajor re = m.real();
  const RowMajor im = m.imag();
  double total = 0.0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double* r_re = re.row(r).data();
    const double* r_im = im.row(r).data();
    for (Eigen::Index rp = 0; rp < rows; ++rp) {
      const double* rp_re = re.row(rp).data();
      const double* rp_im = im.row(rp).data();
      for (Eigen::Index c = 0; c < cols; ++c) {
        const double ar = r_re[c], ai = r_im[c];
        const double br = rp_re[c], bi = rp_im[c];
        double acc = 0.0;
        for (Eigen::Index cp = 0; cp < cols; ++cp) {
          // m(r,c) m(r',c') - m(r,c') m(r',c)
          const double xr = (ar * rp_re[cp] - ai * rp_im[cp]) - (r_re[cp] * br - r_im[cp] * bi);
          const double xi = (ar * rp_im[cp] + ai * rp_re[cp]) - (r_re[cp] * bi + r_im[cp] * br);
          acc += xr * xr + xi * xi;
        }
        total += acc;
      }
    }
  }
  return total;
}

}  // namespace detail

/// C_N = sqrt(N/(N-1) (I_0^2 - I_1)) for two N-level systems.
inline ConcurrenceReport concurrence_bipartite(const PureBipartiteState& state) {
  const int n = state.dim();
  const double scale = static_cast<double>(n) / static_cast<double>(n - 1);
  const double by_invariants = detail::checked_sqrt(scale * detail::purity_gap(state.coefficients()), "C_N");

  const Matrix& a = state.coefficients();
  double minors = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) minors += std::norm(a(i, k) * a(j, m) - a(i, m) * a(j, k));
  const double by_minors = detail::checked_sqrt(0.5 * scale * minors, "C_N minors");
  return detail::make_report(by_invariants, by_minors);
}

/// C_N^3 = sqrt(N/(3(N-1)) (3 I_0^2 - I_1 - I_2 - I_3)).
inline ConcurrenceReport concurrence_tripartite(const PureMultipartiteState& state) {
  if (state.parties() != 3) {
    throw Error(ErrorCode::wrong_party_count, "tripartite concurrence needs M=3, got " + std::to_string(state.parties()));
  }
  const int n = state.dim();
  const double nn = static_cast<double>(n);
  // 3 I_0^2 - I_1 - I_2 - I_3, one gap per exchanged sub-index.
  double gaps = 0.0;
  for (const Bipartition& part : {Bipartition(3, {0, 1}), Bipartition(3, {0, 2}), Bipartition(3, {0})}) {
    gaps += detail::purity_gap(matricize(state, part));
  }
  const double by_invariants = detail::checked_sqrt(nn / (3.0 * (nn - 1.0)) * gaps, "C_N^3");

  // Literal six-index sums, one term per exchanged sub-index.
  const auto un = static_cast<std::size_t>(n);
  auto a = [&](int i, int j, int k) {
    return state[(static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)) * un + static_cast<std::size_t>(k)];
  };
  double minors = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            for (int m = 0; m < n; ++m) {
              const Complex lead = a(i, j, k) * a(p, q, m);
              minors += std::norm(lead - a(i, j, m) * a(p, q, k));
              minors += std::norm(lead - a(i, q, k) * a(p, j, m));
              minors += std::norm(lead - a(p, j, k) * a(i, q, m));
            }
  const double by_minors = detail::checked_sqrt(nn / (6.0 * (nn - 1.0)) * minors, "C_N^3 minors");
  return detail::make_report(by_invariants, by_minors);
}

/// C_N^M over all d = 2^(M-1) - 1 bipartitions. For M = 2 and M = 3 this
/// coincides with the bipartite and tripartite forms.
inline ConcurrenceReport concurrence_multipartite(const PureMultipartiteState& state) {
  const std::vector<Bipartition> parts = enumerate_bipartitions(state.parties());
  const double d = static_cast<double>(parts.size());
  const double nn = static_cast<double>(state.dim());

  // d I_0^2 - sum_p I_p as a sum of per-bipartition gaps.
  double gaps = 0.0;
  double minors = 0.0;
  for (const Bipartition& part : parts) {
    const Matrix psi = matricize(state, part);
    gaps += detail::purity_gap(psi);
    minors += detail::minor_sum(psi);
  }
  const double by_invariants = detail::checked_sqrt(nn / (d * (nn - 1.0)) * gaps, "C_N^M");
  const double by_minors = detail::checked_sqrt(nn / (2.0 * d * (nn - 1.0)) * minors, "C_N^M minors");
  return detail::make_report(by_invariants, by_minors);
}

}  // namespace entangle
