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

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "entangle/state.hpp"

namespace entangle {

struct Seed {
  std::uint64_t value = 0;
};

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-trial seed: mix64(base + index). Independent of evaluation order.
constexpr Seed derive_seed(Seed base, std::uint64_t index) noexcept { return Seed{mix64(base.value + index)}; }

using Rng = std::mt19937_64;

namespace detail {

inline Matrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix z(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex{re, im};
    }
  return z;
}

}  // namespace detail

/// Haar-distributed N x N unitary: QR of a complex Ginibre matrix with the
/// phases of R's diagonal moved into Q.
inline Matrix haar_unitary(int n, Seed seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "haar_unitary needs N >= 1");
  Rng rng(seed.value);
  const Matrix z = detail::ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : Complex{1.0, 0.0};
  }
  return q;
}

inline double unitarity_defect(const Matrix& u) {
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

/// One N x N unitary per party.
struct LocalUnitaryTuple {
  std::vector<Matrix> factors;
};

inline LocalUnitaryTuple random_local_unitaries(int parties, int dim, Seed seed) {
  LocalUnitaryTuple t;
  t.factors.reserve(static_cast<std::size_t>(parties));
  for (int p = 0; p < parties; ++p) t.factors.push_back(haar_unitary(dim, derive_seed(seed, static_cast<std::uint64_t>(p))));
  return t;
}

/// Maps a_{i1..iM} to sum_j a_{j1..jM} B1(j1,i1) ... BM(jM,iM).
inline PureMultipartiteState apply_local(const PureMultipartiteState& state, const LocalUnitaryTuple& lus) {
  const int m = state.parties();
  const int n = state.dim();
  if (static_cast<int>(lus.factors.size()) != m) {
    throw Error(ErrorCode::shape_mismatch, "expected " + std::to_string(m) + " factors, got " +
                                               std::to_string(lus.factors.size()));
  }
  for (const Matrix& b : lus.factors) {
    if (b.rows() != n || b.cols() != n) throw Error(ErrorCode::shape_mismatch, "factor is not N x N");
  }

  std::vector<Complex> cur(state.amplitudes().begin(), state.amplitudes().end());
  std::vector<Complex> next(cur.size());
  const auto un = static_cast<std::size_t>(n);
  for (int p = 0; p < m; ++p) {
    // View the tensor as (outer, N, inner) around party p.
    const std::size_t inner = detail::ipow(un, m - 1 - p);
    const std::size_t outer = cur.size() / (un * inner);
    const Matrix& b = lus.factors[static_cast<std::size_t>(p)];
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t in = 0; in < inner; ++in) {
        const std::size_t base = o * un * inner + in;
        for (std::size_t i = 0; i < un; ++i) {
          Complex acc{0.0, 0.0};
          for (std::size_t j = 0; j < un; ++j)
            acc += cur[base + j * inner] * b(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
          next[base + i * inner] = acc;
        }
      }
    }
    std::swap(cur, next);
  }
  return PureMultipartiteState(m, n, std::move(cur));
}

/// The tuple equivalent to applying `first` and then `second`: factorwise B1 * B2
/// under the index convention of apply_local.
inline LocalUnitaryTuple compose(const LocalUnitaryTuple& first, const LocalUnitaryTuple& second) {
  if (first.factors.size() != second.factors.size()) throw Error(ErrorCode::shape_mismatch, "tuple sizes differ");
  LocalUnitaryTuple out;
  for (std::size_t k = 0; k < first.factors.size(); ++k) out.factors.push_back(first.factors[k] * second.factors[k]);
  return out;
}

/// Unitarily invariant random pure state (normalized complex Gaussian vector).
inline PureMultipartiteState random_state(int dim, int parties, Seed seed) {
  if (dim < 2 || parties < 2) throw Error(ErrorCode::incompatible_params, "random state needs N >= 2 and M >= 2");
  Rng rng(seed.value);
  const std::size_t size = detail::ipow(static_cast<std::size_t>(dim), parties);
  const Matrix z = detail::ginibre(static_cast<int>(size), 1, rng);
  const double norm = z.norm();
  std::vector<Complex> amps(size);
  for (std::size_t k = 0; k < size; ++k) amps[k] = z(static_cast<Eigen::Index>(k), 0) / norm;
  return PureMultipartiteState(parties, dim, std::move(amps));
}

/// Fully factorized random state v1 (x) ... (x) vM.
inline PureMultipartiteState random_product_state(int dim, int parties, Seed seed) {
  if (dim < 2 || parties < 2) throw Error(ErrorCode::incompatible_params, "random state needs N >= 2 and M >= 2");
  Rng rng(seed.value);
  std::vector<Complex> amps{Complex{1.0, 0.0}};
  for (int p = 0; p < parties; ++p) {
    Matrix v = detail::ginibre(dim, 1, rng);
    v /= v.norm();
    std::vector<Complex> grown;
    grown.reserve(amps.size() * static_cast<std::size_t>(dim));
    for (const Complex& a : amps)
      for (int i = 0; i < dim; ++i) grown.push_back(a * v(i, 0));
    amps = std::move(grown);
  }
  return PureMultipartiteState(parties, dim, std::move(amps));
}

inline PureBipartiteState random_bipartite_state(int dim, Seed seed) {
  return PureBipartiteState(random_state(dim, 2, seed));
}

}  // namespace entangle
