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

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entangle/error.hpp"
#include "entangle/tolerance.hpp"

namespace entangle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

namespace detail {

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace detail

/// Checks the raw ingredients of a pure M-party state with local dimension N.
///
/// Amplitudes are laid out row-major with party 0 slowest. Inputs within
/// tol::norm of unit norm are accepted as-is and never renormalized.
inline void validate(int parties, int dim, std::span<const Complex> amplitudes) {
  if (parties < 2 || dim < 2) {
    throw Error(ErrorCode::bad_shape, "need parties >= 2 and dim >= 2, got parties=" +
                                          std::to_string(parties) + " dim=" + std::to_string(dim));
  }
  const std::size_t expected = detail::ipow(static_cast<std::size_t>(dim), parties);
  if (amplitudes.size() != expected) {
    throw Error(ErrorCode::bad_shape, "expected " + std::to_string(expected) + " amplitudes, got " +
                                          std::to_string(amplitudes.size()));
  }
  double norm2 = 0.0;
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    const Complex& a = amplitudes[k];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorCode::non_finite, "amplitude " + std::to_string(k) + " is not finite");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > tol::norm) {
    throw Error(ErrorCode::not_normalized, "sum |a|^2 = " + std::to_string(norm2));
  }
}

/// Pure state of M parties, each of local dimension N, as a flat tensor.
class PureMultipartiteState {
 public:
  PureMultipartiteState(int parties, int dim, std::vector<Complex> amplitudes)
      : parties_(parties), dim_(dim), amplitudes_(std::move(amplitudes)) {
    validate(parties_, dim_, amplitudes_);
  }

  int parties() const noexcept { return parties_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t flat) const { return amplitudes_[flat]; }

  std::size_t flat_index(std::span<const int> multi) const {
    std::size_t flat = 0;
    for (int idx : multi) flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx);
    return flat;
  }

  const Complex& at(std::span<const int> multi) const { return amplitudes_[flat_index(multi)]; }

  std::vector<int> multi_index(std::size_t flat) const {
    std::vector<int> multi(static_cast<std::size_t>(parties_));
    for (int k = parties_ - 1; k >= 0; --k) {
      multi[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
      flat /= static_cast<std::size_t>(dim_);
    }
    return multi;
  }

 private:
  int parties_;
  int dim_;
  std::vector<Complex> amplitudes_;
};

/// Pure state of two N-level systems, stored as its coefficient matrix A
/// with A(i, j) the amplitude of e_i (x) e_j.
class PureBipartiteState {
 public:
  explicit PureBipartiteState(Matrix coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.rows() != coefficients_.cols()) {
      throw Error(ErrorCode::bad_shape, "coefficient matrix must be square");
    }
    const int n = static_cast<int>(coefficients_.rows());
    std::vector<Complex> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i * n + j)] = coefficients_(i, j);
    validate(2, n, flat);
  }

  explicit PureBipartiteState(const PureMultipartiteState& state)
      : coefficients_(from_flat(state)) {}

  int dim() const noexcept { return static_cast<int>(coefficients_.rows()); }
  const Matrix& coefficients() const noexcept { return coefficients_; }
  Complex operator()(int i, int j) const { return coefficients_(i, j); }

  PureMultipartiteState to_multipartite() const {
    const int n = dim();
    std::vector<Complex> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i * n + j)] = coefficients_(i, j);
    return PureMultipartiteState(2, n, std::move(flat));
  }

 private:
  static Matrix from_flat(const PureMultipartiteState& state) {
    if (state.parties() != 2) {
      throw Error(ErrorCode::wrong_party_count,
                  "bipartite view needs 2 parties, got " + std::to_string(state.parties()));
    }
    const int n = state.dim();
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = state[static_cast<std::size_t>(i * n + j)];
    return a;
  }

  Matrix coefficients_;
};

/// Density matrix of a subsystem.
struct ReducedDensity {
  Matrix matrix;

  int dim() const noexcept { return static_cast<int>(matrix.rows()); }
};

/// A split of M parties into a nonempty proper subset and its complement.
///
/// Parties are numbered from 0. The canonical representative of an
/// unordered split contains party 0; enumerate_bipartitions() yields only
/// canonical ones, while complement() deliberately does not.
class Bipartition {
 public:
  Bipartition(int parties, std::span<const int> members) : parties_(parties) {
    if (parties < 2 || parties > 31) {
      throw Error(ErrorCode::bad_partition, "party count out of range: " + std::to_string(parties));
    }
    for (int p : members) {
      if (p < 0 || p >= parties) {
        throw Error(ErrorCode::bad_partition, "party index " + std::to_string(p) + " out of range");
      }
      mask_ |= (1u << p);
    }
    check();
  }

  Bipartition(int parties, std::initializer_list<int> members)
      : Bipartition(parties, std::span<const int>(members.begin(), members.size())) {}

  static Bipartition from_mask(int parties, std::uint32_t mask) {
    Bipartition b;
    b.parties_ = parties;
    b.mask_ = mask;
    if (parties < 2 || parties > 31 || (mask >> parties) != 0) {
      throw Error(ErrorCode::bad_partition, "mask does not fit party count");
    }
    b.check();
    return b;
  }

  int parties() const noexcept { return parties_; }
  std::uint32_t mask() const noexcept { return mask_; }
  bool contains(int party) const noexcept { return (mask_ >> party) & 1u; }
  bool is_canonical() const noexcept { return contains(0); }
  int size() const noexcept { return std::popcount(mask_); }

  std::vector<int> members() const { return collect(mask_); }
  std::vector<int> complement_members() const { return collect(full() & ~mask_); }

  Bipartition complement() const { return from_mask(parties_, full() & ~mask_); }
  Bipartition canonical() const { return is_canonical() ? *this : complement(); }

  /// One-based label such as "{1,3}|{2}".
  std::string label() const {
    auto group = [](const std::vector<int>& ps) {
      std::string s = "{";
      for (std::size_t k = 0; k < ps.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(ps[k] + 1);
      }
      return s + "}";
    };
    return group(members()) + "|" + group(complement_members());
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  Bipartition() = default;

  std::uint32_t full() const noexcept { return (1u << parties_) - 1u; }

  void check() const {
    if (mask_ == 0 || mask_ == full()) {
      throw Error(ErrorCode::bad_partition, "subset must be nonempty and proper");
    }
  }

  std::vector<int> collect(std::uint32_t m) const {
    std::vector<int> out;
    for (int p = 0; p < parties_; ++p)
      if ((m >> p) & 1u) out.push_back(p);
    return out;
  }

  int parties_ = 0;
  std::uint32_t mask_ = 0;
};

/// All 2^(M-1) - 1 canonical bipartitions of M parties, ordered by mask.
inline std::vector<Bipartition> enumerate_bipartitions(int parties) {
  if (parties < 2 || parties > 31) {
    throw Error(ErrorCode::bad_partition, "party count out of range: " + std::to_string(parties));
  }
  std::vector<Bipartition> out;
  const std::uint32_t full = (1u << parties) - 1u;
  for (std::uint32_t mask = 1; mask < full; mask += 2) out.push_back(Bipartition::from_mask(parties, mask));
  return out;
}

namespace detail {

inline void check_partition(const PureMultipartiteState& state, const Bipartition& part) {
  if (part.parties() != state.parties()) {
    throw Error(ErrorCode::bad_partition, "bipartition is over " + std::to_string(part.parties()) +
                                              " parties, state has " + std::to_string(state.parties()));
  }
}

/// Splits a flat index into (joint index over part, joint index over the rest),
/// each row-major in increasing party order.
inline std::pair<std::size_t, std::size_t> split_index(std::size_t flat, int parties, int dim,
                                                       std::uint32_t mask) {
  std::size_t inside = 0, outside = 0, inside_stride = 1, outside_stride = 1;
  const auto n = static_cast<std::size_t>(dim);
  for (int p = parties - 1; p >= 0; --p) {
    const std::size_t digit = flat % n;
    flat /= n;
    if ((mask >> p) & 1u) {
      inside += digit * inside_stride;
      inside_stride *= n;
    } else {
      outside += digit * outside_stride;
      outside_stride *= n;
    }
  }
  return {inside, outside};
}

}  // namespace detail

/// The state reshaped as a matrix whose rows run over the joint index of
/// `part` and whose columns run over the joint index of its complement.
inline Matrix matricize(const PureMultipartiteState& state, const Bipartition& part) {
  detail::check_partition(state, part);
  const auto n = static_cast<std::size_t>(state.dim());
  const auto rows = static_cast<Eigen::Index>(detail::ipow(n, part.size()));
  const auto cols = static_cast<Eigen::Index>(detail::ipow(n, state.parties() - part.size()));
  Matrix m(rows, cols);
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    auto [r, c] = detail::split_index(flat, state.parties(), state.dim(), part.mask());
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = state[flat];
  }
  return m;
}

/// rho_0 = A A^dagger.
inline ReducedDensity reduced_density(const PureBipartiteState& state) {
  const Matrix& a = state.coefficients();
  return {a * a.adjoint()};
}

/// Density matrix of the parties in `part`, tracing out the complement.
inline ReducedDensity reduced_density_subset(const PureMultipartiteState& state, const Bipartition& part) {
  detail::check_partition(state, part);
  const auto n = static_cast<std::size_t>(state.dim());
  const std::size_t rows = detail::ipow(n, part.size());
  const std::size_t env = detail::ipow(n, state.parties() - part.size());

  std::vector<Complex> psi(rows * env);
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    auto [r, c] = detail::split_index(flat, state.parties(), state.dim(), part.mask());
    psi[r * env + c] = state[flat];
  }

  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t s = r; s < rows; ++s) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < env; ++c) acc += psi[r * env + c] * std::conj(psi[s * env + c]);
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = acc;
      rho(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(r)) = std::conj(acc);
    }
  }
  return {std::move(rho)};
}

/// Reorders parties: party k of the result is party perm[k] of the input.
inline PureMultipartiteState permute_parties(const PureMultipartiteState& state, std::span<const int> perm) {
  const int m = state.parties();
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  if (static_cast<int>(perm.size()) != m) throw Error(ErrorCode::invalid_argument, "permutation size mismatch");
  for (int p : perm) {
    if (p < 0 || p >= m || seen[static_cast<std::size_t>(p)]++) {
      throw Error(ErrorCode::invalid_argument, "not a permutation");
    }
  }
  std::vector<Complex> out(state.size());
  std::vector<int> target(static_cast<std::size_t>(m));
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    const std::vector<int> src = state.multi_index(flat);
    for (int k = 0; k < m; ++k) target[static_cast<std::size_t>(k)] = src[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    out[state.flat_index(target)] = state[flat];
  }
  return PureMultipartiteState(m, state.dim(), std::move(out));
}

enum class NamedState { product, max_entangled, bell, ghz, paper_5_6_example };

inline std::string_view to_string(NamedState kind) {
  switch (kind) {
    case NamedState::product: return "product";
    case NamedState::max_entangled: return "max_entangled";
    case NamedState::bell: return "bell";
    case NamedState::ghz: return "ghz";
    case NamedState::paper_5_6_example: return "paper_5_6_example";
  }
  return "unknown";
}

/// Reference states: e_0 (x) ... (x) e_0; sum_i e_i (x) e_i / sqrt(N);
/// the N=2 Bell state; the GHZ state sum_i e_i^{(x)M} / sqrt(N); and the
/// three-qubit state (|00> + |11>)/sqrt(2) (x) (|0> + |1>)/sqrt(2).
inline PureMultipartiteState make_named(NamedState kind, int dim, int parties) {
  auto incompatible = [&](const char* why) {
    return Error(ErrorCode::incompatible_params,
                 std::string(to_string(kind)) + " " + why + " (N=" + std::to_string(dim) +
                     ", M=" + std::to_string(parties) + ")");
  };
  if (dim < 2 || parties < 2) throw incompatible("needs N >= 2 and M >= 2");

  const std::size_t size = detail::ipow(static_cast<std::size_t>(dim), parties);
  std::vector<Complex> amps(size, Complex{0.0, 0.0});
  auto diagonal = [&](int i) {
    std::size_t flat = 0;
    for (int p = 0; p < parties; ++p) flat = flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    return flat;
  };

  switch (kind) {
    case NamedState::product:
      amps[0] = 1.0;
      break;
    case NamedState::bell:
      if (dim != 2) throw incompatible("requires N=2");
      [[fallthrough]];
    case NamedState::max_entangled:
      if (parties != 2) throw incompatible("requires M=2");
      [[fallthrough]];
    case NamedState::ghz:
      for (int i = 0; i < dim; ++i) amps[diagonal(i)] = 1.0 / std::sqrt(static_cast<double>(dim));
      break;
    case NamedState::paper_5_6_example:
      if (dim != 2 || parties != 3) throw incompatible("requires N=2, M=3");
      for (std::size_t flat : {0b000u, 0b111u, 0b001u, 0b110u}) amps[flat] = 0.5;
      break;
  }
  return PureMultipartiteState(parties, dim, std::move(amps));
}

}  // namespace entangle
