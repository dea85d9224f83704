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

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "entangle/local_unitary.hpp"
#include "entangle/state.hpp"

namespace entangle {

/// rho = p |E1><E1| + (1 - p) |E2><E2| with orthonormal E1, E2.
class RankTwoMixedState {
 public:
  RankTwoMixedState(double p, PureBipartiteState e1, PureBipartiteState e2)
      : p_(p), e1_(std::move(e1)), e2_(std::move(e2)) {
    if (!(p_ > 0.0 && p_ < 1.0)) throw Error(ErrorCode::invalid_argument, "p must lie in (0,1), got " + std::to_string(p_));
    if (e1_.dim() != e2_.dim()) throw Error(ErrorCode::dim_mismatch, "eigenvectors have different dimensions");
    const Complex overlap = (e1_.coefficients().array() * e2_.coefficients().conjugate().array()).sum();
    if (std::abs(overlap) > tol::orthogonal) {
      throw Error(ErrorCode::invalid_argument, "eigenvectors are not orthogonal, |<E1|E2>| = " + std::to_string(std::abs(overlap)));
    }
  }

  double p() const noexcept { return p_; }
  double q() const noexcept { return 1.0 - p_; }
  int dim() const noexcept { return e1_.dim(); }
  const PureBipartiteState& e1() const noexcept { return e1_; }
  const PureBipartiteState& e2() const noexcept { return e2_; }

  /// The N^2 x N^2 density matrix, basis index i * N + j.
  Matrix density() const {
    const Eigen::VectorXcd v1 = flatten(e1_);
    const Eigen::VectorXcd v2 = flatten(e2_);
    return p_ * v1 * v1.adjoint() + q() * v2 * v2.adjoint();
  }

 private:
  static Eigen::VectorXcd flatten(const PureBipartiteState& s) {
    const int n = s.dim();
    Eigen::VectorXcd v(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(i * n + j) = s(i, j);
    return v;
  }

  double p_;
  PureBipartiteState e1_;
  PureBipartiteState e2_;
};

/// Eigen-decomposes a rank-2 density matrix on C^N (x) C^N. The larger
/// eigenvalue becomes p.
inline RankTwoMixedState rank_two_from_density(const Matrix& rho, int n) {
  if (rho.rows() != n * n || rho.cols() != n * n) throw Error(ErrorCode::dim_mismatch, "density matrix is not N^2 x N^2");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::eigen_failure, "Hermitian eigensolver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  const Eigen::Index top = ev.size() - 1;
  if (ev.size() > 2 && std::abs(ev(top - 2)) > tol::psd) {
    throw Error(ErrorCode::invalid_argument, "density matrix has rank > 2");
  }
  const double trace = ev(top) + ev(top - 1);
  auto vec = [&](Eigen::Index col) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = solver.eigenvectors()(i * n + j, col);
    return PureBipartiteState(std::move(a));
  };
  return RankTwoMixedState(ev(top) / trace, vec(top), vec(top - 1));
}

/// E1, E2 are the first two columns of a Haar unitary on C^N (x) C^N and p
/// is uniform on [p_lo, p_hi].
inline RankTwoMixedState random_rank_two_state(int n, Seed seed, double p_lo = 0.05, double p_hi = 0.95) {
  const Matrix u = haar_unitary(n * n, derive_seed(seed, 0));
  Rng rng(derive_seed(seed, 1).value);
  const double p = std::uniform_real_distribution<double>(p_lo, p_hi)(rng);
  auto column = [&](Eigen::Index c) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = u(i * n + j, c);
    return PureBipartiteState(std::move(a));
  };
  return RankTwoMixedState(p, column(0), column(1));
}

/// 2x2 minors of the eigenvector coefficient matrices, indexed (i, j, k, l):
///   alpha = a2_ij a2_kl - a2_il a2_kj,
///   gamma = a1_ij a1_kl - a1_il a1_kj,
///   beta  = a1_ij a2_kl + a2_ij a1_kl - a2_il a1_kj - a1_il a2_kj.
/// Each satisfies t(i,j,k,l) = -t(i,l,k,j) exactly.
struct MinorTensors {
  int n = 0;
  std::vector<Complex> alpha, beta, gamma;

  std::size_t index(int i, int j, int k, int l) const {
    const auto un = static_cast<std::size_t>(n);
    return ((static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)) * un + static_cast<std::size_t>(k)) * un +
           static_cast<std::size_t>(l);
  }
};

inline MinorTensors minor_tensors(const RankTwoMixedState& rho) {
  const int n = rho.dim();
  const Matrix& a1 = rho.e1().coefficients();
  const Matrix& a2 = rho.e2().coefficients();
  MinorTensors t;
  t.n = n;
  const std::size_t size = static_cast<std::size_t>(n) * n * n * n;
  t.alpha.assign(size, Complex{});
  t.beta.assign(size, Complex{});
  t.gamma.assign(size, Complex{});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
          const Complex al = a2(i, j) * a2(k, l) - a2(i, l) * a2(k, j);
          const Complex ga = a1(i, j) * a1(k, l) - a1(i, l) * a1(k, j);
          const Complex be = a1(i, j) * a2(k, l) + a2(i, j) * a1(k, l) - a2(i, l) * a1(k, j) - a1(i, l) * a2(k, j);
          const std::size_t fwd = t.index(i, j, k, l);
          const std::size_t rev = t.index(i, l, k, j);
          t.alpha[fwd] = al;
          t.alpha[rev] = -al;
          t.beta[fwd] = be;
          t.beta[rev] = -be;
          t.gamma[fwd] = ga;
          t.gamma[rev] = -ga;
        }
  return t;
}

enum class Verdict { separable, entangled, indeterminate };
enum class Violation { none, theta_nonexistent, proportionality_failed, root_condition_failed, degenerate_alpha, degenerate_roots };
enum class DecidedBy { criterion, ppt_fallback, undecided };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::separable: return "separable";
    case Verdict::entangled: return "entangled";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

constexpr std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::theta_nonexistent: return "theta_nonexistent";
    case Violation::proportionality_failed: return "proportionality_failed";
    case Violation::root_condition_failed: return "root_condition_failed";
    case Violation::degenerate_alpha: return "degenerate_alpha";
    case Violation::degenerate_roots: return "degenerate_roots";
  }
  return "unknown";
}

constexpr std::string_view to_string(DecidedBy d) {
  switch (d) {
    case DecidedBy::criterion: return "criterion";
    case DecidedBy::ppt_fallback: return "ppt_fallback";
    case DecidedBy::undecided: return "undecided";
  }
  return "unknown";
}

/// When decided_by == criterion, separable implies violated == none and a theta.
struct SeparabilityVerdict {
  bool separable = false;
  Verdict verdict = Verdict::indeterminate;
  DecidedBy decided_by = DecidedBy::undecided;
  Violation violated = Violation::none;
  std::optional<double> theta;
  std::optional<double> mixing_value;
  std::optional<bool> ppt_agrees;
  std::optional<double> ppt_min_eigenvalue;
};

struct PptResult {
  bool is_ppt = false;
  double min_eigenvalue = 0.0;
};

/// Smallest eigenvalue of the partial transpose over the second subsystem.
inline PptResult ppt_check(const RankTwoMixedState& rho) {
  const int n = rho.dim();
  const Matrix dens = rho.density();
  Matrix pt(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) pt(i * n + j, k * n + l) = dens(i * n + l, k * n + j);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::eigen_failure, "Hermitian eigensolver did not converge");
  const double lo = solver.eigenvalues().minCoeff();
  return {lo >= -tol::psd, lo};
}

namespace detail {

struct RootCheck {
  bool passed = false;
  std::optional<double> mixing_value;
};

/// Roots of a x^2 + b x + c = 0 without cancellation.
inline std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex sq = std::sqrt(b * b - 4.0 * a * c);
  const Complex q = -0.5 * ((std::abs(b + sq) >= std::abs(b - sq)) ? b + sq : b - sq);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q / a, c / q};
}

inline RootCheck root_condition(Complex a, Complex b, Complex c, Complex phase) {
  auto [r1, r2] = quadratic_roots(a, b, c);
  const Complex z0 = r2 - r1;
  if (std::abs(z0) <= tol::degenerate) throw Error(ErrorCode::degenerate_roots, "double root in the range quadratic");

  RootCheck out;
  // z = e^{i theta} conj(z) is invariant under swapping the roots (z -> -z).
  if (std::abs(z0 - phase * std::conj(z0)) > tol::proportional * std::max(1.0, std::abs(z0))) return out;

  for (auto [mu1, mu2] : {std::pair{r1, r2}, std::pair{r2, r1}}) {
    const Complex z = mu2 - mu1;
    const Complex x = mu2 * (1.0 + std::norm(mu1)) / (z - mu1 * mu2 * std::conj(z));
    const double slack = tol::proportional * std::max(1.0, std::abs(x));
    if (std::abs(x.imag()) <= slack && x.real() >= -tol::proportional && x.real() <= 1.0 + tol::proportional) {
      out.passed = true;
      out.mixing_value = x.real();
      return out;
    }
  }
  return out;
}

}  // namespace detail

/// The rank-2 criterion in its raw form: rho is separable iff there is a
/// real theta with gamma = e^{i theta} (1 - 1/p) alpha on every index tuple,
/// beta and alpha are proportional at each fixed (k, l), and the roots
/// mu1, mu2 of alpha x^2 + beta x + gamma satisfy the phase relation
/// z = e^{i theta} conj(z), z = mu2 - mu1, with
/// mu2 (1 + |mu1|^2) / (z - mu1 mu2 conj(z)) real and in [0, 1].
///
/// Throws DegenerateAlpha when alpha vanishes identically and
/// DegenerateRoots when the pivot quadratic has a double root.
inline SeparabilityVerdict separability_criterion(const RankTwoMixedState& rho) {
  const MinorTensors t = minor_tensors(rho);
  const int n = t.n;

  std::size_t pivot = 0;
  for (std::size_t k = 1; k < t.alpha.size(); ++k)
    if (std::abs(t.alpha[k]) > std::abs(t.alpha[pivot])) pivot = k;
  if (std::abs(t.alpha[pivot]) <= tol::degenerate) {
    throw Error(ErrorCode::degenerate_alpha, "alpha minors vanish; E2 is a product vector");
  }

  SeparabilityVerdict v;
  v.decided_by = DecidedBy::criterion;
  v.verdict = Verdict::entangled;
  auto fail = [&](Violation why) {
    v.violated = why;
    return v;
  };

  const double factor = 1.0 - 1.0 / rho.p();
  const double theta = std::remainder(std::arg(t.gamma[pivot]) - std::arg(factor * t.alpha[pivot]), 2.0 * std::numbers::pi);
  const Complex phase = std::polar(1.0, theta);
  v.theta = theta;

  for (std::size_t k = 0; k < t.alpha.size(); ++k) {
    if (std::abs(t.gamma[k] - phase * factor * t.alpha[k]) > tol::proportional) return fail(Violation::theta_nonexistent);
  }

  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const std::size_t ij = t.index(i, j, k, l);
          for (int m = 0; m < n; ++m)
            for (int o = 0; o < n; ++o) {
              const std::size_t mn = t.index(m, o, k, l);
              if (std::abs(t.beta[ij] * t.alpha[mn] - t.alpha[ij] * t.beta[mn]) > tol::proportional) {
                return fail(Violation::proportionality_failed);
              }
            }
        }

  const detail::RootCheck at_pivot = detail::root_condition(t.alpha[pivot], t.beta[pivot], t.gamma[pivot], phase);
  if (!at_pivot.passed) return fail(Violation::root_condition_failed);

  // Every tuple with a nonzero alpha must agree with the pivot.
  for (std::size_t k = 0; k < t.alpha.size(); ++k) {
    if (k == pivot || std::abs(t.alpha[k]) <= tol::degenerate) continue;
    if (!detail::root_condition(t.alpha[k], t.beta[k], t.gamma[k], phase).passed) {
      return fail(Violation::root_condition_failed);
    }
  }

  v.separable = true;
  v.verdict = Verdict::separable;
  v.mixing_value = at_pivot.mixing_value;
  return v;
}

/// Criterion with the degenerate fallback: when the criterion has no pivot
/// (or a double root), partial transposition decides for N <= 3 and the
/// verdict is indeterminate above that.
inline SeparabilityVerdict separability_check(const RankTwoMixedState& rho, bool with_ppt = false) {
  SeparabilityVerdict v;
  std::optional<PptResult> ppt;
  try {
    v = separability_criterion(rho);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::degenerate_alpha && e.code() != ErrorCode::degenerate_roots) throw;
    v = SeparabilityVerdict{};
    v.violated = e.code() == ErrorCode::degenerate_alpha ? Violation::degenerate_alpha : Violation::degenerate_roots;
    if (rho.dim() <= 3) {
      ppt = ppt_check(rho);
      v.decided_by = DecidedBy::ppt_fallback;
      v.separable = ppt->is_ppt;
      v.verdict = ppt->is_ppt ? Verdict::separable : Verdict::entangled;
    } else {
      v.decided_by = DecidedBy::undecided;
      v.verdict = Verdict::indeterminate;
    }
  }
  if (with_ppt) {
    if (!ppt) ppt = ppt_check(rho);
    v.ppt_min_eigenvalue = ppt->min_eigenvalue;
    if (v.verdict != Verdict::indeterminate) v.ppt_agrees = (ppt->is_ppt == v.separable);
  }
  return v;
}

}  // namespace entangle
