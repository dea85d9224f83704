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

namespace entangle::tol {

// State validation.
inline constexpr double norm = 1e-9;       // relative deviation of sum |a|^2 from 1
inline constexpr double hermitian = 1e-10; // max entrywise |rho - rho^dagger|
inline constexpr double psd = 1e-9;        // smallest admissible eigenvalue is -psd

// Largest imaginary residue tolerated when a trace is cast to a real.
inline constexpr double real_cast = 1e-12;
// Radicands in [-radicand, 0) are float noise and clamp to zero.
inline constexpr double radicand = 1e-12;
// Concurrence routes must agree to this.
inline constexpr double route_agreement = 1e-9;

inline constexpr double spectrum = 1e-10;
inline constexpr double closed_form_degenerate = 1e-10;
inline constexpr double closed_form_mismatch = 1e-6;

// Rank-2 separability.
inline constexpr double degenerate = 1e-10;
inline constexpr double proportional = 1e-8;
inline constexpr double orthogonal = 1e-9;

inline constexpr double unitary = 1e-12;
inline constexpr double lu_drift = 1e-9;

}  // namespace entangle::tol
