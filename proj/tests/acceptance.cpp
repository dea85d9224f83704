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

// Acceptance suite. Prints one PASS/FAIL line per criterion; exits nonzero
// if any selected criterion fails.
//
//   acceptance                 run all criteria
//   acceptance --criterion 4   run one

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"

#include "entangle/cli/commands.hpp"
#include "entangle/entangle.hpp"
#include "oracles.hpp"

using namespace entangle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome closed_form_value() {
  constexpr double kExpected = 0.9128709291752769;
  const std::string path = (std::filesystem::temp_directory_path() / ("entangle_accept_" + std::to_string(::getpid()) + ".json")).string();
  const cli::CommandResult g = cli::cmd_gen({"paper_5_6_example", {}, {}, 0, path});
  if (g.exit_code != 0) return {false, "gen failed: " + g.output};
  const cli::CommandResult a = cli::cmd_analyze(path, {"concurrence"}, cli::Format::json);
  std::filesystem::remove(path);
  if (a.exit_code != 0) return {false, "analyze failed: " + a.output};
  const cli::json report = cli::json::parse(a.output)["concurrence"]["tripartite"];
  const double inv = report["route_invariant"].get<double>();
  const double minors = report["route_minors"].get<double>();
  const bool pass = std::abs(inv - kExpected) <= 1e-12 && std::abs(minors - kExpected) <= 1e-12;

  const PureMultipartiteState s = make_named(NamedState::paper_5_6_example, 2, 3);
  double gap = 0.0;
  for (const Bipartition& p : enumerate_bipartitions(3)) gap += 1.0 - oracle::subset_purity(s, p);
  const double by_oracle = std::sqrt(2.0 / 3.0 * gap);
  return {pass, "route_invariant=" + fmt(inv) + " route_minors=" + fmt(minors) + " expected=" + fmt(kExpected) +
                    " purity_oracle=" + fmt(by_oracle)};
}

Outcome extremal_concurrences() {
  double worst_max = 0.0, worst_product = 0.0;
  for (int n = 2; n <= 8; ++n) {
    worst_max = std::max(worst_max, std::abs(concurrence_bipartite(PureBipartiteState(make_named(NamedState::max_entangled, n, 2))).value - 1.0));
    for (std::uint64_t k = 0; k < 100; ++k) {
      const PureBipartiteState prod(random_product_state(n, 2, derive_seed(Seed{static_cast<std::uint64_t>(n)}, k)));
      worst_product = std::max(worst_product, concurrence_bipartite(prod).value);
    }
  }
  return {worst_max <= 1e-12 && worst_product <= 1e-10,
          "max |C-1| (maximally entangled)=" + sci(worst_max) + " max C (product)=" + sci(worst_product)};
}

Outcome two_qubit_agreement() {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const PureBipartiteState s = random_bipartite_state(2, derive_seed(Seed{3}, k));
    worst = std::max(worst, std::abs(concurrence_bipartite(s).value - oracle::two_qubit_concurrence(s)));
  }
  return {worst <= 1e-10, "max deviation=" + sci(worst) + " over 1000 states"};
}

Outcome lu_invariance() {
  double worst = 0.0;
  std::string where;
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m) {
      const PureMultipartiteState s = random_state(n, m, Seed{static_cast<std::uint64_t>(100 * n + m)});
      const InvarianceReport r = invariance_suite(s, 1000, Seed{static_cast<std::uint64_t>(n * 10 + m)});
      for (const auto& [name, drift] : r.max_drift)
        if (drift >= worst) {
          worst = drift;
          where = name + " at N=" + std::to_string(n) + " M=" + std::to_string(m);
        }
    }
  return {worst <= 1e-9, "worst drift=" + sci(worst) + " (" + where + ")"};
}

Outcome purity_equivalence() {
  double worst = 0.0;
  bool counts_ok = true;
  int states = 0;
  for (std::uint64_t k = 0; k < 200; ++k, ++states) {
    const int m = 2 + static_cast<int>(k % 3);
    const int n = 2 + static_cast<int>((k / 3) % 2);
    const PureMultipartiteState s = random_state(n, m, derive_seed(Seed{5}, k));
    const std::vector<Bipartition> parts = enumerate_bipartitions(m);
    std::vector<unsigned> seen;
    for (const Bipartition& p : parts) {
      worst = std::max(worst, std::abs(bipartition_invariant(s, p) - oracle::subset_purity(s, p)));
      const unsigned mask = p.mask(), full = (1u << m) - 1u;
      seen.push_back(std::min(mask, full ^ mask));
    }
    std::sort(seen.begin(), seen.end());
    const bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    counts_ok = counts_ok && distinct && parts.size() == (std::size_t{1} << (m - 1)) - 1;
  }
  return {worst <= 1e-10 && counts_ok,
          "max deviation=" + sci(worst) + " over " + std::to_string(states) + " states; bipartition counts " +
              (counts_ok ? "exact" : "WRONG")};
}

Outcome charpoly_coefficients() {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const int n = 4 + static_cast<int>(k % 3);
    const PureBipartiteState s = random_bipartite_state(n, derive_seed(Seed{6}, k));
    const std::vector<double> lambda = oracle::svd_spectrum(s);
    for (const auto& [j, value] : char_poly_coeffs(invariant_vector(s)).c) {
      worst = std::max(worst, std::abs(value - oracle::elementary_symmetric(lambda, n - j)));
    }
  }
  return {worst <= 1e-8, "max deviation=" + sci(worst) + " over 200 states, N=4..6"};
}

Outcome closed_form_n3() {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const PureBipartiteState s = random_bipartite_state(3, derive_seed(Seed{7}, k));
    std::array<double, 3> cf = eigenvalues_n3_closed_form(invariant_vector(s)).lambdas;
    std::sort(cf.begin(), cf.end(), std::greater<>());
    const std::vector<double> svd = oracle::svd_spectrum(s);
    for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(cf[i] - svd[i]));
  }
  const ClosedFormN3 zero = eigenvalues_n3_closed_form(invariant_vector(PureBipartiteState(make_named(NamedState::product, 3, 2))));
  const ClosedFormN3 one = eigenvalues_n3_closed_form(invariant_vector(PureBipartiteState(make_named(NamedState::max_entangled, 3, 2))));
  std::array<double, 3> z = zero.lambdas;
  std::sort(z.begin(), z.end(), std::greater<>());
  double ext = std::max({std::abs(z[0] - 1.0), std::abs(z[1]), std::abs(z[2])});
  for (double l : one.lambdas) ext = std::max(ext, std::abs(l - 1.0 / 3.0));
  return {worst <= 1e-8 && ext <= 1e-10,
          "max deviation=" + sci(worst) + " over 1000 states; extremal cases max error=" + sci(ext)};
}

Outcome separability_vs_ppt() {
  int agree = 0, entangled = 0, fallback = 0;
  for (std::uint64_t k = 0; k < 500; ++k) {
    const RankTwoMixedState rho = random_rank_two_state(2, derive_seed(Seed{8}, k));
    const SeparabilityVerdict v = separability_check(rho, true);
    if (v.ppt_agrees.value_or(false)) ++agree;
    if (v.verdict == Verdict::entangled) ++entangled;
    if (v.decided_by == DecidedBy::ppt_fallback) ++fallback;
  }
  // Separable instances built from product vectors in the range.
  int constructed = 0, constructed_agree = 0;
  Rng rng(88);
  std::normal_distribution<double> g;
  auto unit = [&](int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex{g(rng), g(rng)};
    return Eigen::VectorXcd(v / v.norm());
  };
  auto kron = [](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    Eigen::VectorXcd out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
    return out;
  };
  for (int k = 0; k < 100; ++k, ++constructed) {
    const double w = 0.05 + 0.9 * k / 100.0;
    const Eigen::VectorXcd v1 = kron(unit(2), unit(2)), v2 = kron(unit(2), unit(2));
    const Matrix rho_m = w * v1 * v1.adjoint() + (1.0 - w) * v2 * v2.adjoint();
    const SeparabilityVerdict v = separability_check(rank_two_from_density(rho_m, 2), true);
    if (v.ppt_agrees.value_or(false) && v.separable) ++constructed_agree;
  }
  return {agree == 500 && constructed_agree == constructed,
          "random: " + std::to_string(agree) + "/500 agree (" + std::to_string(entangled) + " entangled, " +
              std::to_string(fallback) + " via fallback); constructed separable: " + std::to_string(constructed_agree) + "/" +
              std::to_string(constructed) + " agree"};
}

Outcome monotonicity() {
  bool strict = true;
  for (int n = 2; n <= 8 && strict; ++n) {
    double prev_c = -1.0, prev_e = -1.0;
    for (int k = 0; k < 1000; ++k) {
      const double lambda = 1.0 - 0.5 * k / 999.0;
      std::vector<double> v(static_cast<std::size_t>(n), 0.0);
      v[0] = lambda;
      v[1] = 1.0 - lambda;
      const SchmidtSpectrum s{v};
      const double c = concurrence_of_spectrum(s), e = entanglement_of_formation(s);
      if (k > 0 && !(c > prev_c && e > prev_e)) strict = false;
      prev_c = c;
      prev_e = e;
    }
  }
  const SchmidtSpectrum s1{{0.7, 0.15, 0.15}}, s2{{0.5, 0.5, 0.0}};
  const double c1 = concurrence_of_spectrum(s1), c2 = concurrence_of_spectrum(s2);
  const double e1 = entanglement_of_formation(s1), e2 = entanglement_of_formation(s2);
  const bool counter = c1 < c2 && e1 > e2;
  return {strict && counter, std::string("two-weight grid ") + (strict ? "strictly increasing" : "NOT strictly increasing") +
                                 " for N=2..8; N=3 pair C=(" + fmt(c1) + ", " + fmt(c2) + ") EoF=(" + fmt(e1) + ", " + fmt(e2) + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "tripartite concurrence of the Bell-pair-times-qubit example equals sqrt(5/6)", 1.0, closed_form_value},
      {2, "extremal concurrences (maximally entangled = 1, product <= 1e-10)", 5.0, extremal_concurrences},
      {3, "two-qubit concurrence agrees with 2|a11 a22 - a12 a21|", 0.0, two_qubit_agreement},
      {4, "local-unitary invariance, N=2..6, M=2..4, 1000 trials", 120.0, lu_invariance},
      {5, "bipartition invariants equal subset purities", 0.0, purity_equivalence},
      {6, "char-poly coefficients equal elementary symmetric polynomials", 0.0, charpoly_coefficients},
      {7, "N=3 closed-form eigenvalues", 0.0, closed_form_n3},
      {8, "rank-2 separability agrees with PPT for qubits", 0.0, separability_vs_ppt},
      {9, "EoF monotone in C on two-weight spectra; N=3 counterexample", 0.0, monotonicity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; runtime " + fmt(secs) + " s exceeds " + fmt(c.budget_seconds) + " s";
    }
    std::printf("%s [%d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
