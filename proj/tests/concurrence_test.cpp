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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entangle/concurrence.hpp"
#include "entangle/local_unitary.hpp"
#include "oracles.hpp"

using namespace entangle;

namespace {

// C_N^M from single-party-subset purities computed by the partial-trace oracle.
double concurrence_by_purities(const PureMultipartiteState& s) {
  const auto parts = enumerate_bipartitions(s.parties());
  const double d = static_cast<double>(parts.size());
  const double n = s.dim();
  double sum = 0.0;
  for (const Bipartition& p : parts) sum += 1.0 - oracle::purity(reduced_density_subset(s, p).matrix);
  return std::sqrt(std::max(0.0, n / (d * (n - 1.0)) * sum));
}

void expect_consistent(const ConcurrenceReport& r) {
  EXPECT_EQ(r.value, r.route_invariant);
  EXPECT_LE(r.discrepancy, 1e-9);
  EXPECT_NEAR(r.discrepancy, std::abs(r.route_invariant - r.route_minors), 1e-18);
  EXPECT_GE(r.value, 0.0);
}

// Largest value reachable: every reduction of k parties maximally mixed,
// purity N^-min(k, M-k). Equals 1 for M <= 3 and exceeds 1 from M = 4 on.
double concurrence_ceiling(int n, int m) {
  const auto parts = enumerate_bipartitions(m);
  double sum = 0.0;
  for (const Bipartition& p : parts) sum += 1.0 - std::pow(n, -std::min(p.size(), m - p.size()));
  return std::sqrt(n / (parts.size() * (n - 1.0)) * sum);
}

}  // namespace

TEST(ConcurrenceBipartite, BellIsOne) {
  const ConcurrenceReport r = concurrence_bipartite(PureBipartiteState(make_named(NamedState::bell, 2, 2)));
  expect_consistent(r);
  EXPECT_NEAR(r.value, 1.0, 1e-14);
  EXPECT_NEAR(r.route_minors, 1.0, 1e-14);
}

TEST(ConcurrenceBipartite, ProductStatesAreZero) {
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const ConcurrenceReport r = concurrence_bipartite(PureBipartiteState(random_product_state(n, 2, Seed{seed})));
      expect_consistent(r);
      EXPECT_LE(r.value, 1e-10) << "N=" << n << " seed=" << seed;
    }
}

TEST(ConcurrenceBipartite, UnequalSchmidtWeights) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = std::sqrt(0.9);
  a(1, 1) = std::sqrt(0.1);
  const ConcurrenceReport r = concurrence_bipartite(PureBipartiteState(a));
  EXPECT_NEAR(r.value, 0.6, 1e-14);
  EXPECT_NEAR(r.route_minors, 0.6, 1e-14);
}

TEST(ConcurrenceBipartite, MaximallyEntangledIsOne) {
  for (int n = 2; n <= 8; ++n) {
    const ConcurrenceReport r = concurrence_bipartite(PureBipartiteState(make_named(NamedState::max_entangled, n, 2)));
    expect_consistent(r);
    EXPECT_NEAR(r.value, 1.0, 1e-12) << "N=" << n;
  }
}

TEST(ConcurrenceBipartite, TwoQubitsMatchDeterminantFormula) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const PureBipartiteState s = random_bipartite_state(2, Seed{seed});
    EXPECT_NEAR(concurrence_bipartite(s).value, oracle::two_qubit_concurrence(s), 1e-10) << "seed=" << seed;
  }
}

TEST(ConcurrenceBipartite, NonzeroMinorImpliesEntangled) {
  int checked = 0;
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const PureBipartiteState s = random_bipartite_state(n, Seed{seed + 500});
      double largest = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) largest = std::max(largest, std::abs(s(i, k) * s(j, m) - s(i, m) * s(j, k)));
      if (largest >= 0.1) {
        ++checked;
        EXPECT_GE(concurrence_bipartite(s).value, 1e-3);
      }
    }
  EXPECT_GT(checked, 50);
}

TEST(ConcurrenceTripartite, GhzIsOne) {
  for (int n = 2; n <= 4; ++n) {
    const ConcurrenceReport r = concurrence_tripartite(make_named(NamedState::ghz, n, 3));
    expect_consistent(r);
    EXPECT_NEAR(r.value, 1.0, 1e-12) << "N=" << n;
  }
}

TEST(ConcurrenceTripartite, ProductIsZero) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_LE(concurrence_tripartite(make_named(NamedState::product, n, 3)).value, 1e-15);
    EXPECT_LE(concurrence_tripartite(random_product_state(n, 3, Seed{static_cast<std::uint64_t>(n)})).value, 1e-10);
  }
}

TEST(ConcurrenceTripartite, BellPairTimesSeparateQubit) {
  // Purities of the three single-party reductions are 1/2, 1/2 and 1, so
  // C^2 = (2/3)(3 - 2) = 2/3. The quoted sqrt(5/6) is not reproduced by
  // either route.
  const PureMultipartiteState s = make_named(NamedState::paper_5_6_example, 2, 3);
  const ConcurrenceReport r = concurrence_tripartite(s);
  expect_consistent(r);
  EXPECT_NEAR(r.value, concurrence_by_purities(s), 1e-12);
  EXPECT_NEAR(r.value, std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(r.route_minors, std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_LT(r.value, 1.0);
}

TEST(ConcurrenceTripartite, WrongPartyCount) {
  try {
    concurrence_tripartite(make_named(NamedState::ghz, 2, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::wrong_party_count);
  }
}

TEST(ConcurrenceMultipartite, ReducesToBipartiteAndTripartite) {
  const PureMultipartiteState bell = make_named(NamedState::bell, 2, 2);
  EXPECT_NEAR(concurrence_multipartite(bell).value, 1.0, 1e-14);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const PureMultipartiteState two = random_state(n, 2, Seed{seed});
    EXPECT_NEAR(concurrence_multipartite(two).value, concurrence_bipartite(PureBipartiteState(two)).value, 1e-12);
    const PureMultipartiteState three = random_state(std::min(n, 4), 3, Seed{seed});
    EXPECT_NEAR(concurrence_multipartite(three).value, concurrence_tripartite(three).value, 1e-12);
  }
}

TEST(ConcurrenceMultipartite, FourQubitProductAndGhz) {
  EXPECT_LE(concurrence_multipartite(make_named(NamedState::product, 2, 4)).value, 1e-15);
  const PureMultipartiteState ghz = make_named(NamedState::ghz, 2, 4);
  // Every bipartition purity is 1/2: C^2 = (2/7) * 7 * (1 - 1/2) = 1.
  for (const Bipartition& p : enumerate_bipartitions(4)) {
    EXPECT_NEAR(oracle::purity(reduced_density_subset(ghz, p).matrix), 0.5, 1e-15);
  }
  const ConcurrenceReport r = concurrence_multipartite(ghz);
  expect_consistent(r);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_NEAR(r.route_minors, 1.0, 1e-12);
}

TEST(ConcurrenceMultipartite, RoutesAgreeOnRandomStates) {
  int trials = 0;
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 5; ++n)
      for (std::uint64_t seed = 0; seed < 20; ++seed, ++trials) {
        SCOPED_TRACE("N=" + std::to_string(n) + " M=" + std::to_string(m) + " seed=" + std::to_string(seed));
        const PureMultipartiteState s = random_state(n, m, Seed{seed * 13 + 1});
        const ConcurrenceReport r = concurrence_multipartite(s);
        expect_consistent(r);
        EXPECT_NEAR(r.value, concurrence_by_purities(s), 1e-10);
        EXPECT_LE(r.value, concurrence_ceiling(n, m) + 1e-9);
        if (m <= 3) {
          EXPECT_LE(r.value, 1.0 + 1e-9);
        }
      }
  EXPECT_GE(trials, 200);
}

TEST(ConcurrenceMultipartite, CeilingAboveOneForFourParties) {
  EXPECT_NEAR(concurrence_ceiling(2, 2), 1.0, 1e-15);
  EXPECT_NEAR(concurrence_ceiling(3, 3), 1.0, 1e-15);
  // |i, j, i+j, i+2j> / 3 over qutrits: every reduction is maximally mixed.
  std::vector<Complex> amps(81, Complex{});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) amps[static_cast<std::size_t>(27 * i + 9 * j + 3 * ((i + j) % 3) + (i + 2 * j) % 3)] = 1.0 / 3.0;
  const PureMultipartiteState ame(4, 3, amps);
  const ConcurrenceReport r = concurrence_multipartite(ame);
  expect_consistent(r);
  EXPECT_NEAR(r.value, std::sqrt(16.0 / 14.0), 1e-12);
  EXPECT_NEAR(r.value, concurrence_ceiling(3, 4), 1e-12);
  EXPECT_GT(r.value, 1.0);
}

TEST(ConcurrenceMultipartite, InvariantUnderLocalUnitaries) {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      const PureMultipartiteState s = random_state(n, m, Seed{static_cast<std::uint64_t>(10 * m + n)});
      const double before = concurrence_multipartite(s).value;
      for (std::uint64_t t = 0; t < 20; ++t) {
        const double after = concurrence_multipartite(apply_local(s, random_local_unitaries(m, n, Seed{t}))).value;
        EXPECT_NEAR(after, before, 1e-9) << "N=" << n << " M=" << m << " trial seed=" << t;
      }
    }
}

TEST(ConcurrenceMultipartite, PermutationCovariant) {
  for (int m = 3; m <= 4; ++m)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PureMultipartiteState s = random_state(2, m, Seed{seed});
      const double base = concurrence_multipartite(s).value;
      std::vector<int> perm(static_cast<std::size_t>(m));
      std::iota(perm.begin(), perm.end(), 0);
      while (std::next_permutation(perm.begin(), perm.end())) {
        EXPECT_NEAR(concurrence_multipartite(permute_parties(s, perm)).value, base, 1e-10);
      }
    }
}
