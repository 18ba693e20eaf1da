// Copyright 2026 The pdcap Authors
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

#include "pdcap/entropy.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "pdcap/error.hpp"
#include "support/oracles.hpp"

namespace pdcap {
namespace {

using testing::Cd;
using testing::Gen;

TEST(Frozen, OracleConstants) {
  EXPECT_NEAR(1.0 - testing::h2_oracle(0.9), testing::kOneMinusH2Of09, 1e-15);
  EXPECT_NEAR(testing::h2_oracle(0.25), testing::kH2Of025, 1e-15);
  EXPECT_NEAR(testing::shannon_oracle({1.0 / 3, 1.0 / 3, 1.0 / 3}), testing::kLog2Of3, 1e-15);
}

TEST(BinaryEntropy, KnownValues) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.1), 0.46900, 1e-5);
  EXPECT_NEAR(binary_entropy(0.1), testing::h2_oracle(0.1), 1e-15);
}

TEST(BinaryEntropy, RejectsOutsideUnitInterval) {
  EXPECT_THROW(binary_entropy(-0.1), DomainError);
  EXPECT_THROW(binary_entropy(1.5), DomainError);
}

TEST(ShannonEntropy, KnownValues) {
  EXPECT_NEAR(shannon_entropy(ProbDist::uniform(4)), 2.0, 1e-15);
  EXPECT_EQ(shannon_entropy(ProbDist{1.0, 0.0}), 0.0);
  EXPECT_NEAR(shannon_entropy(ProbDist{1.0 / 3, 1.0 / 3, 1.0 / 3}), testing::kLog2Of3, 1e-15);
}

TEST(ProbDist, RejectsBadWeights) {
  EXPECT_THROW(ProbDist({0.5, 0.6}), DomainError);
  EXPECT_THROW(ProbDist({-0.5, 1.5}), DomainError);
  EXPECT_THROW(ProbDist(std::vector<double>{}), DomainError);
}

TEST(VonNeumannEntropy, KnownValues) {
  const std::vector<Complex> ket = {M_SQRT1_2, Cd(0.0, M_SQRT1_2)};
  EXPECT_NEAR(von_neumann_entropy(validate_density(ComplexMatrix::projector(ket))), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(validate_density(ComplexMatrix::identity(2) * Cd(0.5))), 1.0,
              1e-15);
  const std::vector<double> d = {0.9, 0.1};
  EXPECT_NEAR(von_neumann_entropy(validate_density(ComplexMatrix::diagonal(d))),
              binary_entropy(0.1), 1e-15);
}

TEST(VonNeumannEntropy, MatchesReferenceSpectrum) {
  Gen gen(31);
  for (std::size_t n = 2; n <= 9; ++n) {
    const ComplexMatrix rho = gen.density(n);
    EXPECT_NEAR(von_neumann_entropy(validate_density(rho)), testing::entropy_oracle(rho), 1e-12);
  }
}

TEST(EntropyAxioms, PureStatesHaveZeroEntropy) {
  Gen gen(32);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix rho = gen.density(2 + trial % 5, 1);
    EXPECT_NEAR(von_neumann_entropy(validate_density(rho)), 0.0, 1e-10);
  }
}

TEST(EntropyAxioms, UnitaryInvariance) {
  Gen gen(33);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const ComplexMatrix rho = gen.density(n);
    const ComplexMatrix rotated = conjugate(gen.unitary(n), rho);
    EXPECT_NEAR(von_neumann_entropy(validate_density(rho)),
                von_neumann_entropy(validate_density(rotated)), 1e-10);
  }
}

TEST(EntropyAxioms, SubadditivityOnRandomBipartiteStates) {
  Gen gen(34);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t da = 2, db = 2 + trial % 2;
    const DensityOperator rho = validate_density(gen.density(da * db, 1 + trial % (da * db)));
    const std::vector<std::size_t> dims = {da, db};
    const std::vector<std::size_t> a = {0}, b = {1};
    const double h_ab = von_neumann_entropy(rho);
    const double h_a = subsystem_entropy(rho, dims, a);
    const double h_b = subsystem_entropy(rho, dims, b);
    EXPECT_LE(h_ab, h_a + h_b + 1e-10);
    EXPECT_GE(h_ab, std::abs(h_a - h_b) - 1e-10);  // Araki-Lieb
  }
}

TEST(MutualInformation, KnownValues) {
  Gen gen(35);
  const ComplexMatrix product = tensor_product(gen.density(2), gen.density(2));
  EXPECT_NEAR(mutual_information(validate_density(product), 2, 2), 0.0, 1e-12);

  const std::vector<Complex> phi = {M_SQRT1_2, 0, 0, M_SQRT1_2};
  EXPECT_NEAR(mutual_information(validate_density(ComplexMatrix::projector(phi)), 2, 2), 2.0,
              1e-12);

  // (|00><00| + |11><11|) / 2
  const std::vector<double> corr = {0.5, 0, 0, 0.5};
  EXPECT_NEAR(mutual_information(validate_density(ComplexMatrix::diagonal(corr)), 2, 2), 1.0,
              1e-15);
  EXPECT_THROW(mutual_information(validate_density(product), 3, 2), DimensionError);
}

TEST(CqConditionalEntropy, Examples) {
  const DensityOperator pure0 = validate_density(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
  const DensityOperator mixed = validate_density(ComplexMatrix::identity(2) * Cd(0.5));
  const DensityOperator pure1 = validate_density(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}});

  const std::vector<WeightedState> single = {{1.0, mixed}};
  EXPECT_NEAR(cq_conditional_entropy(single), 1.0, 1e-15);
  const std::vector<WeightedState> pures = {{0.3, pure0}, {0.7, pure1}};
  EXPECT_NEAR(cq_conditional_entropy(pures), 0.0, 1e-15);
  const std::vector<WeightedState> half = {{0.5, pure0}, {0.5, mixed}};
  EXPECT_NEAR(cq_conditional_entropy(half), 0.5, 1e-15);
}

}  // namespace
}  // namespace pdcap
