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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pdcap/linalg.hpp"

namespace pdcap {

/// Finite probability distribution. Weights within 1e-12 outside [0,1] are
/// clipped; the sum must be within 1e-9 of one.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> weights);
  ProbDist(std::initializer_list<double> weights) : ProbDist(std::vector<double>(weights)) {}

  static ProbDist uniform(std::size_t n);

  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

// All entropies are in bits. Eigenvalues below this contribute nothing.
inline constexpr double kEntropyEigenFloor = 1e-12;

double binary_entropy(double p);
double shannon_entropy(const ProbDist& d);

// -sum x log2 x over a spectrum, skipping entries below kEntropyEigenFloor.
double spectrum_entropy(std::span<const double> spectrum);

double von_neumann_entropy(const DensityOperator& rho);

// Entropy of a matrix known to be a density operator; skips validation.
double entropy_unchecked(const ComplexMatrix& rho);

// H of the reduced state on `keep`.
double subsystem_entropy(const DensityOperator& rho, std::span<const std::size_t> dims,
                         std::span<const std::size_t> keep);

/// I(A;B) = H(A) + H(B) - H(AB).
double mutual_information(const DensityOperator& rho_ab, std::size_t dim_a, std::size_t dim_b);

struct WeightedState {
  double weight;
  DensityOperator state;
};

/// H(B|X) = sum_x p(x) H(rho_x) for a classical X.
double cq_conditional_entropy(std::span<const WeightedState> branches);

}  // namespace pdcap
