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

#include <algorithm>
#include <cmath>
#include <string>

#include "pdcap/error.hpp"

namespace pdcap {
namespace {

constexpr double kWeightClip = 1e-12;
constexpr double kSumTolerance = 1e-9;

double xlog2x(double x) { return x > kEntropyEigenFloor ? x * std::log2(x) : 0.0; }

}  // namespace

ProbDist::ProbDist(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("ProbDist: empty distribution");
  double sum = 0.0;
  for (double& w : weights_) {
    if (!std::isfinite(w) || w < -kWeightClip || w > 1.0 + kWeightClip) {
      throw DomainError("ProbDist: weight " + std::to_string(w) + " outside [0,1]");
    }
    w = std::clamp(w, 0.0, 1.0);
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw DomainError("ProbDist: weights sum to " + std::to_string(sum));
  }
}

ProbDist ProbDist::uniform(std::size_t n) {
  return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double binary_entropy(double p) {
  if (!(p >= -kWeightClip && p <= 1.0 + kWeightClip)) {
    throw DomainError("binary_entropy: p = " + std::to_string(p) + " outside [0,1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double shannon_entropy(const ProbDist& d) { return spectrum_entropy(d.weights()); }

double spectrum_entropy(std::span<const double> spectrum) {
  double h = 0.0;
  for (double x : spectrum) h -= xlog2x(x);
  return h;
}

double entropy_unchecked(const ComplexMatrix& rho) {
  if (rho.rows() == 1) return 0.0;
  const auto ev = hermitian_eigenvalues(rho);
  return spectrum_entropy(ev);
}

double von_neumann_entropy(const DensityOperator& rho) { return entropy_unchecked(rho.matrix()); }

double subsystem_entropy(const DensityOperator& rho, std::span<const std::size_t> dims,
                         std::span<const std::size_t> keep) {
  return entropy_unchecked(partial_trace(rho.matrix(), dims, keep));
}

double mutual_information(const DensityOperator& rho_ab, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a * dim_b != rho_ab.dim()) {
    throw DimensionError("mutual_information: " + std::to_string(dim_a) + "x" +
                         std::to_string(dim_b) + " does not match state dimension " +
                         std::to_string(rho_ab.dim()));
  }
  const std::size_t dims[] = {dim_a, dim_b};
  const std::size_t a[] = {0};
  const std::size_t b[] = {1};
  return subsystem_entropy(rho_ab, dims, a) + subsystem_entropy(rho_ab, dims, b) -
         von_neumann_entropy(rho_ab);
}

double cq_conditional_entropy(std::span<const WeightedState> branches) {
  std::vector<double> w;
  w.reserve(branches.size());
  for (const auto& b : branches) w.push_back(b.weight);
  const ProbDist dist(std::move(w));
  double h = 0.0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (dist[i] > 0.0) h += dist[i] * von_neumann_entropy(branches[i].state);
  }
  return h;
}

}  // namespace pdcap
