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

// Reference computations for the tests. Everything here is written from the
// defining formulas and shares no code with the library beyond the matrix
// container.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "pdcap/linalg.hpp"

namespace pdcap::testing {

using Cd = std::complex<double>;

inline double xlogx_oracle(double x) { return x <= 0.0 ? 0.0 : x * std::log(x) / std::log(2.0); }

inline double h2_oracle(double x) { return -xlogx_oracle(x) - xlogx_oracle(1.0 - x); }

inline double shannon_oracle(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) h -= xlogx_oracle(x);
  return h;
}

// Values frozen from the oracles above (see the Frozen test).
inline constexpr double kOneMinusH2Of09 = 0.5310044064107189;  // 1 - H2(0.9)
inline constexpr double kH2Of025 = 0.8112781244591328;         // H2(1/4)
inline constexpr double kLog2Of3 = 1.584962500721156;

class Gen {
 public:
  explicit Gen(unsigned long long seed) : eng_(seed) {}
  double normal() { return dist_(eng_); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  Cd complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

  ComplexMatrix ginibre(std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (auto& z : m.data()) z = complex_normal();
    return m;
  }

  ComplexMatrix hermitian(std::size_t n) {
    const ComplexMatrix g = ginibre(n, n);
    ComplexMatrix h = g + g.adjoint();
    h *= Cd(0.5);
    return h;
  }

  // Density matrix of rank `rank` (full rank when 0).
  ComplexMatrix density(std::size_t n, std::size_t rank = 0) {
    const ComplexMatrix g = ginibre(n, rank == 0 ? n : rank);
    ComplexMatrix rho = g * g.adjoint();
    rho *= Cd(1.0 / rho.trace().real());
    return rho;
  }

  // Haar-ish unitary from Gram-Schmidt on a Ginibre matrix.
  ComplexMatrix unitary(std::size_t n) {
    ComplexMatrix g = ginibre(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < c; ++k) {
        Cd dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(g(r, k)) * g(r, c);
        for (std::size_t r = 0; r < n; ++r) g(r, c) -= dot * g(r, k);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(g(r, c));
      norm = std::sqrt(norm);
      for (std::size_t r = 0; r < n; ++r) g(r, c) /= norm;
    }
    return g;
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> dist_;
};

// (A ⊗ B)[(i k), (j l)] = A[i j] B[k l].
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Tr_B and Tr_A of a bipartite operator by explicit double sums.
inline ComplexMatrix trace_out_second(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out(da, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
  return out;
}

inline ComplexMatrix trace_out_first(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out(db, db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return out;
}

// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigen_oracle(const ComplexMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = h(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline double entropy_oracle(const ComplexMatrix& rho) {
  double h = 0.0;
  for (double x : eigen_oracle(rho)) h -= xlogx_oracle(std::max(x, 0.0));
  return h;
}

inline ComplexMatrix power(const ComplexMatrix& a, int k) {
  ComplexMatrix out = ComplexMatrix::identity(a.rows());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? d : 1e300;
}

}  // namespace pdcap::testing
