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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pdcap {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Carrier for density operators, Kraus
/// operators and isometries.
///
/// Every constructor checks that the entry count matches the shape and that
/// all entries are finite. Arithmetic results are not re-checked.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);
  // |v><v|
  static ComplexMatrix projector(std::span<const Complex> ket);
  // |v> as a column.
  static ComplexMatrix column(std::span<const Complex> ket);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Largest |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |m_ij - conj(m_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

// U m U^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

/// Kronecker product. The first factor is the most significant index:
/// (a ⊗ b)(i·b.rows + k, j·b.cols + l) = a(i,j)·b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on the subsystems listed in `keep` (any order; output keeps
/// the original relative order). `dims` lists subsystem dimensions,
/// most significant first, and must multiply to m.rows().
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j is the eigenvector of values[j]
};

/// Eigenvalues of a Hermitian matrix, ascending, with multiplicity.
/// The input is symmetrized as (H + H†)/2 first; inputs further than 1e-10
/// from Hermitian throw ValidationError. Cyclic complex Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

namespace detail {
// Eigenvalues (unsorted) of a matrix the caller guarantees to be Hermitian.
// Consumes its argument; no validation. Used by hot evaluation loops.
std::vector<double> eigenvalues_of_hermitian(ComplexMatrix a);
}  // namespace detail

namespace tolerance {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kEigenClip = 1e-12;
inline constexpr double kJacobiOffDiagonal = 1e-12;
}  // namespace tolerance

/// A validated density operator: Hermitian, unit trace and positive
/// semidefinite. Only obtainable through validate_density().
class DensityOperator {
 public:
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  friend DensityOperator validate_density(const ComplexMatrix& m, double tol);
  friend DensityOperator assume_density(ComplexMatrix m);

  ComplexMatrix matrix_;
};

/// Checks Hermiticity, unit trace and positivity within `tol`. Eigenvalues
/// within tolerance of the admissible range are clipped to [0,1] and the
/// result renormalized. Throws ValidationError naming the failed invariant.
DensityOperator validate_density(const ComplexMatrix& m, double tol = tolerance::kHermitian);

// Wraps a matrix that is a density operator by construction (outputs of
// channels applied to valid states). No checks.
DensityOperator assume_density(ComplexMatrix m);

}  // namespace pdcap
