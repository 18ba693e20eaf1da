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

#include "pdcap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pdcap/error.hpp"

namespace pdcap {
namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("finite", std::abs(z), "ComplexMatrix: non-finite entry");
    }
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
  }
  return 2.0 * s;
}

// Cyclic Jacobi on a Hermitian matrix held in `a` (overwritten). When `v` is
// non-null it accumulates the eigenvectors as columns.
//
// Each rotation first removes the phase of a_pq with diag(1, e^{-i phi}) and
// then applies a real rotation, so U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
// on the (p, q) plane and A <- U^dagger A U.
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* v) {
  const std::size_t n = a.rows();
  double total = 0.0;
  for (const Complex& z : a.data()) total += std::norm(z);
  const double threshold2 = std::pow(tolerance::kJacobiOffDiagonal, 2) * std::max(1.0, total);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= threshold2) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Skip entries already negligible against both diagonal entries.
        if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
            std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const Complex phase = apq / mag;  // e^{i phi}
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sp = s * std::conj(phase);  // s e^{-i phi}
        const Complex cp = c * std::conj(phase);  // c e^{-i phi}

        // A <- A U (columns p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - sp * akq;
          a(k, q) = s * akp + cp * akq;
        }
        // A <- U^dagger A (rows p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - std::conj(sp) * aqk;
          a(q, k) = s * apk + std::conj(cp) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (v != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - sp * vkq;
            (*v)(k, q) = s * vkp + cp * vkq;
          }
        }
      }
    }
  }
}

ComplexMatrix symmetrized(const ComplexMatrix& h) {
  if (!h.square()) {
    throw DimensionError("hermitian eigensolver: matrix is " + std::to_string(h.rows()) + "x" +
                         std::to_string(h.cols()));
  }
  const double defect = hermiticity_defect(h);
  if (defect > tolerance::kHermitian) {
    throw ValidationError("hermitian", defect,
                          "hermitian eigensolver: input is not Hermitian (defect " +
                              std::to_string(defect) + ")");
  }
  const std::size_t n = h.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  }
  return a;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(data_.size()) + " entries for shape " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(m.data());
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
  const std::size_t n = ket.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  require_finite(m.data());
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> ket) {
  return ComplexMatrix(ket.size(), 1, std::vector<Complex>(ket.begin(), ket.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!square()) throw DimensionError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("hermiticity_defect: non-square matrix");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return d;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < br; ++k) {
        for (std::size_t l = 0; l < bc; ++l) out(i * br + k, j * bc + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (!m.square()) throw DimensionError("partial_trace: matrix is not square");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError("partial_trace: zero subsystem dimension");
    total *= d;
  }
  if (total != m.rows()) {
    throw DimensionError("partial_trace: dims multiply to " + std::to_string(total) +
                         " but matrix has " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t nsys = dims.size();
  std::vector<bool> kept(nsys, false);
  for (std::size_t k : keep) {
    if (k >= nsys) throw DimensionError("partial_trace: subsystem index out of range");
    kept[k] = true;
  }

  // Strides of each subsystem in the full index (big-endian).
  std::vector<std::size_t> stride(nsys, 1);
  for (std::size_t s = nsys; s-- > 1;) stride[s - 1] = stride[s] * dims[s];

  std::vector<std::size_t> kept_sys;
  std::vector<std::size_t> traced_sys;
  for (std::size_t s = 0; s < nsys; ++s) (kept[s] ? kept_sys : traced_sys).push_back(s);

  // Offsets of every kept multi-index and every traced multi-index.
  auto offsets_of = [&](const std::vector<std::size_t>& systems) {
    std::vector<std::size_t> offs{0};
    for (std::size_t s : systems) {
      std::vector<std::size_t> next;
      next.reserve(offs.size() * dims[s]);
      for (std::size_t o : offs) {
        for (std::size_t i = 0; i < dims[s]; ++i) next.push_back(o + i * stride[s]);
      }
      offs = std::move(next);
    }
    return offs;
  };
  const auto kept_off = offsets_of(kept_sys);
  const auto traced_off = offsets_of(traced_sys);

  const std::size_t nk = kept_off.size();
  ComplexMatrix out(nk, nk);
  for (std::size_t r = 0; r < nk; ++r) {
    for (std::size_t c = 0; c < nk; ++c) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

namespace detail {

std::vector<double> eigenvalues_of_hermitian(ComplexMatrix a) {
  const std::size_t n = a.rows();
  if (n == 1) return {a(0, 0).real()};
  if (n == 2) {
    const double x = a(0, 0).real();
    const double y = a(1, 1).real();
    const double mean = 0.5 * (x + y);
    const double rad = std::hypot(0.5 * (x - y), std::abs(a(0, 1)));
    return {mean - rad, mean + rad};
  }
  jacobi_diagonalize(a, nullptr);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  return values;
}

}  // namespace detail

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  ComplexMatrix a = symmetrized(h);
  const std::size_t n = a.rows();
  std::vector<double> values(n);
  if (n == 2) {
    // Closed form for the 2x2 case.
    const double x = a(0, 0).real();
    const double y = a(1, 1).real();
    const double mean = 0.5 * (x + y);
    const double rad = std::hypot(0.5 * (x - y), std::abs(a(0, 1)));
    values = {mean - rad, mean + rad};
    return values;
  }
  jacobi_diagonalize(a, nullptr);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  ComplexMatrix a = symmetrized(h);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi_diagonalize(a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  return out;
}

DensityOperator validate_density(const ComplexMatrix& m, double tol) {
  if (!m.square() || m.empty()) {
    throw DimensionError("density operator must be a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double herm = hermiticity_defect(m);
  if (herm > tol) {
    throw ValidationError("hermitian", herm,
                          "density operator is not Hermitian: max |M - M^dagger| = " +
                              std::to_string(herm));
  }
  const Complex tr = m.trace();
  const double trace_dev = std::abs(tr - Complex{1.0});
  if (trace_dev > tol) {
    throw ValidationError("unit-trace", trace_dev,
                          "density operator trace is " + std::to_string(tr.real()) +
                              " (off by " + std::to_string(trace_dev) + ")");
  }
  HermitianEigen eig = hermitian_eigen(m);
  const double min_ev = eig.values.front();
  if (min_ev < -tol) {
    throw ValidationError("positive", -min_ev,
                          "density operator has negative eigenvalue " + std::to_string(min_ev));
  }

  const std::size_t n = m.rows();
  const bool needs_clip = min_ev < 0.0 || eig.values.back() > 1.0;
  if (!needs_clip) {
    ComplexMatrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sym(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
    return DensityOperator(std::move(sym));
  }

  double sum = 0.0;
  for (double& lam : eig.values) {
    lam = std::clamp(lam, 0.0, 1.0);
    sum += lam;
  }
  ComplexMatrix rebuilt(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = eig.values[k] / sum;
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rebuilt(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
      }
    }
  }
  return DensityOperator(std::move(rebuilt));
}

DensityOperator assume_density(ComplexMatrix m) { return DensityOperator(std::move(m)); }

}  // namespace pdcap
