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

#include "pdcap/channels.hpp"

#include <cmath>
#include <string>

#include "pdcap/error.hpp"

namespace pdcap {
namespace {

void require_unit_interval(double x, const char* name, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(who) + ": " + name + " = " + std::to_string(x) +
                      " outside [0,1]");
  }
}

}  // namespace

std::string_view to_string(ChannelLabel label) {
  switch (label) {
    case ChannelLabel::kDephasing: return "dephasing";
    case ChannelLabel::kErasure: return "erasure";
    case ChannelLabel::kCloning: return "cloning";
    case ChannelLabel::kCustom: return "custom";
  }
  return "custom";
}

ChannelLabel parse_channel_label(std::string_view text) {
  if (text == "dephasing") return ChannelLabel::kDephasing;
  if (text == "erasure") return ChannelLabel::kErasure;
  if (text == "cloning") return ChannelLabel::kCloning;
  if (text == "custom") return ChannelLabel::kCustom;
  throw ParseError("unknown channel label '" + std::string(text) + "'");
}

double completeness_deficit(std::span<const ComplexMatrix> kraus, std::size_t dim_in) {
  ComplexMatrix sum(dim_in, dim_in);
  for (const auto& a : kraus) {
    for (std::size_t i = 0; i < dim_in; ++i) {
      for (std::size_t j = 0; j < dim_in; ++j) {
        Complex acc = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) acc += std::conj(a(r, i)) * a(r, j);
        sum(i, j) += acc;
      }
    }
  }
  return max_abs_diff(sum, ComplexMatrix::identity(dim_in));
}

KrausChannel::KrausChannel(std::size_t dim_in, std::size_t dim_out,
                           std::vector<ComplexMatrix> kraus, ChannelLabel label,
                           std::vector<double> params, ChannelTraits traits)
    : dim_in_(dim_in),
      dim_out_(dim_out),
      kraus_(std::move(kraus)),
      label_(label),
      params_(std::move(params)),
      traits_(traits) {
  if (dim_in_ == 0 || dim_out_ == 0) throw DimensionError("KrausChannel: zero dimension");
  if (kraus_.empty()) throw DimensionError("KrausChannel: no Kraus operators");
  for (const auto& a : kraus_) {
    if (a.rows() != dim_out_ || a.cols() != dim_in_) {
      throw DimensionError("KrausChannel: Kraus operator is " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + ", expected " + std::to_string(dim_out_) +
                           "x" + std::to_string(dim_in_));
    }
  }
  const double deficit = completeness_deficit(kraus_, dim_in_);
  if (deficit > kCompletenessTolerance) {
    throw ValidationError("completeness", deficit,
                          "Kraus operators are not trace preserving: deficit " +
                              std::to_string(deficit));
  }
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
    throw DimensionError("KrausChannel::apply: state is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", channel input is " +
                         std::to_string(dim_in_));
  }
  ComplexMatrix out(dim_out_, dim_out_);
  for (const auto& a : kraus_) out += a * rho * a.adjoint();
  return out;
}

ComplexMatrix KrausChannel::apply_complement(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
    throw DimensionError("KrausChannel::apply_complement: dimension mismatch");
  }
  const std::size_t k = kraus_.size();
  std::vector<ComplexMatrix> a_rho;
  a_rho.reserve(k);
  for (const auto& a : kraus_) a_rho.push_back(a * rho);
  ComplexMatrix out(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      // Tr(A_j rho A_l^dagger) = sum_{r,c} (A_j rho)(r,c) conj(A_l(r,c))
      Complex acc = 0.0;
      const auto x = a_rho[j].data();
      const auto y = kraus_[l].data();
      for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
      out(j, l) = acc;
    }
  }
  return out;
}

KrausChannel make_dephasing(double p) {
  require_unit_interval(p, "p", "make_dephasing");
  const double a = std::sqrt(1.0 - p / 2.0);
  const double b = std::sqrt(p / 2.0);
  std::vector<ComplexMatrix> kraus{ComplexMatrix{{a, 0.0}, {0.0, a}},
                                   ComplexMatrix{{b, 0.0}, {0.0, -b}}};
  ChannelTraits traits{.degradable = true,
                       .antidegradable = p == 1.0,
                       .entanglement_breaking = p == 1.0};
  return KrausChannel(2, 2, std::move(kraus), ChannelLabel::kDephasing, {p}, traits);
}

KrausChannel make_erasure(double eps) {
  require_unit_interval(eps, "eps", "make_erasure");
  const double e = std::sqrt(eps);
  const double k = std::sqrt(1.0 - eps);
  std::vector<ComplexMatrix> kraus{
      ComplexMatrix{{0.0, 0.0}, {0.0, 0.0}, {e, 0.0}},
      ComplexMatrix{{0.0, 0.0}, {0.0, 0.0}, {0.0, e}},
      ComplexMatrix{{k, 0.0}, {0.0, k}, {0.0, 0.0}},
  };
  ChannelTraits traits{.degradable = eps <= 0.5,
                       .antidegradable = eps >= 0.5,
                       .entanglement_breaking = eps == 1.0};
  return KrausChannel(2, 3, std::move(kraus), ChannelLabel::kErasure, {eps}, traits);
}

KrausChannel make_cloning(int n) {
  if (n < 1) throw DomainError("make_cloning: N = " + std::to_string(n) + " must be >= 1");
  const std::size_t dim_out = static_cast<std::size_t>(n) + 1;
  const double norm = 1.0 / std::sqrt(n * (n + 1) / 2.0);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ComplexMatrix a(dim_out, 2);
    a(static_cast<std::size_t>(i), 0) = norm * std::sqrt(static_cast<double>(n - i));
    a(static_cast<std::size_t>(i) + 1, 1) = norm * std::sqrt(static_cast<double>(i + 1));
    kraus.push_back(std::move(a));
  }
  ChannelTraits traits{.degradable = true,
                       .antidegradable = false,
                       .entanglement_breaking = false};
  return KrausChannel(2, dim_out, std::move(kraus), ChannelLabel::kCloning,
                      {static_cast<double>(n)}, traits);
}

KrausChannel make_identity(std::size_t dim) {
  ChannelTraits traits{.degradable = true};
  return KrausChannel(dim, dim, {ComplexMatrix::identity(dim)}, ChannelLabel::kCustom, {},
                      traits);
}

KrausChannel make_measure_prepare(std::span<const std::vector<Complex>> prepared) {
  if (prepared.empty()) throw DomainError("make_measure_prepare: no prepared states");
  const std::size_t dim_in = prepared.size();
  const std::size_t dim_out = prepared.front().size();
  std::vector<ComplexMatrix> kraus;
  for (std::size_t j = 0; j < dim_in; ++j) {
    const auto& ket = prepared[j];
    if (ket.size() != dim_out) throw DimensionError("make_measure_prepare: ragged kets");
    double n2 = 0.0;
    for (const Complex& z : ket) n2 += std::norm(z);
    if (n2 == 0.0) throw DomainError("make_measure_prepare: zero ket");
    ComplexMatrix a(dim_out, dim_in);
    for (std::size_t r = 0; r < dim_out; ++r) a(r, j) = ket[r] / std::sqrt(n2);
    kraus.push_back(std::move(a));
  }
  ChannelTraits traits{.degradable = false,
                       .antidegradable = true,
                       .entanglement_breaking = true};
  return KrausChannel(dim_in, dim_out, std::move(kraus), ChannelLabel::kCustom, {}, traits);
}

Isometry isometric_extension(const KrausChannel& ch) {
  const std::size_t k = ch.num_kraus();
  Isometry v{ch.dim_in(), ch.dim_out(), k, ComplexMatrix(ch.dim_out() * k, ch.dim_in())};
  for (std::size_t e = 0; e < k; ++e) {
    const auto& a = ch.kraus()[e];
    for (std::size_t b = 0; b < ch.dim_out(); ++b) {
      for (std::size_t i = 0; i < ch.dim_in(); ++i) v.matrix(b * k + e, i) = a(b, i);
    }
  }
  return v;
}

Evolution evolve(const KrausChannel& ch, const DensityOperator& rho_in) {
  if (rho_in.dim() != ch.dim_in()) {
    throw DimensionError("evolve: state dimension " + std::to_string(rho_in.dim()) +
                         " but channel input dimension " + std::to_string(ch.dim_in()));
  }
  const Isometry v = isometric_extension(ch);
  ComplexMatrix be = conjugate(v.matrix, rho_in.matrix());
  const std::size_t dims[] = {v.dim_b, v.dim_e};
  const std::size_t keep_b[] = {0};
  const std::size_t keep_e[] = {1};
  ComplexMatrix b = partial_trace(be, dims, keep_b);
  ComplexMatrix e = partial_trace(be, dims, keep_e);
  return Evolution{assume_density(std::move(b)), assume_density(std::move(e)),
                   assume_density(std::move(be))};
}

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.num_kraus() * b.num_kraus());
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) kraus.push_back(tensor_product(ka, kb));
  }
  std::vector<double> params(a.params().begin(), a.params().end());
  params.insert(params.end(), b.params().begin(), b.params().end());
  ChannelTraits traits{
      .degradable = a.traits().degradable && b.traits().degradable,
      .antidegradable = a.traits().antidegradable && b.traits().antidegradable,
      .entanglement_breaking =
          a.traits().entanglement_breaking && b.traits().entanglement_breaking,
  };
  return KrausChannel(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(), std::move(kraus),
                      ChannelLabel::kCustom, std::move(params), traits);
}

}  // namespace pdcap
