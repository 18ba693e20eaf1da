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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdcap/linalg.hpp"

namespace pdcap {

enum class ChannelLabel { kDephasing, kErasure, kCloning, kCustom };

std::string_view to_string(ChannelLabel label);
ChannelLabel parse_channel_label(std::string_view text);

// Structural facts about a channel. These are set by the constructors that
// know them analytically; nothing here is derived numerically.
struct ChannelTraits {
  bool degradable = false;
  bool antidegradable = false;
  bool entanglement_breaking = false;
};

inline constexpr double kCompletenessTolerance = 1e-9;

// max |I - sum_k A_k^dagger A_k| over entries.
double completeness_deficit(std::span<const ComplexMatrix> kraus, std::size_t dim_in);

/// A CPTP map given by Kraus operators A_k (each dim_out x dim_in) with
/// sum_k A_k^dagger A_k = I. Immutable once constructed.
class KrausChannel {
 public:
  KrausChannel(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> kraus,
               ChannelLabel label = ChannelLabel::kCustom, std::vector<double> params = {},
               ChannelTraits traits = {});

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  std::size_t num_kraus() const noexcept { return kraus_.size(); }
  std::span<const ComplexMatrix> kraus() const noexcept { return kraus_; }
  ChannelLabel label() const noexcept { return label_; }
  std::span<const double> params() const noexcept { return params_; }
  const ChannelTraits& traits() const noexcept { return traits_; }

  // N(rho), dim_out x dim_out.
  ComplexMatrix apply(const ComplexMatrix& rho) const;
  // Complementary channel, num_kraus x num_kraus: [N^c(rho)]_{jk} = Tr(A_j rho A_k^dagger).
  ComplexMatrix apply_complement(const ComplexMatrix& rho) const;

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> kraus_;
  ChannelLabel label_;
  std::vector<double> params_;
  ChannelTraits traits_;
};

/// Qubit dephasing N_p(rho) = (1-p) rho + p Delta(rho), realised with Kraus
/// operators sqrt(1-p/2) I and sqrt(p/2) Z. p = 1 is the completely
/// dephasing (entanglement-breaking) channel.
KrausChannel make_dephasing(double p);

/// Qubit erasure channel with output basis |0>, |1>, |e> (flag at index 2).
/// Kraus operators sqrt(eps)|e><0|, sqrt(eps)|e><1|, sqrt(1-eps)(|0><0|+|1><1|),
/// so the isometric extension hands Eve the input with probability eps and
/// the flag otherwise.
KrausChannel make_erasure(double eps);

/// Universal 1->N cloner on the (N+1)-level symmetric subspace basis
/// |i> = |N-i, i>. Kraus operator i in [0, N) is
/// (sqrt(N-i)|i><0| + sqrt(i+1)|i+1><1|) / sqrt(N(N+1)/2).
KrausChannel make_cloning(int n);

KrausChannel make_identity(std::size_t dim);

/// Measure in the computational basis and prepare prepared[j] on outcome j.
/// Entanglement-breaking. The prepared kets are normalized here.
KrausChannel make_measure_prepare(std::span<const std::vector<Complex>> prepared);

struct Isometry {
  std::size_t dim_in;
  std::size_t dim_b;
  std::size_t dim_e;
  ComplexMatrix matrix;  // (dim_b * dim_e) x dim_in, B most significant
};

/// V = sum_k A_k ⊗ |k>_E, so dim_E equals the number of Kraus operators.
Isometry isometric_extension(const KrausChannel& ch);

struct Evolution {
  DensityOperator rho_b;
  DensityOperator rho_e;
  DensityOperator rho_be;
};

Evolution evolve(const KrausChannel& ch, const DensityOperator& rho_in);

/// Kraus set {A_i ⊗ B_j}, i-major.
KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b);

/// Parses the channel document
///   {"dim_in": d, "dim_out": d', "kraus": [[[re, im], ...], ...],
///    "label": "...", "params": [...]}
/// where each Kraus operator is a row-major list of dim_out*dim_in complex
/// pairs (a nested list of rows is also accepted).
KrausChannel load_channel(std::string_view document);
KrausChannel load_channel_file(const std::filesystem::path& path);
std::string channel_to_json(const KrausChannel& ch);

}  // namespace pdcap
