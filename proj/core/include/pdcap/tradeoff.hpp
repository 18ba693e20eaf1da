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
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "pdcap/channels.hpp"
#include "pdcap/entropy.hpp"
#include "pdcap/linalg.hpp"
#include "pdcap/rng.hpp"

namespace pdcap {

/// Classical-quantum input ensemble {p(x,y), rho_{x,y}}. Branch (x, y) is
/// stored at flat index x * ny + y.
class CqEnsemble {
 public:
  CqEnsemble(std::size_t nx, std::size_t ny, ProbDist probs, std::vector<DensityOperator> states);

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t dim() const noexcept { return states_.front().dim(); }
  const ProbDist& probs() const noexcept { return probs_; }
  double prob(std::size_t x, std::size_t y) const { return probs_[x * ny_ + y]; }
  const DensityOperator& state(std::size_t x, std::size_t y) const { return states_[x * ny_ + y]; }
  std::span<const DensityOperator> states() const noexcept { return states_; }

 private:
  std::size_t nx_;
  std::size_t ny_;
  ProbDist probs_;
  std::vector<DensityOperator> states_;
};

/// Conditional entropies of the state sum_{x,y} p(x,y) |x,y><x,y| ⊗ U rho_{x,y} U^dagger.
struct CqEntropies {
  double h_b = 0.0;      // H(B)
  double h_b_x = 0.0;    // H(B|X)
  double h_b_xy = 0.0;   // H(B|XY)
  double h_e = 0.0;      // H(E)
  double h_e_x = 0.0;    // H(E|X)
  double h_e_xy = 0.0;   // H(E|XY)
  double h_in_x = 0.0;   // H(A'|X) of the averaged inputs
  double h_in_xy = 0.0;  // H(A'|XY)

  double holevo() const { return h_b - h_b_x; }             // I(X;B)
  double bob_given_x() const { return h_b_x - h_b_xy; }     // I(Y;B|X)
  double eve_given_x() const { return h_e_x - h_e_xy; }     // I(Y;E|X)
  double joint_to_bob() const { return h_b - h_b_xy; }      // I(YX;B)
  double coherent_given_x() const { return h_b_x - h_e_x; }  // H(B|X) - H(E|X)
};

struct CqEvaluation {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> probs;             // p(x,y), flat
  std::vector<double> marginal_x;        // p(x)
  std::vector<ComplexMatrix> rho_b_xy;   // per branch
  std::vector<ComplexMatrix> rho_e_xy;
  std::vector<ComplexMatrix> rho_b_x;    // sum_y p(y|x) rho_b_xy
  std::vector<ComplexMatrix> rho_e_x;
  ComplexMatrix rho_b;
  ComplexMatrix rho_e;
  CqEntropies entropies;
};

CqEvaluation evaluate_ensemble(const KrausChannel& ch, const CqEnsemble& ens);

struct TradeoffWeights {
  double lambda = 0.0;
  double mu = 0.0;
};

// Throws DomainError on negative or non-finite weights.
void check_weights(const TradeoffWeights& w);

struct RegionQuantities {
  double rp = 0.0;   // I(YX;B)
  double ps = 0.0;   // I(Y;B|X) - I(Y;E|X)
  double rps = 0.0;  // I(YX;B) - I(Y;E|X)
};

RegionQuantities region_quantities(const CqEntropies& h);
RegionQuantities region_quantities(const CqEvaluation& ev);

/// Linear functional rp_coef * rp + ps_coef * ps + rps_coef * rps.
struct WeightVector {
  double rp_coef = 1.0;
  double ps_coef = 0.0;
  double rps_coef = 0.0;

  static WeightVector from(const TradeoffWeights& w) { return {1.0, w.lambda, w.mu}; }
  double apply(const RegionQuantities& q) const {
    return rp_coef * q.rp + ps_coef * q.ps + rps_coef * q.rps;
  }
};

// rp + lambda * ps + mu * rps.
double objective_p(const CqEvaluation& ev, const TradeoffWeights& w);
double objective_p(const CqEntropies& h, const TradeoffWeights& w);

// ---------------------------------------------------------------------------
// Ensemble constructors

/// Qubit ensemble with X uniform on {0,1}: branch x=0 sends |0> with weight
/// nu and |1> with weight 1-nu, branch x=1 the reverse. Its region quantities
/// realise the closed-form boundaries of the dephasing, erasure and cloning
/// families.
CqEnsemble boundary_ensemble(double nu);

/// Product ensemble over (x1 x2, y1 y2) with states rho ⊗ sigma.
CqEnsemble tensor_ensembles(const CqEnsemble& a, const CqEnsemble& b);

/// Qubit-only. Appends a uniform Pauli index j to X: p(x,j,y) = p(x,y)/4 and
/// state sigma_j rho sigma_j. nx grows by a factor of four.
CqEnsemble pauli_symmetrize(const CqEnsemble& ens);

/// Ensemble with probabilities q_i^2 / sum q^2 and states F F^dagger / tr from
/// standard normal q and F (F has `rank` columns).
CqEnsemble random_ensemble(std::size_t dim, std::size_t nx, std::size_t ny, std::size_t rank,
                           Rng& rng);

// ---------------------------------------------------------------------------
// Numerical search

enum class StateModel {
  kAuto,   // pure branches for degradable channels, mixed otherwise
  kPure,
  kMixed,
};

struct SearchConfig {
  std::uint64_t seed = 0;
  int restarts = 50;
  int iters = 200;       // pattern-search sweeps per restart
  std::size_t nx = 0;    // 0: dim_in^2
  std::size_t ny = 0;    // 0: dim_in^2
  StateModel states = StateModel::kAuto;
  double initial_step = 0.5;
  double min_step = 1e-6;
};

// Throws DomainError on non-positive restarts/iters or bad steps.
void check_config(const SearchConfig& cfg);

/// Reads {seed, restarts, iters, nx, ny} (all optional) over `base`.
/// Throws ParseError on malformed input, DomainError on invalid values.
SearchConfig parse_search_config(std::string_view document, SearchConfig base = {});

struct SearchResult {
  double value = 0.0;
  CqEnsemble ensemble;
  CqEntropies entropies;
  int best_restart = 0;
  bool converged = false;  // every restart reached min_step within iters
  std::uint64_t evaluations = 0;
};

/// Objective on the entropies of a candidate ensemble. The flags name the
/// entropies the functor reads beyond those of B and the X-conditioned E.
struct EnsembleObjective {
  std::function<double(const CqEntropies&)> value;
  bool needs_global_e = false;
  bool needs_input = false;
};

/// Maximizes `objective` over ensembles with alphabet sizes (nx, ny), given
/// explicitly (the config's nx/ny are ignored). Restart r starts from
/// warm_starts[r] when present, from a seeded random point otherwise.
SearchResult maximize_ensemble(const KrausChannel& ch, const EnsembleObjective& objective,
                               std::size_t nx, std::size_t ny, bool pure,
                               const SearchConfig& cfg,
                               std::span<const CqEnsemble> warm_starts = {});

SearchResult maximize_weighted(const KrausChannel& ch, const WeightVector& w,
                               const SearchConfig& cfg = {},
                               std::span<const CqEnsemble> warm_starts = {});

/// max over ensembles of rp + lambda * ps + mu * rps.
SearchResult maximize_p(const KrausChannel& ch, const TradeoffWeights& w,
                        const SearchConfig& cfg = {});

/// Public-private objective max rps + mu * ps.
SearchResult public_private_p(const KrausChannel& ch, double mu, const SearchConfig& cfg = {});

/// max I(X;B) over pure-state ensembles with cfg.nx letters.
SearchResult holevo_capacity(const KrausChannel& ch, const SearchConfig& cfg = {});

/// max I(Y;B) - I(Y;E) over ensembles with cfg.ny letters (states per cfg.states).
SearchResult private_information(const KrausChannel& ch, const SearchConfig& cfg = {});

/// max I(X;B) + (1+mu)[H(B|X) - H(E|X)] over ensembles of mixed inputs.
SearchResult cq_tradeoff_f(const KrausChannel& ch, double mu, const SearchConfig& cfg = {});

/// max I(AX;B) + lambda I(A>BX) + mu [I(X;B) + I(A>BX)] with purified inputs.
SearchResult quantum_dynamic_d(const KrausChannel& ch, const TradeoffWeights& w,
                               const SearchConfig& cfg = {});

/// (1 + mu) * holevo. Warns when the channel is not known to be antidegradable.
double antidegradable_value(const KrausChannel& ch, const TradeoffWeights& w, double holevo);

}  // namespace pdcap
