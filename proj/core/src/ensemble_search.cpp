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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pdcap/diagnostics.hpp"
#include "pdcap/entropy.hpp"
#include "pdcap/error.hpp"
#include "pdcap/rng.hpp"
#include "pdcap/tradeoff.hpp"

namespace pdcap {
namespace {

constexpr double kRejected = -std::numeric_limits<double>::infinity();
constexpr double kImprovement = 1e-12;
constexpr double kDegenerate = 1e-300;

double entropy_of(const ComplexMatrix& m) {
  if (m.rows() == 1) return 0.0;
  return spectrum_entropy(detail::eigenvalues_of_hermitian(m));
}

void mix_into(ComplexMatrix& out, double weight, const ComplexMatrix& part) {
  auto dst = out.data();
  const auto src = part.data();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += weight * src[k];
}

void clear(ComplexMatrix& m) { std::fill(m.data().begin(), m.data().end(), Complex(0.0)); }

// Parameter vector: nx*ny amplitudes q (p_i = q_i^2 / |q|^2) followed by one
// dim x rank complex factor F per branch (rho_i = F F^dagger / tr), stored as
// interleaved (re, im). Updates touch one coordinate and recompute only the
// branch, its X-group and the global averages.
class IncrementalEvaluator {
 public:
  IncrementalEvaluator(const KrausChannel& ch, const EnsembleObjective& objective, std::size_t nx,
                       std::size_t ny, bool pure)
      : objective_(objective),
        nx_(nx),
        ny_(ny),
        n_(nx * ny),
        d_(ch.dim_in()),
        db_(ch.dim_out()),
        de_(ch.num_kraus()),
        rank_(pure ? 1 : ch.dim_in()),
        block_(2 * d_ * rank_),
        pure_(pure),
        kraus_(ch.kraus().begin(), ch.kraus().end()),
        params_(n_ + n_ * block_, 0.0),
        probs_(n_, 0.0),
        branches_(n_, Branch(db_, de_, d_)),
        groups_(nx_, Group(db_, de_, d_)),
        global_b_(db_, db_),
        global_e_(de_, de_),
        factor_(d_, rank_) {}

  std::size_t num_params() const { return params_.size(); }
  double param(std::size_t k) const { return params_[k]; }
  const std::vector<double>& params() const { return params_; }

  double load(std::span<const double> params) {
    std::copy(params.begin(), params.end(), params_.begin());
    for (std::size_t i = 0; i < n_; ++i) compute_branch(i);
    if (!compute_probs()) return value_ = kRejected;
    for (std::size_t x = 0; x < nx_; ++x) compute_group(x);
    compute_global();
    return value_ = objective_value();
  }

  // Sets coordinate k and returns the new objective; follow with commit() or
  // revert().
  double update(std::size_t k, double v) {
    saved_param_index_ = k;
    saved_param_ = params_[k];
    saved_value_ = value_;
    params_[k] = v;
    if (k < n_) {
      saved_kind_ = Kind::kProbability;
      saved_probs_ = probs_;
      saved_marginals_.resize(nx_);
      for (std::size_t x = 0; x < nx_; ++x) saved_marginals_[x] = groups_[x].px;
      save_group(k / ny_);
      save_global();
      if (!compute_probs()) return value_ = kRejected;
      for (std::size_t x = 0; x < nx_; ++x) groups_[x].px = marginal(x);
      compute_group(k / ny_);
    } else {
      saved_kind_ = Kind::kState;
      const std::size_t i = (k - n_) / block_;
      saved_branch_index_ = i;
      saved_branch_ = branches_[i];
      save_group(i / ny_);
      save_global();
      if (!compute_branch(i)) return value_ = kRejected;
      compute_group(i / ny_);
    }
    compute_global();
    return value_ = objective_value();
  }

  void commit() {}

  void revert() {
    params_[saved_param_index_] = saved_param_;
    value_ = saved_value_;
    if (saved_kind_ == Kind::kProbability) {
      probs_ = saved_probs_;
      for (std::size_t x = 0; x < nx_; ++x) groups_[x].px = saved_marginals_[x];
    } else {
      branches_[saved_branch_index_] = saved_branch_;
    }
    groups_[saved_group_index_] = saved_group_;
    global_b_ = saved_global_b_;
    global_e_ = saved_global_e_;
    h_b_ = saved_h_b_;
    h_e_ = saved_h_e_;
  }

  double value() const { return value_; }

  CqEntropies entropies() const {
    CqEntropies h;
    h.h_b = h_b_;
    h.h_e = h_e_;
    for (std::size_t i = 0; i < n_; ++i) {
      h.h_b_xy += probs_[i] * branches_[i].h_b;
      h.h_e_xy += probs_[i] * branches_[i].h_e;
      h.h_in_xy += probs_[i] * branches_[i].h_in;
    }
    for (const Group& g : groups_) {
      h.h_b_x += g.px * g.h_b;
      h.h_e_x += g.px * g.h_e;
      h.h_in_x += g.px * g.h_in;
    }
    return h;
  }

  // Ensemble described by the current parameters.
  CqEnsemble ensemble() const {
    std::vector<DensityOperator> states;
    states.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      ComplexMatrix f(d_, rank_);
      read_factor(i, f);
      ComplexMatrix rho = f * f.adjoint();
      rho *= Complex(1.0 / rho.trace().real());
      states.push_back(validate_density(rho));
    }
    return CqEnsemble(nx_, ny_, ProbDist(probs_), std::move(states));
  }

  // Parameters reproducing `ens` exactly (up to the rank of the factor).
  std::vector<double> encode(const CqEnsemble& ens) const {
    if (ens.nx() != nx_ || ens.ny() != ny_ || ens.dim() != d_) {
      throw DimensionError("warm start: ensemble shape (" + std::to_string(ens.nx()) + ", " +
                           std::to_string(ens.ny()) + ", dim " + std::to_string(ens.dim()) +
                           ") does not match the search");
    }
    std::vector<double> out(params_.size(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = std::sqrt(ens.probs()[i]);
      const HermitianEigen eig = hermitian_eigen(ens.states()[i].matrix());
      double* dst = out.data() + n_ + i * block_;
      for (std::size_t c = 0; c < rank_; ++c) {
        const std::size_t col = d_ - 1 - c;  // largest eigenvalues first
        const double scale = std::sqrt(std::max(eig.values[col], 0.0));
        for (std::size_t r = 0; r < d_; ++r) {
          const Complex z = scale * eig.vectors(r, col);
          dst[2 * (r * rank_ + c)] = z.real();
          dst[2 * (r * rank_ + c) + 1] = z.imag();
        }
      }
    }
    return out;
  }

 private:
  enum class Kind { kProbability, kState };

  struct Branch {
    Branch(std::size_t db, std::size_t de, std::size_t d) : b(db, db), e(de, de), in(d, d) {}
    ComplexMatrix b, e, in;
    double h_b = 0.0, h_e = 0.0, h_in = 0.0;
  };

  struct Group {
    Group(std::size_t db, std::size_t de, std::size_t d) : b(db, db), e(de, de), in(d, d) {}
    ComplexMatrix b, e, in;
    double px = 0.0;
    double h_b = 0.0, h_e = 0.0, h_in = 0.0;
  };

  void read_factor(std::size_t i, ComplexMatrix& f) const {
    const double* src = params_.data() + n_ + i * block_;
    auto dst = f.data();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = Complex(src[2 * k], src[2 * k + 1]);
  }

  bool compute_branch(std::size_t i) {
    Branch& br = branches_[i];
    read_factor(i, factor_);
    double trace = 0.0;
    for (const Complex& z : factor_.data()) trace += std::norm(z);
    if (trace < kDegenerate) return false;
    const double inv = 1.0 / trace;

    clear(br.b);
    clear(br.e);
    // W_k = A_k F, kept for all k to fill the environment block.
    outputs_.resize(de_ * db_ * rank_);
    for (std::size_t k = 0; k < de_; ++k) {
      const ComplexMatrix& a = kraus_[k];
      Complex* w = outputs_.data() + k * db_ * rank_;
      for (std::size_t r = 0; r < db_; ++r) {
        for (std::size_t c = 0; c < rank_; ++c) {
          Complex acc(0.0);
          for (std::size_t m = 0; m < d_; ++m) acc += a(r, m) * factor_(m, c);
          w[r * rank_ + c] = acc;
        }
      }
      for (std::size_t r = 0; r < db_; ++r) {
        for (std::size_t s = 0; s <= r; ++s) {
          Complex acc(0.0);
          for (std::size_t c = 0; c < rank_; ++c) acc += w[r * rank_ + c] * std::conj(w[s * rank_ + c]);
          br.b(r, s) += acc * inv;
        }
      }
    }
    for (std::size_t r = 0; r < db_; ++r) {
      for (std::size_t s = r + 1; s < db_; ++s) br.b(r, s) = std::conj(br.b(s, r));
    }
    const std::size_t len = db_ * rank_;
    for (std::size_t j = 0; j < de_; ++j) {
      for (std::size_t l = 0; l <= j; ++l) {
        Complex acc(0.0);
        const Complex* wj = outputs_.data() + j * len;
        const Complex* wl = outputs_.data() + l * len;
        for (std::size_t t = 0; t < len; ++t) acc += wj[t] * std::conj(wl[t]);
        br.e(j, l) = acc * inv;
        br.e(l, j) = std::conj(acc * inv);
      }
    }

    if (pure_) {
      br.h_b = db_ <= de_ ? entropy_of(br.b) : entropy_of(br.e);
      br.h_e = br.h_b;
      br.h_in = 0.0;
    } else {
      br.h_b = entropy_of(br.b);
      br.h_e = entropy_of(br.e);
      if (objective_.needs_input) {
        for (std::size_t r = 0; r < d_; ++r) {
          for (std::size_t s = 0; s < d_; ++s) {
            Complex acc(0.0);
            for (std::size_t c = 0; c < rank_; ++c) acc += factor_(r, c) * std::conj(factor_(s, c));
            br.in(r, s) = acc * inv;
          }
        }
        br.h_in = entropy_of(br.in);
      }
    }
    return true;
  }

  bool compute_probs() {
    double total = 0.0;
    for (std::size_t i = 0; i < n_; ++i) total += params_[i] * params_[i];
    if (total < kDegenerate) return false;
    for (std::size_t i = 0; i < n_; ++i) probs_[i] = params_[i] * params_[i] / total;
    return true;
  }

  double marginal(std::size_t x) const {
    double px = 0.0;
    for (std::size_t y = 0; y < ny_; ++y) px += probs_[x * ny_ + y];
    return px;
  }

  void compute_group(std::size_t x) {
    Group& g = groups_[x];
    g.px = marginal(x);
    clear(g.b);
    clear(g.e);
    const bool with_input = objective_.needs_input && !pure_;
    if (with_input) clear(g.in);
    for (std::size_t y = 0; y < ny_; ++y) {
      const std::size_t i = x * ny_ + y;
      const double w = g.px > 0.0 ? probs_[i] / g.px : 1.0 / static_cast<double>(ny_);
      mix_into(g.b, w, branches_[i].b);
      mix_into(g.e, w, branches_[i].e);
      if (with_input) mix_into(g.in, w, branches_[i].in);
    }
    g.h_b = entropy_of(g.b);
    g.h_e = entropy_of(g.e);
    g.h_in = with_input ? entropy_of(g.in) : 0.0;
  }

  void compute_global() {
    clear(global_b_);
    for (const Group& g : groups_) mix_into(global_b_, g.px, g.b);
    h_b_ = entropy_of(global_b_);
    if (objective_.needs_global_e) {
      clear(global_e_);
      for (const Group& g : groups_) mix_into(global_e_, g.px, g.e);
      h_e_ = entropy_of(global_e_);
    }
  }

  void save_group(std::size_t x) {
    saved_group_index_ = x;
    saved_group_ = groups_[x];
  }

  void save_global() {
    saved_global_b_ = global_b_;
    saved_global_e_ = global_e_;
    saved_h_b_ = h_b_;
    saved_h_e_ = h_e_;
  }

  double objective_value() const { return objective_.value(entropies()); }

  const EnsembleObjective& objective_;
  std::size_t nx_, ny_, n_, d_, db_, de_, rank_, block_;
  bool pure_;
  std::vector<ComplexMatrix> kraus_;

  std::vector<double> params_;
  std::vector<double> probs_;
  std::vector<Branch> branches_;
  std::vector<Group> groups_;
  ComplexMatrix global_b_, global_e_;
  double h_b_ = 0.0, h_e_ = 0.0;
  double value_ = kRejected;

  ComplexMatrix factor_;
  std::vector<Complex> outputs_;

  Kind saved_kind_ = Kind::kState;
  std::size_t saved_param_index_ = 0;
  double saved_param_ = 0.0;
  double saved_value_ = kRejected;
  std::vector<double> saved_probs_;
  std::vector<double> saved_marginals_;
  std::size_t saved_branch_index_ = 0;
  Branch saved_branch_{1, 1, 1};
  std::size_t saved_group_index_ = 0;
  Group saved_group_{1, 1, 1};
  ComplexMatrix saved_global_b_, saved_global_e_;
  double saved_h_b_ = 0.0, saved_h_e_ = 0.0;
};

struct LocalOutcome {
  double value;
  bool converged;
};

// Coordinate pattern search with one adaptive step per coordinate: a step
// that improves the objective doubles, a step that fails in both directions
// halves.
LocalOutcome pattern_search(IncrementalEvaluator& ev, const SearchConfig& cfg,
                            std::uint64_t& evaluations) {
  const std::size_t dim = ev.num_params();
  std::vector<double> steps(dim, cfg.initial_step);
  double best = ev.value();
  for (int sweep = 0; sweep < cfg.iters; ++sweep) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (steps[k] < cfg.min_step) continue;
      const double x0 = ev.param(k);
      bool moved = false;
      for (const double dir : {1.0, -1.0}) {
        const double trial = ev.update(k, x0 + dir * steps[k]);
        ++evaluations;
        if (trial > best + kImprovement) {
          ev.commit();
          best = trial;
          moved = true;
          break;
        }
        ev.revert();
      }
      steps[k] = moved ? std::min(2.0 * steps[k], cfg.initial_step) : 0.5 * steps[k];
    }
    if (std::all_of(steps.begin(), steps.end(), [&](double s) { return s < cfg.min_step; })) {
      return {best, true};
    }
  }
  return {best, false};
}

std::vector<double> random_start(std::size_t n, std::size_t size, Rng& rng) {
  std::vector<double> x(size);
  for (std::size_t k = 0; k < size; ++k) {
    x[k] = rng.normal();
    if (k < n) x[k] = std::abs(x[k]) + 0.1;
  }
  return x;
}

}  // namespace

SearchResult maximize_ensemble(const KrausChannel& ch, const EnsembleObjective& objective,
                               std::size_t nx, std::size_t ny, bool pure,
                               const SearchConfig& cfg, std::span<const CqEnsemble> warm_starts) {
  check_config(cfg);
  if (nx == 0 || ny == 0) throw DomainError("maximize_ensemble: alphabet sizes must be positive");
  if (!objective.value) throw DomainError("maximize_ensemble: empty objective");

  IncrementalEvaluator ev(ch, objective, nx, ny, pure);
  double best = kRejected;
  std::vector<double> best_params;
  int best_restart = 0;
  bool all_converged = true;
  std::uint64_t evaluations = 0;

  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(restart_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    const std::size_t idx = static_cast<std::size_t>(r);
    const std::vector<double> start = idx < warm_starts.size()
                                          ? ev.encode(warm_starts[idx])
                                          : random_start(nx * ny, ev.num_params(), rng);
    ev.load(start);
    ++evaluations;
    const LocalOutcome out = pattern_search(ev, cfg, evaluations);
    all_converged = all_converged && out.converged;
    if (out.value > best) {
      best = out.value;
      best_params = ev.params();
      best_restart = r;
    }
  }
  if (best == kRejected) throw DomainError("maximize_ensemble: no admissible start point");

  ev.load(best_params);
  CqEnsemble ensemble = ev.ensemble();
  const CqEntropies entropies = evaluate_ensemble(ch, ensemble).entropies;
  if (!all_converged) {
    warn("search stopped at the sweep budget (iters=" + std::to_string(cfg.iters) +
         ") before every restart reached min_step");
  }
  return SearchResult{objective.value(entropies), std::move(ensemble), entropies, best_restart,
                      all_converged, evaluations};
}

}  // namespace pdcap
