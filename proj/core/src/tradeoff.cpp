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

#include "pdcap/tradeoff.hpp"

#include <array>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "pdcap/diagnostics.hpp"
#include "pdcap/error.hpp"

namespace pdcap {
namespace {

std::size_t letters_or_default(std::size_t requested, std::size_t dim) {
  return requested == 0 ? dim * dim : requested;
}

bool use_pure_states(const KrausChannel& ch, StateModel model) {
  switch (model) {
    case StateModel::kPure:
      return true;
    case StateModel::kMixed:
      return false;
    case StateModel::kAuto:
      break;
  }
  return ch.traits().degradable;
}

ComplexMatrix mix(std::span<const double> weights, std::span<const ComplexMatrix> parts) {
  ComplexMatrix out(parts.front().rows(), parts.front().cols());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (weights[i] != 0.0) out += parts[i] * Complex(weights[i]);
  }
  return out;
}

}  // namespace

CqEnsemble::CqEnsemble(std::size_t nx, std::size_t ny, ProbDist probs,
                       std::vector<DensityOperator> states)
    : nx_(nx), ny_(ny), probs_(std::move(probs)), states_(std::move(states)) {
  if (nx_ == 0 || ny_ == 0) throw DomainError("CqEnsemble: empty alphabet");
  if (probs_.size() != nx_ * ny_ || states_.size() != nx_ * ny_) {
    throw DimensionError("CqEnsemble: expected " + std::to_string(nx_ * ny_) +
                         " branches, got " + std::to_string(probs_.size()) + " weights and " +
                         std::to_string(states_.size()) + " states");
  }
  for (const auto& s : states_) {
    if (s.dim() != states_.front().dim()) throw DimensionError("CqEnsemble: mixed state sizes");
  }
}

CqEvaluation evaluate_ensemble(const KrausChannel& ch, const CqEnsemble& ens) {
  if (ens.dim() != ch.dim_in()) {
    throw DimensionError("evaluate_ensemble: states of size " + std::to_string(ens.dim()) +
                         " for channel input " + std::to_string(ch.dim_in()));
  }
  CqEvaluation ev;
  ev.nx = ens.nx();
  ev.ny = ens.ny();
  const auto weights = ens.probs().weights();
  ev.probs.assign(weights.begin(), weights.end());
  ev.marginal_x.assign(ev.nx, 0.0);

  CqEntropies& h = ev.entropies;
  std::vector<ComplexMatrix> inputs_x;
  for (std::size_t x = 0; x < ev.nx; ++x) {
    std::vector<double> cond(ev.ny);
    std::vector<ComplexMatrix> inputs;
    for (std::size_t y = 0; y < ev.ny; ++y) {
      const std::size_t i = x * ev.ny + y;
      const ComplexMatrix& rho = ens.states()[i].matrix();
      ev.rho_b_xy.push_back(ch.apply(rho));
      ev.rho_e_xy.push_back(ch.apply_complement(rho));
      inputs.push_back(rho);
      cond[y] = ev.probs[i];
      ev.marginal_x[x] += ev.probs[i];
      h.h_b_xy += ev.probs[i] * entropy_unchecked(ev.rho_b_xy.back());
      h.h_e_xy += ev.probs[i] * entropy_unchecked(ev.rho_e_xy.back());
      h.h_in_xy += ev.probs[i] * entropy_unchecked(rho);
    }
    const double px = ev.marginal_x[x];
    if (px > 0.0) {
      for (double& c : cond) c /= px;
    } else {
      cond.assign(ev.ny, 1.0 / static_cast<double>(ev.ny));
    }
    const std::span<const ComplexMatrix> bs(ev.rho_b_xy.data() + x * ev.ny, ev.ny);
    const std::span<const ComplexMatrix> es(ev.rho_e_xy.data() + x * ev.ny, ev.ny);
    ev.rho_b_x.push_back(mix(cond, bs));
    ev.rho_e_x.push_back(mix(cond, es));
    inputs_x.push_back(mix(cond, inputs));
    h.h_b_x += px * entropy_unchecked(ev.rho_b_x.back());
    h.h_e_x += px * entropy_unchecked(ev.rho_e_x.back());
    h.h_in_x += px * entropy_unchecked(inputs_x.back());
  }
  ev.rho_b = mix(ev.marginal_x, ev.rho_b_x);
  ev.rho_e = mix(ev.marginal_x, ev.rho_e_x);
  h.h_b = entropy_unchecked(ev.rho_b);
  h.h_e = entropy_unchecked(ev.rho_e);
  return ev;
}

void check_weights(const TradeoffWeights& w) {
  if (!std::isfinite(w.lambda) || !std::isfinite(w.mu) || w.lambda < 0.0 || w.mu < 0.0) {
    throw DomainError("trade-off weights must be finite and non-negative (lambda=" +
                      std::to_string(w.lambda) + ", mu=" + std::to_string(w.mu) + ")");
  }
}

RegionQuantities region_quantities(const CqEntropies& h) {
  const double rp = h.joint_to_bob();
  return {rp, h.bob_given_x() - h.eve_given_x(), rp - h.eve_given_x()};
}

RegionQuantities region_quantities(const CqEvaluation& ev) {
  return region_quantities(ev.entropies);
}

double objective_p(const CqEntropies& h, const TradeoffWeights& w) {
  const RegionQuantities q = region_quantities(h);
  return q.rp + w.lambda * q.ps + w.mu * q.rps;
}

double objective_p(const CqEvaluation& ev, const TradeoffWeights& w) {
  return objective_p(ev.entropies, w);
}

CqEnsemble boundary_ensemble(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw DomainError("boundary_ensemble: nu=" + std::to_string(nu) + " outside [0,1]");
  }
  const auto zero = assume_density(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
  const auto one = assume_density(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}});
  return CqEnsemble(2, 2, ProbDist{nu / 2, (1 - nu) / 2, (1 - nu) / 2, nu / 2},
                    {zero, one, zero, one});
}

CqEnsemble tensor_ensembles(const CqEnsemble& a, const CqEnsemble& b) {
  const std::size_t nx = a.nx() * b.nx();
  const std::size_t ny = a.ny() * b.ny();
  std::vector<double> probs(nx * ny);
  std::vector<DensityOperator> states;
  states.reserve(nx * ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const std::size_t x1 = x / b.nx(), x2 = x % b.nx();
      const std::size_t y1 = y / b.ny(), y2 = y % b.ny();
      probs[x * ny + y] = a.prob(x1, y1) * b.prob(x2, y2);
      states.push_back(
          assume_density(tensor_product(a.state(x1, y1).matrix(), b.state(x2, y2).matrix())));
    }
  }
  return CqEnsemble(nx, ny, ProbDist(std::move(probs)), std::move(states));
}

CqEnsemble pauli_symmetrize(const CqEnsemble& ens) {
  if (ens.dim() != 2) throw DimensionError("pauli_symmetrize: qubit ensembles only");
  const Complex i(0.0, 1.0);
  const std::array<ComplexMatrix, 4> paulis = {
      ComplexMatrix::identity(2), ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -i}, {i, 0.0}}, ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}};
  const std::size_t nx = 4 * ens.nx();
  const std::size_t ny = ens.ny();
  std::vector<double> probs(nx * ny);
  std::vector<DensityOperator> states;
  states.reserve(nx * ny);
  for (std::size_t x = 0; x < ens.nx(); ++x) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t y = 0; y < ny; ++y) {
        probs[(4 * x + j) * ny + y] = ens.prob(x, y) / 4.0;
        states.push_back(assume_density(conjugate(paulis[j], ens.state(x, y).matrix())));
      }
    }
  }
  return CqEnsemble(nx, ny, ProbDist(std::move(probs)), std::move(states));
}

CqEnsemble random_ensemble(std::size_t dim, std::size_t nx, std::size_t ny, std::size_t rank,
                           Rng& rng) {
  if (dim == 0 || rank == 0) throw DomainError("random_ensemble: zero dimension or rank");
  const std::size_t n = nx * ny;
  std::vector<double> probs(n);
  double total = 0.0;
  for (double& q : probs) {
    q = rng.normal();
    q *= q;
    total += q;
  }
  for (double& q : probs) q /= total;
  std::vector<DensityOperator> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix f(dim, rank);
    for (auto& z : f.data()) {
      const double re = rng.normal();
      z = Complex(re, rng.normal());
    }
    ComplexMatrix rho = f * f.adjoint();
    rho *= Complex(1.0 / rho.trace().real());
    states.push_back(validate_density(rho));
  }
  return CqEnsemble(nx, ny, ProbDist(std::move(probs)), std::move(states));
}

void check_config(const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw DomainError("search config: restarts must be positive");
  if (cfg.iters < 1) throw DomainError("search config: iters must be positive");
  if (!(cfg.initial_step > 0.0) || !(cfg.min_step > 0.0) || cfg.min_step > cfg.initial_step) {
    throw DomainError("search config: need 0 < min_step <= initial_step");
  }
}

SearchConfig parse_search_config(std::string_view document, SearchConfig base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("search config: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("search config: expected an object");
  auto read_count = [](const nlohmann::json& v, const char* key) -> long long {
    if (!v.is_number_integer()) throw ParseError(std::string("search config: ") + key +
                                                 " must be an integer");
    const long long n = v.get<long long>();
    if (n < 0) throw DomainError(std::string("search config: ") + key + " must be >= 0");
    return n;
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer()) {
        throw ParseError("search config: seed must be an integer");
      }
      base.seed = value.is_number_unsigned() ? value.get<std::uint64_t>()
                                             : static_cast<std::uint64_t>(read_count(value, "seed"));
    } else if (key == "restarts") {
      base.restarts = static_cast<int>(read_count(value, "restarts"));
    } else if (key == "iters") {
      base.iters = static_cast<int>(read_count(value, "iters"));
    } else if (key == "nx") {
      base.nx = static_cast<std::size_t>(read_count(value, "nx"));
    } else if (key == "ny") {
      base.ny = static_cast<std::size_t>(read_count(value, "ny"));
    } else if (key == "states") {
      const std::string s = value.is_string() ? value.get<std::string>() : "";
      if (s == "auto") {
        base.states = StateModel::kAuto;
      } else if (s == "pure") {
        base.states = StateModel::kPure;
      } else if (s == "mixed") {
        base.states = StateModel::kMixed;
      } else {
        throw ParseError("search config: states must be \"auto\", \"pure\" or \"mixed\"");
      }
    } else {
      throw ParseError("search config: unknown key \"" + key + "\"");
    }
  }
  check_config(base);
  return base;
}

SearchResult maximize_weighted(const KrausChannel& ch, const WeightVector& w,
                               const SearchConfig& cfg, std::span<const CqEnsemble> warm_starts) {
  EnsembleObjective objective{
      [w](const CqEntropies& h) { return w.apply(region_quantities(h)); }, false, false};
  const std::size_t d = ch.dim_in();
  return maximize_ensemble(ch, objective, letters_or_default(cfg.nx, d),
                           letters_or_default(cfg.ny, d), use_pure_states(ch, cfg.states), cfg,
                           warm_starts);
}

SearchResult maximize_p(const KrausChannel& ch, const TradeoffWeights& w,
                        const SearchConfig& cfg) {
  check_weights(w);
  return maximize_weighted(ch, WeightVector::from(w), cfg);
}

SearchResult public_private_p(const KrausChannel& ch, double mu, const SearchConfig& cfg) {
  check_weights({0.0, mu});
  return maximize_weighted(ch, WeightVector{0.0, mu, 1.0}, cfg);
}

SearchResult holevo_capacity(const KrausChannel& ch, const SearchConfig& cfg) {
  EnsembleObjective objective{[](const CqEntropies& h) { return h.holevo(); }, false, false};
  return maximize_ensemble(ch, objective, letters_or_default(cfg.nx, ch.dim_in()), 1, true, cfg);
}

SearchResult private_information(const KrausChannel& ch, const SearchConfig& cfg) {
  EnsembleObjective objective{
      [](const CqEntropies& h) { return h.bob_given_x() - h.eve_given_x(); }, false, false};
  return maximize_ensemble(ch, objective, 1, letters_or_default(cfg.ny, ch.dim_in()),
                           use_pure_states(ch, cfg.states), cfg);
}

SearchResult cq_tradeoff_f(const KrausChannel& ch, double mu, const SearchConfig& cfg) {
  check_weights({0.0, mu});
  EnsembleObjective objective{
      [mu](const CqEntropies& h) { return h.holevo() + (1.0 + mu) * h.coherent_given_x(); },
      false, false};
  return maximize_ensemble(ch, objective, letters_or_default(cfg.nx, ch.dim_in()), 1, false, cfg);
}

SearchResult quantum_dynamic_d(const KrausChannel& ch, const TradeoffWeights& w,
                               const SearchConfig& cfg) {
  check_weights(w);
  EnsembleObjective objective{
      [w](const CqEntropies& h) {
        const double coherent = h.coherent_given_x();
        const double to_bob = h.holevo() + h.h_in_x + coherent;  // I(AX;B)
        return to_bob + w.lambda * coherent + w.mu * (h.holevo() + coherent);
      },
      false, true};
  return maximize_ensemble(ch, objective, letters_or_default(cfg.nx, ch.dim_in()), 1, false, cfg);
}

double antidegradable_value(const KrausChannel& ch, const TradeoffWeights& w, double holevo) {
  check_weights(w);
  if (!ch.traits().antidegradable && !ch.traits().entanglement_breaking) {
    warn("antidegradable_value: channel '" + std::string(to_string(ch.label())) +
         "' is not known to be antidegradable; the value is only a formula evaluation");
  }
  return (1.0 + w.mu) * holevo;
}

}  // namespace pdcap
