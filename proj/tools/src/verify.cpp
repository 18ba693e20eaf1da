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
#include <functional>
#include <map>

#include "pdcap/cli.hpp"
#include "pdcap/diagnostics.hpp"
#include "pdcap/entropy.hpp"
#include "pdcap/error.hpp"
#include "pdcap/rng.hpp"

namespace pdcap::cli {
namespace {

constexpr double kSearchTolerance = 5e-3;
constexpr int kRandomEnsembles = 50;

VerifyCheck within(std::string name, double residual, double tolerance) {
  return {std::move(name), residual <= tolerance, residual, tolerance};
}

VerifyCheck holds(std::string name, bool ok) { return {std::move(name), ok, ok ? 0.0 : 1.0, 0.0}; }

const std::vector<TradeoffWeights>& weight_grid() {
  static const std::vector<TradeoffWeights> grid = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  return grid;
}

double spec_value(const std::optional<double>& v, double fallback) { return v ? *v : fallback; }

double max_entry_defect(const IntMatrix3& m) {
  long worst = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::labs(m[i][j] - (i == j ? 1 : 0)));
  }
  return static_cast<double>(worst);
}

std::vector<VerifyCheck> unit_matrix_suite(const SuiteOptions&) {
  const IntMatrix3 m = unit_protocol_matrix();
  const IntMatrix3 inv = unit_protocol_matrix_inverse();
  std::vector<VerifyCheck> out;
  out.push_back(within("M * M^-1 = I", max_entry_defect(multiply(m, inv)), 0.0));
  out.push_back(within("M^-1 * M = I", max_entry_defect(multiply(inv, m)), 0.0));
  IntMatrix3 flipped = inv;
  flipped[1][2] = -flipped[1][2];
  out.push_back(holds("perturbed inverse rejected", !is_two_sided_inverse(m, flipped)));
  const auto unit = unit_resource_region();
  for (const RateTriple& t : {RateTriple{-1, 1, -1}, RateTriple{0, -1, 1}, RateTriple{1, -1, 0}}) {
    double worst = -1e300;
    for (const Halfspace& h : unit) worst = std::max(worst, -h.slack(t));
    out.push_back(within("unit protocol (" + format_double(t.r) + "," + format_double(t.p) + "," +
                             format_double(t.s) + ") in unit region",
                         std::max(worst, 0.0), 0.0));
  }
  out.push_back(holds("(0.1,0,0) outside unit region", !unit[0].contains({0.1, 0, 0})));
  return out;
}

std::vector<VerifyCheck> corollaries_suite(const SuiteOptions& opt) {
  std::vector<VerifyCheck> out;
  Rng rng(opt.search.seed);
  const KrausChannel dephasing = make_dephasing(0.2);
  double residual = 0.0;
  for (int k = 0; k < kRandomEnsembles; ++k) {
    const CqEnsemble ens = random_ensemble(2, 2, 2, 2, rng);
    const CqEvaluation ev = evaluate_ensemble(dephasing, ens);
    residual = std::max(residual, std::abs(objective_p(ev, {0, 0}) - region_quantities(ev).rp));
  }
  out.push_back(within("objective at zero weights equals I(YX;B)", residual, 1e-12));

  const double holevo = holevo_capacity(make_erasure(0.25), opt.search).value;
  out.push_back(within("erasure 0.25 Holevo capacity = 0.75", std::abs(holevo - 0.75),
                       kSearchTolerance));

  const double private_info = private_information(dephasing, opt.search).value;
  const double expected = 1.0 - binary_entropy(0.9);
  out.push_back(within("dephasing 0.2 private information = 1 - H2(0.9)",
                       std::abs(private_info - expected), kSearchTolerance));

  const double eb_holevo = holevo_capacity(make_dephasing(1.0), opt.search).value;
  const BoundTriple eb = eb_bounds(eb_holevo);
  out.push_back(within("completely dephasing region corner = (1,0,1)",
                       std::max({std::abs(eb.b_rp - 1), std::abs(eb.b_ps), std::abs(eb.b_rps - 1)}),
                       kSearchTolerance));

  const double p00 = maximize_p(dephasing, {0, 0}, opt.search).value;
  const double dephasing_holevo = holevo_capacity(dephasing, opt.search).value;
  out.push_back(within("P at zero weights = Holevo capacity (dephasing 0.2)",
                       std::abs(p00 - dephasing_holevo), kSearchTolerance));
  return out;
}

std::vector<VerifyCheck> antidegradable_suite(const SuiteOptions& opt) {
  std::vector<VerifyCheck> out;
  Rng rng(opt.search.seed);
  for (double eps : {0.5, 0.75}) {
    const KrausChannel ch = make_erasure(eps);
    double worst = 0.0;
    for (int k = 0; k < kRandomEnsembles; ++k) {
      const CqEvaluation ev = evaluate_ensemble(ch, random_ensemble(2, 2, 2, 2, rng));
      worst = std::max(worst, region_quantities(ev).ps);
    }
    out.push_back(within("erasure " + format_double(eps) + ": ps <= 0 on random ensembles", worst,
                         1e-9));
    double bound = 0.0;
    for (const BoundTriple& b : sample_boundary(erasure_family(eps), 101)) {
      bound = std::max(bound, b.b_ps);
    }
    out.push_back(within("erasure " + format_double(eps) + ": boundary b_ps <= 0", bound, 1e-12));
  }
  const KrausChannel eb = make_dephasing(1.0);
  const double holevo = holevo_capacity(eb, opt.search).value;
  for (const TradeoffWeights& w : {TradeoffWeights{0, 0}, TradeoffWeights{1, 0},
                                   TradeoffWeights{0, 1}, TradeoffWeights{1, 2}}) {
    const double numeric = maximize_p(eb, w, opt.search).value;
    out.push_back(within("completely dephasing: P(" + format_double(w.lambda) + "," +
                             format_double(w.mu) + ") = (1+mu) * Holevo",
                         std::abs(numeric - antidegradable_value(eb, w, holevo)),
                         kSearchTolerance));
  }
  return out;
}

std::vector<VerifyCheck> degradable_compare_suite(const SuiteOptions& opt) {
  ChannelSpec spec = opt.channel;
  if (spec.kind.empty()) spec.kind = "dephasing";
  if (spec.kind == "dephasing" && !spec.p) spec.p = 0.2;
  const KrausChannel ch = resolve_channel(spec, opt.search).channel;
  if (!ch.traits().degradable) {
    warn("degradable-compare: channel is not known to be degradable");
  }
  std::vector<VerifyCheck> out;
  for (double mu : {0.0, 1.0}) {
    const double f = cq_tradeoff_f(ch, mu, opt.search).value;
    const double p = public_private_p(ch, mu, opt.search).value;
    out.push_back(within("f_mu = P_mu at mu=" + format_double(mu), std::abs(f - p),
                         kSearchTolerance));
  }
  for (const TradeoffWeights& w : weight_grid()) {
    const double d = quantum_dynamic_d(ch, w, opt.search).value;
    const double p = maximize_p(ch, w, opt.search).value;
    out.push_back(within("D >= P at (" + format_double(w.lambda) + "," + format_double(w.mu) + ")",
                         std::max(0.0, p - d), 1e-3));
  }
  return out;
}

std::vector<VerifyCheck> erasure_additivity_suite(const SuiteOptions& opt) {
  const double eps = spec_value(opt.channel.eps, 0.25);
  const KrausChannel ch = make_erasure(eps);
  SearchConfig cfg = opt.search;
  if (cfg.nx == 0) cfg.nx = 2;
  if (cfg.ny == 0) cfg.ny = 2;
  std::vector<VerifyCheck> out;
  for (const TradeoffWeights& w :
       {TradeoffWeights{1, 0}, TradeoffWeights{0, 1}, TradeoffWeights{1, 1}}) {
    const AdditivityReport r = additivity_gap(ch, w, cfg);
    const std::string tag = "(" + format_double(w.lambda) + "," + format_double(w.mu) + ")";
    out.push_back(within("two-copy gap <= 1e-3 at " + tag, std::max(0.0, r.gap), 1e-3));
    out.push_back(within("two-copy reaches product value at " + tag, std::max(0.0, -r.gap), 2e-3));
  }
  return out;
}

std::vector<VerifyCheck> erasure_affine_suite(const SuiteOptions& opt) {
  const double eps = spec_value(opt.channel.eps, 0.25);
  const BoundaryFamily family = erasure_family(eps);
  const BoundTriple lo = erasure_bounds(eps, 0.0);
  const BoundTriple hi = erasure_bounds(eps, 0.5);
  double residual = 0.0;
  for (const BoundTriple& b : sample_boundary(family, 1001)) {
    const double t = binary_entropy(b.param);
    residual = std::max({residual, std::abs(b.b_rp - ((1 - t) * lo.b_rp + t * hi.b_rp)),
                         std::abs(b.b_ps - ((1 - t) * lo.b_ps + t * hi.b_ps)),
                         std::abs(b.b_rps - ((1 - t) * lo.b_rps + t * hi.b_rps))});
  }
  std::vector<VerifyCheck> out;
  out.push_back(within("bounds affine in H2(p) over 1001 points", residual, 1e-12));
  out.push_back(within("bounds at p=1/2 = (1-eps, 1-2eps, 1-2eps)",
                       std::max({std::abs(hi.b_rp - (1 - eps)), std::abs(hi.b_ps - (1 - 2 * eps)),
                                 std::abs(hi.b_rps - (1 - 2 * eps))}),
                       1e-15));
  if (eps > 0.0) {
    double param_residual = 0.0;
    double value_residual = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double lambda = 0.1 * k;
      const double mu = 1.5 * lambda * (1 - 2 * eps) / eps + 0.05 * (k + 1);
      const ParetoPoint pp = pareto_point(family, TradeoffWeights{lambda, mu});
      param_residual = std::max(param_residual, std::abs(pp.param));
      value_residual = std::max(value_residual, std::abs(pp.value - (1 - eps) * (1 + mu)));
    }
    out.push_back(within("collapse to p*=0 for 20 weight pairs", param_residual, 0.0));
    out.push_back(within("collapsed value (1-eps)(1+mu)", value_residual, 1e-12));
  }
  return out;
}

std::vector<VerifyCheck> pauli_symmetry_suite(const SuiteOptions& opt) {
  const double p = spec_value(opt.channel.p, 0.2);
  const KrausChannel ch = make_dephasing(p);
  Rng rng(opt.search.seed);
  double residual = 0.0;
  for (int k = 0; k < kRandomEnsembles; ++k) {
    const CqEnsemble ens = random_ensemble(2, 2, 2, 1 + k % 2, rng);
    const CqEvaluation before = evaluate_ensemble(ch, ens);
    const CqEvaluation after = evaluate_ensemble(ch, pauli_symmetrize(ens));
    for (const TradeoffWeights& w : weight_grid()) {
      residual = std::max(residual, objective_p(before, w) - objective_p(after, w));
    }
  }
  return {within("Pauli symmetrization never lowers the objective", std::max(0.0, residual),
                 1e-9)};
}

}  // namespace

std::vector<VerifyCheck> run_suite(const std::string& suite, const SuiteOptions& options) {
  using Suite = std::function<std::vector<VerifyCheck>(const SuiteOptions&)>;
  static const std::map<std::string, Suite> suites = {
      {"unit-matrix", unit_matrix_suite},
      {"corollaries", corollaries_suite},
      {"antidegradable", antidegradable_suite},
      {"degradable-compare", degradable_compare_suite},
      {"erasure-additivity", erasure_additivity_suite},
      {"erasure-affine", erasure_affine_suite},
      {"pauli-symmetry", pauli_symmetry_suite},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) throw DomainError("unknown verify suite '" + suite + "'");
  return it->second(options);
}

}  // namespace pdcap::cli
