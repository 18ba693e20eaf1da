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

#include "pdcap/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pdcap/diagnostics.hpp"
#include "pdcap/entropy.hpp"
#include "pdcap/error.hpp"

namespace pdcap {
namespace {

constexpr double kNearMiss = 1e-3;
constexpr std::size_t kRefinePoints = 201;
constexpr std::size_t kParetoGrid = 201;
constexpr double kGoldenWidth = 1e-12;

void require_in(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) {
    throw DomainError(std::string(what) + "=" + std::to_string(v) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

double grid_point(double lo, double hi, std::size_t k, std::size_t n) {
  if (n <= 1 || hi == lo) return lo;
  if (k + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

struct Excess {
  double worst;
  int index;
};

// Largest amount by which `t` exceeds one of the three bounds.
Excess excess(const BoundTriple& b, const RateTriple& t) {
  const std::array<double, 3> e = {t.r + t.p - b.b_rp, t.p + t.s - b.b_ps,
                                   t.r + t.p + t.s - b.b_rps};
  const double worst = *std::max_element(e.begin(), e.end());
  int index = 0;
  while (e[index] < worst - 1e-12) ++index;
  return {worst, index};
}

}  // namespace

std::vector<Halfspace> unit_resource_region() {
  return translated_region(RegionQuantities{0.0, 0.0, 0.0});
}

IntMatrix3 unit_protocol_matrix() { return {{{0, -1, 1}, {-1, 1, -1}, {1, -1, 0}}}; }

IntMatrix3 unit_protocol_matrix_inverse() { return {{{-1, -1, 0}, {-1, -1, -1}, {0, -1, -1}}}; }

IntMatrix3 multiply(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

bool is_two_sided_inverse(const IntMatrix3& a, const IntMatrix3& b) {
  const IntMatrix3 id = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return multiply(a, b) == id && multiply(b, a) == id;
}

bool unit_matrix_inverse_check() {
  return is_two_sided_inverse(unit_protocol_matrix(), unit_protocol_matrix_inverse());
}

RateTriple corner_from_cq(const CqEntropies& h) {
  return {h.holevo(), h.bob_given_x(), -h.eve_given_x()};
}

RateTriple corner_from_cq(const CqEvaluation& ev) { return corner_from_cq(ev.entropies); }

std::vector<Halfspace> translated_region(const RegionQuantities& q) {
  return {Halfspace{{1.0, 1.0, 0.0}, q.rp}, Halfspace{{0.0, 1.0, 1.0}, q.ps},
          Halfspace{{1.0, 1.0, 1.0}, q.rps}};
}

std::vector<Halfspace> translated_region(const CqEvaluation& ev) {
  return translated_region(region_quantities(ev));
}

std::vector<Halfspace> translated_region(const BoundTriple& b) {
  return translated_region(RegionQuantities{b.b_rp, b.b_ps, b.b_rps});
}

double dephasing_gamma(double p, double nu) {
  require_in(p, 0.0, 1.0, "dephasing p");
  require_in(nu, 0.0, 1.0, "dephasing nu");
  const double flip = p / 2.0;
  const double radicand = 1.0 - 16.0 * flip * (1.0 - flip) * nu * (1.0 - nu);
  return 0.5 + 0.5 * std::sqrt(std::max(radicand, 0.0));
}

BoundTriple dephasing_bounds(double p, double nu) {
  require_in(nu, 0.0, 0.5, "dephasing nu");
  const double h_gamma = binary_entropy(dephasing_gamma(p, nu));
  return {nu, 1.0, binary_entropy(nu) - h_gamma, 1.0 - h_gamma};
}

CloningSpectra cloning_spectra(int n, double mu_clone) {
  if (n < 1) throw DomainError("cloning: N=" + std::to_string(n) + " must be at least 1");
  require_in(mu_clone, 0.0, 0.5, "cloning mu");
  const double big_n = n;
  const double delta = big_n * (big_n + 1.0) / 2.0;
  std::vector<double> bob(n + 1), eve(n);
  for (int i = 0; i <= n; ++i) bob[i] = ((big_n - 2.0 * i) * mu_clone + i) / delta;
  for (int i = 0; i < n; ++i) eve[i] = ((big_n - 1.0 - 2.0 * i) * mu_clone + i + 1.0) / delta;
  const ProbDist bob_dist(std::move(bob));
  const ProbDist eve_dist(std::move(eve));
  return {{bob_dist.weights().begin(), bob_dist.weights().end()},
          {eve_dist.weights().begin(), eve_dist.weights().end()}};
}

double cloning_public_bound(int n) {
  if (n < 1) throw DomainError("cloning: N=" + std::to_string(n) + " must be at least 1");
  const double big_n = n;
  const double delta = big_n * (big_n + 1.0) / 2.0;
  double sum = 0.0;
  for (int i = 2; i <= n; ++i) sum += i * std::log2(static_cast<double>(i));
  return 1.0 - std::log2(big_n) + sum / delta;
}

BoundTriple cloning_bounds(int n, double mu_clone) {
  const CloningSpectra spectra = cloning_spectra(n, mu_clone);
  const double h_eve = spectrum_entropy(spectra.eve);
  return {mu_clone, cloning_public_bound(n), spectrum_entropy(spectra.bob) - h_eve,
          std::log2(n + 1.0) - h_eve};
}

BoundTriple erasure_bounds(double eps, double p) {
  require_in(eps, 0.0, 1.0, "erasure eps");
  require_in(p, 0.0, 0.5, "erasure p");
  const double t = binary_entropy(p);
  return {p, 1.0 - eps, (1.0 - 2.0 * eps) * t, 1.0 - eps - eps * t};
}

BoundTriple eb_bounds(double holevo) {
  if (!std::isfinite(holevo) || holevo < 0.0) {
    throw DomainError("eb_bounds: Holevo capacity must be finite and non-negative");
  }
  return {0.0, holevo, 0.0, holevo};
}

BoundaryFamily dephasing_family(double p) {
  require_in(p, 0.0, 1.0, "dephasing p");
  return {"dephasing", 0.0, 0.5, [p](double nu) { return dephasing_bounds(p, nu); }};
}

BoundaryFamily cloning_family(int n) {
  cloning_public_bound(n);
  return {"cloning", 0.0, 0.5, [n](double mu) { return cloning_bounds(n, mu); }};
}

BoundaryFamily erasure_family(double eps) {
  require_in(eps, 0.0, 1.0, "erasure eps");
  return {"erasure", 0.0, 0.5, [eps](double p) { return erasure_bounds(eps, p); }};
}

BoundaryFamily eb_family(double holevo) {
  eb_bounds(holevo);
  return {"eb", 0.0, 0.0, [holevo](double) { return eb_bounds(holevo); }};
}

Membership membership(const BoundaryFamily& family, const RateTriple& point, std::size_t grid) {
  if (grid < 2) throw DomainError("membership: grid must have at least 2 points");
  if (!std::isfinite(point.r) || !std::isfinite(point.p) || !std::isfinite(point.s)) {
    throw DomainError("membership: rate triple must be finite");
  }
  const std::size_t n = family.hi > family.lo ? grid : 1;
  std::vector<double> params(n);
  std::vector<Excess> excesses(n);
  for (std::size_t k = 0; k < n; ++k) {
    params[k] = grid_point(family.lo, family.hi, k, n);
    excesses[k] = excess(family.bounds(params[k]), point);
    if (excesses[k].worst <= kMembershipTolerance) return {true, params[k], -1, 0.0};
  }

  Membership best{false, params[0], excesses[0].index, excesses[0].worst};
  auto consider = [&](double param, const Excess& e) {
    if (e.worst < best.violation) best = {false, param, e.index, e.worst};
  };
  for (std::size_t k = 0; k < n; ++k) consider(params[k], excesses[k]);

  for (std::size_t k = 0; k < n; ++k) {
    const bool local_min = (k == 0 || excesses[k].worst <= excesses[k - 1].worst) &&
                           (k + 1 == n || excesses[k].worst <= excesses[k + 1].worst);
    if (!local_min || excesses[k].worst > kNearMiss) continue;
    const double a = params[k == 0 ? 0 : k - 1];
    const double b = params[k + 1 == n ? k : k + 1];
    for (std::size_t j = 0; j < kRefinePoints; ++j) {
      const double t = grid_point(a, b, j, kRefinePoints);
      const Excess e = excess(family.bounds(t), point);
      if (e.worst <= kMembershipTolerance) return {true, t, -1, 0.0};
      consider(t, e);
    }
  }
  return best;
}

ParetoPoint pareto_point(const BoundaryFamily& family, const WeightVector& w) {
  auto score = [&](double t) {
    const BoundTriple b = family.bounds(t);
    return w.apply(RegionQuantities{b.b_rp, b.b_ps, b.b_rps});
  };

  ParetoPoint best{score(family.lo), family.lo, family.bounds(family.lo)};
  if (!(family.hi > family.lo)) return best;
  auto offer = [&](double t) {
    const double v = score(t);
    if (v > best.value) best = {v, t, family.bounds(t)};
  };
  offer(family.hi);

  std::size_t arg = 0;
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kParetoGrid; ++k) {
    const double v = score(grid_point(family.lo, family.hi, k, kParetoGrid));
    if (v > top) {
      top = v;
      arg = k;
    }
  }
  offer(grid_point(family.lo, family.hi, arg, kParetoGrid));

  double a = grid_point(family.lo, family.hi, arg == 0 ? 0 : arg - 1, kParetoGrid);
  double b = grid_point(family.lo, family.hi, std::min(arg + 1, kParetoGrid - 1), kParetoGrid);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = score(c), fd = score(d);
  while (b - a > kGoldenWidth) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = score(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = score(d);
    }
  }
  offer(0.5 * (a + b));
  return best;
}

ParetoPoint pareto_point(const BoundaryFamily& family, const TradeoffWeights& w) {
  check_weights(w);
  return pareto_point(family, WeightVector::from(w));
}

std::vector<BoundTriple> sample_boundary(const BoundaryFamily& family, std::size_t grid_size) {
  if (grid_size < 2) throw DomainError("sample_boundary: grid must have at least 2 points");
  std::vector<BoundTriple> out;
  out.reserve(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    out.push_back(family.bounds(grid_point(family.lo, family.hi, k, grid_size)));
  }
  return out;
}

AdditivityReport additivity_gap(const KrausChannel& ch, const TradeoffWeights& w,
                                const SearchConfig& cfg) {
  check_weights(w);
  const std::size_t d = ch.dim_in();
  const std::size_t nx = cfg.nx == 0 ? d * d : cfg.nx;
  const std::size_t ny = cfg.ny == 0 ? d * d : cfg.ny;

  SearchConfig single_cfg = cfg;
  single_cfg.nx = nx;
  single_cfg.ny = ny;
  const SearchResult single = maximize_p(ch, w, single_cfg);

  SearchConfig pair_cfg = cfg;
  pair_cfg.nx = nx * nx;
  pair_cfg.ny = ny * ny;
  const CqEnsemble product = tensor_ensembles(single.ensemble, single.ensemble);
  const SearchResult pair = maximize_weighted(tensor_channels(ch, ch), WeightVector::from(w),
                                              pair_cfg, std::span<const CqEnsemble>(&product, 1));

  const bool converged = single.converged && pair.converged;
  if (!converged) warn("additivity_gap: search budget exhausted before convergence");
  return {pair.value - 2.0 * single.value, single.value, pair.value, converged};
}

}  // namespace pdcap
