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

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pdcap/channels.hpp"
#include "pdcap/tradeoff.hpp"

namespace pdcap {

/// (R, P, S): public classical, private classical and secret-key rates in
/// bits per channel use. Negative entries are consumed resources.
struct RateTriple {
  double r = 0.0;
  double p = 0.0;
  double s = 0.0;
};

/// normal . (R, P, S) <= bound.
struct Halfspace {
  std::array<double, 3> normal;
  double bound;

  double lhs(const RateTriple& t) const {
    return normal[0] * t.r + normal[1] * t.p + normal[2] * t.s;
  }
  // bound - lhs; negative when violated.
  double slack(const RateTriple& t) const { return bound - lhs(t); }
  bool contains(const RateTriple& t, double tol = 0.0) const { return lhs(t) <= bound + tol; }
};

/// Right-hand sides of R+P <= b_rp, P+S <= b_ps, R+P+S <= b_rps at one value
/// of a family's boundary parameter.
struct BoundTriple {
  double param = 0.0;
  double b_rp = 0.0;
  double b_ps = 0.0;
  double b_rps = 0.0;
};

// ---------------------------------------------------------------------------
// Unit resource region

/// {R+P <= 0, P+S <= 0, R+P+S <= 0}.
std::vector<Halfspace> unit_resource_region();

using IntMatrix3 = std::array<std::array<long, 3>, 3>;

/// Columns are the secret key distribution, one-time pad and
/// private-to-public transmission triples.
IntMatrix3 unit_protocol_matrix();
IntMatrix3 unit_protocol_matrix_inverse();
IntMatrix3 multiply(const IntMatrix3& a, const IntMatrix3& b);
bool is_two_sided_inverse(const IntMatrix3& a, const IntMatrix3& b);

/// Exact integer check that the two matrices above are mutual inverses.
bool unit_matrix_inverse_check();

/// (I(X;B), I(Y;B|X), -I(Y;E|X)).
RateTriple corner_from_cq(const CqEntropies& h);
RateTriple corner_from_cq(const CqEvaluation& ev);

std::vector<Halfspace> translated_region(const RegionQuantities& q);
std::vector<Halfspace> translated_region(const CqEvaluation& ev);
std::vector<Halfspace> translated_region(const BoundTriple& b);

// ---------------------------------------------------------------------------
// Closed-form boundaries

/// 1/2 + 1/2 sqrt(1 - 16 (p/2)(1 - p/2) nu (1 - nu)).
double dephasing_gamma(double p, double nu);

/// Dephasing channel, nu in [0, 1/2]: (1, H2(nu) - H2(gamma), 1 - H2(gamma)).
BoundTriple dephasing_bounds(double p, double nu);

struct CloningSpectra {
  std::vector<double> bob;  // lambda_i / Delta_N, i = 0..N
  std::vector<double> eve;  // eta_i / Delta_N, i = 0..N-1
};

/// Throws DomainError when either list fails to be a probability vector.
CloningSpectra cloning_spectra(int n, double mu_clone);

/// 1 - log2 N + (1/Delta_N) sum_i i log2 i.
double cloning_public_bound(int n);

/// 1 -> N cloner, mu_clone in [0, 1/2].
BoundTriple cloning_bounds(int n, double mu_clone);

/// Erasure channel, p in [0, 1/2]: (1-eps, (1-2eps) H2(p), 1 - eps - eps H2(p)).
BoundTriple erasure_bounds(double eps, double p);

/// Entanglement-breaking channel with Holevo capacity `holevo`: (C, 0, C).
BoundTriple eb_bounds(double holevo);

// ---------------------------------------------------------------------------
// Families, membership and Pareto points

/// A one-parameter boundary: bounds(param) for param in [lo, hi].
struct BoundaryFamily {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::function<BoundTriple(double)> bounds;
};

BoundaryFamily dephasing_family(double p);
BoundaryFamily cloning_family(int n);
BoundaryFamily erasure_family(double eps);
BoundaryFamily eb_family(double holevo);

inline constexpr double kMembershipTolerance = 1e-9;
inline constexpr std::size_t kDefaultMembershipGrid = 1001;

struct Membership {
  bool inside = false;
  // Inside: a parameter whose three halfspaces hold. Outside: the parameter
  // with the smallest worst-case violation.
  double param = 0.0;
  // Outside only: index (0: R+P, 1: P+S, 2: R+P+S) and size of the largest
  // violation at `param`.
  int violated = -1;
  double violation = 0.0;
};

/// Grid search over the family parameter followed by one refinement pass
/// around grid points that miss by at most 1e-3.
Membership membership(const BoundaryFamily& family, const RateTriple& point,
                      std::size_t grid = kDefaultMembershipGrid);

struct ParetoPoint {
  double value = 0.0;
  double param = 0.0;
  BoundTriple bounds;
};

/// Maximizes w.apply(bounds(param)) by a grid bracket refined with
/// golden-section search; the endpoints are always compared.
ParetoPoint pareto_point(const BoundaryFamily& family, const WeightVector& w);
ParetoPoint pareto_point(const BoundaryFamily& family, const TradeoffWeights& w);

/// `grid_size` equally spaced parameters over [lo, hi], endpoints included.
std::vector<BoundTriple> sample_boundary(const BoundaryFamily& family, std::size_t grid_size);

struct AdditivityReport {
  double gap = 0.0;         // two_copy - 2 * single_copy
  double single_copy = 0.0;
  double two_copy = 0.0;
  bool converged = false;
};

/// Single-copy maximize_p against a two-copy search on ch ⊗ ch. The two-copy
/// alphabets are the squares of the single-copy ones and restart 0 starts
/// from the product of the best single-copy ensemble with itself.
AdditivityReport additivity_gap(const KrausChannel& ch, const TradeoffWeights& w,
                                const SearchConfig& cfg = {});

}  // namespace pdcap
