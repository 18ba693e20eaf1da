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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdcap/diagnostics.hpp"
#include "pdcap/error.hpp"
#include "pdcap/regions.hpp"
#include "support/oracles.hpp"

namespace pdcap {
namespace {

using testing::h2_oracle;

bool inside_all(const std::vector<Halfspace>& region, const RateTriple& t, double tol = 0.0) {
  return std::all_of(region.begin(), region.end(),
                     [&](const Halfspace& h) { return h.contains(t, tol); });
}

void expect_bounds(const BoundTriple& b, double rp, double ps, double rps, double tol) {
  EXPECT_NEAR(b.b_rp, rp, tol);
  EXPECT_NEAR(b.b_ps, ps, tol);
  EXPECT_NEAR(b.b_rps, rps, tol);
}

// Constant rate of the cloning boundary, straight from its spectrum.
double cloning_rp_oracle(int n) {
  const double delta = n * (n + 1) / 2.0;
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) sum += i * std::log2(static_cast<double>(i));
  return 1.0 - std::log2(static_cast<double>(n)) + sum / delta;
}

TEST(UnitRegion, Protocols) {
  const auto region = unit_resource_region();
  ASSERT_EQ(region.size(), 3u);
  EXPECT_TRUE(inside_all(region, {-1, 1, -1}));
  EXPECT_TRUE(inside_all(region, {0, -1, 1}));
  EXPECT_TRUE(inside_all(region, {1, -1, 0}));
  EXPECT_FALSE(inside_all(region, {0.1, 0, 0}));
  const RateTriple skd{0, -1, 1};
  EXPECT_DOUBLE_EQ(region[0].lhs(skd), -1.0);
  EXPECT_DOUBLE_EQ(region[1].lhs(skd), 0.0);
  EXPECT_DOUBLE_EQ(region[2].lhs(skd), 0.0);
}

TEST(UnitRegion, MatrixInverse) {
  EXPECT_TRUE(unit_matrix_inverse_check());
  const IntMatrix3 m = unit_protocol_matrix();
  const IntMatrix3 inv = unit_protocol_matrix_inverse();
  const IntMatrix3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_EQ(multiply(m, inv), id);
  EXPECT_EQ(multiply(inv, m), id);
  IntMatrix3 bad = inv;
  bad[1][2] = -bad[1][2];
  EXPECT_FALSE(is_two_sided_inverse(m, bad));
}

TEST(Corner, ZeroInformationEnsemble) {
  const CqEnsemble ens(1, 1, ProbDist{1.0}, {validate_density(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}})});
  const CqEvaluation ev = evaluate_ensemble(make_dephasing(0.2), ens);
  const RateTriple c = corner_from_cq(ev);
  EXPECT_NEAR(c.r, 0.0, 1e-12);
  EXPECT_NEAR(c.p, 0.0, 1e-12);
  EXPECT_NEAR(c.s, 0.0, 1e-12);
  const auto region = translated_region(ev);
  const auto unit = unit_resource_region();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(region[i].bound, unit[i].bound, 1e-12);
}

TEST(Corner, CompletelyDephasingBasisEnsemble) {
  const CqEvaluation ev = evaluate_ensemble(make_dephasing(1.0), boundary_ensemble(0.0));
  const RateTriple c = corner_from_cq(ev);
  EXPECT_NEAR(c.r, 1.0, 1e-12);
  EXPECT_NEAR(c.p, 0.0, 1e-12);
  EXPECT_NEAR(c.s, 0.0, 1e-12);
  const auto region = translated_region(ev);
  EXPECT_NEAR(region[0].bound, 1.0, 1e-12);
  EXPECT_NEAR(region[1].bound, 0.0, 1e-12);
  EXPECT_NEAR(region[2].bound, 1.0, 1e-12);
}

TEST(Corner, DephasingBoundaryEnsemble) {
  const RateTriple c = corner_from_cq(evaluate_ensemble(make_dephasing(0.2), boundary_ensemble(0.5)));
  EXPECT_NEAR(c.r + c.p, 1.0, 1e-9);
  EXPECT_NEAR(c.p + c.s, testing::kOneMinusH2Of09, 1e-9);
}

TEST(Corner, SaturatesTranslatedHalfspaces) {
  Rng rng(17);
  const std::vector<KrausChannel> channels{make_dephasing(0.3), make_erasure(0.2), make_cloning(3)};
  for (const KrausChannel& ch : channels) {
    for (int trial = 0; trial < 20; ++trial) {
      const CqEvaluation ev = evaluate_ensemble(ch, random_ensemble(ch.dim_in(), 3, 2, 2, rng));
      const RateTriple c = corner_from_cq(ev);
      for (const Halfspace& h : translated_region(ev)) EXPECT_NEAR(h.slack(c), 0.0, 1e-9);
    }
  }
}

TEST(Dephasing, Gamma) {
  EXPECT_DOUBLE_EQ(dephasing_gamma(0.2, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(dephasing_gamma(0.0, 0.5), 1.0);
  EXPECT_NEAR(dephasing_gamma(0.2, 0.5), 0.9, 1e-15);
  EXPECT_NEAR(dephasing_gamma(1.0, 0.5), 0.5, 1e-15);
}

TEST(Dephasing, Bounds) {
  expect_bounds(dephasing_bounds(0.2, 0.0), 1, 0, 1, 1e-15);
  expect_bounds(dephasing_bounds(0.0, 0.5), 1, 1, 1, 1e-15);
  expect_bounds(dephasing_bounds(0.2, 0.5), 1, testing::kOneMinusH2Of09, testing::kOneMinusH2Of09, 1e-12);
  for (double p : {0.05, 0.4, 0.9}) {
    for (double nu : {0.1, 0.3, 0.45}) {
      const double g = 0.5 + 0.5 * std::sqrt(1.0 - 16.0 * (p / 2) * (1 - p / 2) * nu * (1 - nu));
      const BoundTriple b = dephasing_bounds(p, nu);
      expect_bounds(b, 1.0, h2_oracle(nu) - h2_oracle(g), 1.0 - h2_oracle(g), 1e-12);
      EXPECT_EQ(b.param, nu);
    }
  }
}

TEST(Dephasing, RejectsDomain) {
  EXPECT_THROW(dephasing_bounds(0.2, 0.6), DomainError);
  EXPECT_THROW(dephasing_bounds(0.2, -0.1), DomainError);
  EXPECT_THROW(dephasing_bounds(1.5, 0.2), DomainError);
  EXPECT_THROW(dephasing_gamma(std::nan(""), 0.2), DomainError);
}

TEST(Cloning, SingleCopyIsIdentity) {
  expect_bounds(cloning_bounds(1, 0.5), 1, 1, 1, 1e-12);
  for (double m : {0.0, 0.2, 0.5}) EXPECT_NEAR(cloning_bounds(1, m).b_rp, 1.0, 1e-15);
}

TEST(Cloning, TwoCopies) {
  expect_bounds(cloning_bounds(2, 0.5), 2.0 / 3.0, testing::kLog2Of3 - 1.0, testing::kLog2Of3 - 1.0, 1e-12);
}

TEST(Cloning, SpectraAreDistributions) {
  for (int n : {1, 2, 5, 10}) {
    for (double m : {0.0, 0.25, 0.5}) {
      const CloningSpectra s = cloning_spectra(n, m);
      ASSERT_EQ(s.bob.size(), static_cast<std::size_t>(n + 1));
      ASSERT_EQ(s.eve.size(), static_cast<std::size_t>(n));
      double tb = 0.0;
      double te = 0.0;
      for (double v : s.bob) tb += v;
      for (double v : s.eve) te += v;
      EXPECT_NEAR(tb, 1.0, 1e-12);
      EXPECT_NEAR(te, 1.0, 1e-12);
      const BoundTriple b = cloning_bounds(n, m);
      EXPECT_NEAR(b.b_ps, testing::shannon_oracle(s.bob) - testing::shannon_oracle(s.eve), 1e-12);
      EXPECT_NEAR(b.b_rps, std::log2(n + 1.0) - testing::shannon_oracle(s.eve), 1e-12);
    }
  }
}

TEST(Cloning, ConstantRate) {
  for (int n : {1, 2, 3, 10}) {
    EXPECT_NEAR(cloning_public_bound(n), cloning_rp_oracle(n), 1e-12);
    for (const BoundTriple& b : sample_boundary(cloning_family(n), 11)) {
      EXPECT_EQ(b.b_rp, cloning_public_bound(n));
    }
  }
  EXPECT_THROW(cloning_bounds(0, 0.2), DomainError);
  EXPECT_THROW(cloning_bounds(3, 0.7), DomainError);
}

TEST(Erasure, Bounds) {
  expect_bounds(erasure_bounds(0.0, 0.5), 1, 1, 1, 1e-15);
  expect_bounds(erasure_bounds(0.25, 0.5), 0.75, 0.5, 0.5, 1e-15);
  for (double p : {0.0, 0.1, 0.5}) EXPECT_EQ(erasure_bounds(0.5, p).b_ps, 0.0);
  expect_bounds(erasure_bounds(0.25, 0.25), 0.75, 0.5 * testing::kH2Of025, 0.75 - 0.25 * testing::kH2Of025,
                1e-15);
  EXPECT_THROW(erasure_bounds(1.2, 0.1), DomainError);
  EXPECT_THROW(erasure_bounds(0.2, 0.7), DomainError);
}

TEST(Erasure, AffineInBinaryEntropy) {
  const BoundaryFamily fam = erasure_family(0.25);
  const BoundTriple lo = fam.bounds(0.0);
  const BoundTriple hi = fam.bounds(0.5);
  for (const BoundTriple& b : sample_boundary(fam, 1001)) {
    const double t = h2_oracle(b.param);
    expect_bounds(b, (1 - t) * lo.b_rp + t * hi.b_rp, (1 - t) * lo.b_ps + t * hi.b_ps,
                  (1 - t) * lo.b_rps + t * hi.b_rps, 1e-12);
  }
}

TEST(Erasure, AntidegradableCollapse) {
  for (double eps : {0.5, 0.6, 0.8, 1.0}) {
    for (const BoundTriple& b : sample_boundary(erasure_family(eps), 51)) EXPECT_LE(b.b_ps, 1e-15);
  }
}

TEST(EntanglementBreaking, Bounds) {
  expect_bounds(eb_bounds(1.0), 1, 0, 1, 0.0);
  expect_bounds(eb_bounds(0.0), 0, 0, 0, 0.0);
  EXPECT_THROW(eb_bounds(-0.5), DomainError);
}

TEST(EntanglementBreaking, MeasurePrepareHolevo) {
  const std::vector<std::vector<Complex>> prepared{{1.0, 0.0}, {1.0, 1.0}};
  const KrausChannel ch = make_measure_prepare(prepared);
  SearchConfig cfg;
  cfg.restarts = 10;
  const double holevo = holevo_capacity(ch, cfg).value;
  // Uniform mixture of |0> and |+>: eigenvalues (1 +- 1/sqrt2) / 2.
  const double expected = h2_oracle(0.5 + 0.5 / std::sqrt(2.0));
  EXPECT_NEAR(holevo, expected, 1e-4);
  expect_bounds(eb_bounds(holevo), holevo, 0.0, holevo, 0.0);
}

TEST(Sampling, DephasingGrid) {
  const auto samples = sample_boundary(dephasing_family(0.2), 3);
  ASSERT_EQ(samples.size(), 3u);
  const double nus[] = {0.0, 0.25, 0.5};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(samples[i].param, nus[i]);
    const BoundTriple b = dephasing_bounds(0.2, nus[i]);
    expect_bounds(samples[i], b.b_rp, b.b_ps, b.b_rps, 0.0);
  }
  EXPECT_THROW(sample_boundary(dephasing_family(0.2), 1), DomainError);
}

TEST(Membership, DephasingExamples) {
  const BoundaryFamily fam = dephasing_family(0.2);
  const Membership m = membership(fam, {1, 0, 0});
  EXPECT_TRUE(m.inside);
  const Membership out = membership(fam, {0, testing::kOneMinusH2Of09 + 0.01, 0});
  EXPECT_FALSE(out.inside);
  EXPECT_EQ(out.violated, 1);
  EXPECT_NEAR(out.violation, 0.01, 1e-6);
  EXPECT_NEAR(out.param, 0.5, 1e-6);
  EXPECT_THROW(membership(fam, {0, 0, 0}, 1), DomainError);
}

TEST(Membership, OneTimePadEverywhere) {
  for (const BoundaryFamily& fam : {dephasing_family(0.2), cloning_family(10), erasure_family(0.25),
                                    erasure_family(0.75), eb_family(0.6)}) {
    EXPECT_TRUE(membership(fam, {-1, 1, -1}).inside) << fam.name;
    EXPECT_TRUE(membership(fam, {0, 0, 0}).inside) << fam.name;
  }
}

TEST(Membership, MonotoneUnderDiscarding) {
  Rng rng(23);
  const BoundaryFamily fam = cloning_family(3);
  int inside_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RateTriple t{2 * rng.uniform() - 1, 2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
    if (!membership(fam, t, 201).inside) continue;
    ++inside_count;
    for (double d : {0.01, 0.3, 2.0}) {
      EXPECT_TRUE(membership(fam, {t.r - d, t.p - d, t.s - d}, 201).inside);
    }
  }
  EXPECT_GT(inside_count, 10);
}

TEST(Membership, BoundaryPointsAreInside) {
  const BoundaryFamily fam = dephasing_family(0.3);
  // Parameters shared with the default membership grid.
  for (const BoundTriple& b : sample_boundary(fam, 11)) {
    const RateTriple apex{b.b_rps - b.b_ps, b.b_rp + b.b_ps - b.b_rps, b.b_rps - b.b_rp};
    EXPECT_TRUE(membership(fam, apex).inside);
  }
}

TEST(Pareto, ErasureExamples) {
  const BoundaryFamily fam = erasure_family(0.25);
  const ParetoPoint flat = pareto_point(fam, TradeoffWeights{0.4, 1.0});
  EXPECT_NEAR(flat.value, 1.5, 1e-12);
  EXPECT_NEAR(flat.param, 0.0, 1e-12);
  const ParetoPoint peak = pareto_point(fam, TradeoffWeights{1.0, 0.0});
  EXPECT_NEAR(peak.value, 1.25, 1e-12);
  EXPECT_NEAR(peak.param, 0.5, 1e-6);
}

TEST(Pareto, ConstantObjective) {
  const ParetoPoint pt = pareto_point(dephasing_family(0.2), TradeoffWeights{0, 0});
  EXPECT_NEAR(pt.value, 1.0, 1e-15);
  EXPECT_THROW(pareto_point(dephasing_family(0.2), TradeoffWeights{-1, 0}), DomainError);
}

TEST(Pareto, AgreesWithGrid) {
  const std::vector<BoundaryFamily> families{dephasing_family(0.2), dephasing_family(0.7),
                                             cloning_family(10), erasure_family(0.25)};
  for (const BoundaryFamily& fam : families) {
    const auto grid = sample_boundary(fam, 2001);
    for (double lambda : {0.0, 0.5, 1.0, 2.0}) {
      for (double mu : {0.0, 0.5, 1.0, 2.0}) {
        const WeightVector w = WeightVector::from({lambda, mu});
        double best = -1e300;
        for (const BoundTriple& b : grid) best = std::max(best, w.apply({b.b_rp, b.b_ps, b.b_rps}));
        const ParetoPoint pt = pareto_point(fam, w);
        EXPECT_GE(pt.value, best - 1e-9) << fam.name;
        EXPECT_LE(std::abs(pt.value - best), 1e-6) << fam.name;
        EXPECT_NEAR(pt.value, w.apply({pt.bounds.b_rp, pt.bounds.b_ps, pt.bounds.b_rps}), 1e-15);
      }
    }
  }
}

class Additivity : public ::testing::Test {
 protected:
  void SetUp() override { set_warning_handler([](std::string_view) {}); }
  void TearDown() override { set_warning_handler(nullptr); }
};

TEST_F(Additivity, CompletelyDephasing) {
  SearchConfig cfg;
  cfg.restarts = 4;
  cfg.nx = 2;
  cfg.ny = 2;
  const AdditivityReport r = additivity_gap(make_dephasing(1.0), {1, 1}, cfg);
  EXPECT_LE(r.gap, 1e-3);
  EXPECT_GE(r.gap, -2e-3);
  EXPECT_NEAR(r.single_copy, 2.0, 1e-3);
}

TEST_F(Additivity, ErasureQuarter) {
  SearchConfig cfg;
  cfg.restarts = 4;
  cfg.nx = 2;
  cfg.ny = 2;
  const AdditivityReport r = additivity_gap(make_erasure(0.25), {1, 0}, cfg);
  EXPECT_LE(r.gap, 1e-3);
  EXPECT_GE(r.gap, -2e-3);
  EXPECT_NEAR(r.gap, r.two_copy - 2 * r.single_copy, 1e-15);
}

}  // namespace
}  // namespace pdcap
