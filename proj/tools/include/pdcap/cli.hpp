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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdcap/channels.hpp"
#include "pdcap/regions.hpp"
#include "pdcap/tradeoff.hpp"

namespace pdcap::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // verify check failed, or member point outside
  kExitBadArguments = 2,
  kExitIoFailure = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Header `param,b_rp,b_ps,b_rps` and one row per triple.
std::string region_csv(std::span<const BoundTriple> rows);
std::string region_json(std::span<const BoundTriple> rows);

/// gnuplot script drawing the boundary curves and the translated-cone apexes
/// and edges for the CSV at `csv_path`.
std::string plot_script(const std::string& csv_path, const std::string& title);

struct ChannelSpec {
  std::string kind;  // dephasing | erasure | cloning | eb | custom-file
  std::optional<double> p;
  std::optional<double> eps;
  std::optional<int> n;
  std::string file;
};

struct ResolvedChannel {
  KrausChannel channel;
  std::optional<BoundaryFamily> family;
};

/// Builds the channel and, when one is known, its closed-form boundary family.
/// `eb` is the completely dephasing qubit channel; its family uses a Holevo
/// capacity found by search with `cfg`.
ResolvedChannel resolve_channel(const ChannelSpec& spec, const SearchConfig& cfg);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {
      "unit-matrix",        "corollaries",    "antidegradable", "degradable-compare",
      "erasure-additivity", "erasure-affine", "pauli-symmetry"};
  return names;
}

struct SuiteOptions {
  ChannelSpec channel;
  SearchConfig search;
};

/// Throws DomainError for an unknown suite name.
std::vector<VerifyCheck> run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace pdcap::cli
