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
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pdcap/cli.hpp"
#include "pdcap/diagnostics.hpp"
#include "pdcap/error.hpp"

namespace pdcap::cli {
namespace {

constexpr std::string_view kSeedVariable = "TRADEOFF_SEED";

struct Options {
  ChannelSpec channel;
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
  std::optional<int> iters;
  std::optional<std::size_t> nx;
  std::optional<std::size_t> ny;
  double lambda = 0.0;
  double mu = 0.0;
  std::size_t grid = 0;
  std::string out_path;
  std::string plot_path;
  std::string format = "csv";
  std::string suite;
  double r = 0.0, p = 0.0, s = 0.0;
};

void add_channel_options(CLI::App* cmd, Options& o, bool required) {
  auto* channel = cmd->add_option("--channel", o.channel.kind, "Channel family")
                      ->check(CLI::IsMember({"dephasing", "erasure", "cloning", "eb", "custom-file"}));
  if (required) channel->required();
  cmd->add_option("--p", o.channel.p, "Dephasing parameter p in [0,1]");
  cmd->add_option("--eps", o.channel.eps, "Erasure probability in [0,1]");
  cmd->add_option("--n", o.channel.n, "Number of clones N >= 1");
  cmd->add_option("--file", o.channel.file, "Channel JSON document (custom-file)");
}

void add_search_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Search seed (default: $TRADEOFF_SEED, else 0)");
  cmd->add_option("--restarts", o.restarts, "Random restarts");
  cmd->add_option("--iters", o.iters, "Pattern-search sweeps per restart");
  cmd->add_option("--nx", o.nx, "Alphabet size of X");
  cmd->add_option("--ny", o.ny, "Alphabet size of Y");
}

std::uint64_t parse_seed(std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end) {
    throw DomainError(std::string(kSeedVariable) + "='" + std::string(text) +
                      "' is not an unsigned integer");
  }
  return v;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  if (o.seed) {
    cfg.seed = *o.seed;
  } else if (const char* env = std::getenv(std::string(kSeedVariable).c_str())) {
    cfg.seed = parse_seed(env);
  }
  if (o.restarts) cfg.restarts = *o.restarts;
  if (o.iters) cfg.iters = *o.iters;
  if (o.nx) cfg.nx = *o.nx;
  if (o.ny) cfg.ny = *o.ny;
  check_config(cfg);
  return cfg;
}

template <typename T>
T require(const std::optional<T>& v, const char* flag, const std::string& kind) {
  if (!v) throw DomainError("--channel " + kind + " requires " + flag);
  return *v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

int cmd_region(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format != "csv" && o.format != "json") throw DomainError("--format must be csv or json");
  if (!o.plot_path.empty() && (o.out_path.empty() || o.format != "csv")) {
    throw DomainError("--plot needs --out with --format csv");
  }
  const ResolvedChannel rc = resolve_channel(o.channel, search_config(o));
  if (!rc.family) throw DomainError("no closed-form boundary is known for this channel");
  const auto rows = sample_boundary(*rc.family, o.grid);
  emit(o.out_path, o.format == "csv" ? region_csv(rows) : region_json(rows), out);
  if (!o.plot_path.empty()) {
    write_file(o.plot_path, plot_script(o.out_path, rc.family->name + " channel region"));
  }
  if (!o.out_path.empty()) err << "wrote " << rows.size() << " rows to " << o.out_path << "\n";
  return kExitOk;
}

int cmd_formula(const Options& o, std::ostream& out) {
  const TradeoffWeights w{o.lambda, o.mu};
  check_weights(w);
  const SearchConfig cfg = search_config(o);
  const ResolvedChannel rc = resolve_channel(o.channel, cfg);
  const SearchResult numeric = maximize_p(rc.channel, w, cfg);

  std::optional<double> closed, param, gap;
  if (rc.family) {
    const ParetoPoint pp = pareto_point(*rc.family, w);
    closed = pp.value;
    param = pp.param;
    gap = numeric.value - pp.value;
  }
  const auto probs = numeric.ensemble.probs().weights();
  nlohmann::json doc = {
      {"channel", o.channel.kind},
      {"lambda", w.lambda},
      {"mu", w.mu},
      {"closed_form_value", optional_number(closed)},
      {"numeric_value", numeric.value},
      {"param", optional_number(param)},
      {"gap", optional_number(gap)},
      {"ensemble",
       {{"nx", numeric.ensemble.nx()},
        {"ny", numeric.ensemble.ny()},
        {"probs", std::vector<double>(probs.begin(), probs.end())}}},
      {"seed", cfg.seed},
      {"best_restart", numeric.best_restart},
      {"converged", numeric.converged},
  };
  emit(o.out_path, doc.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SuiteOptions options{o.channel, search_config(o)};
  const auto checks = run_suite(o.suite, options);
  std::size_t failed = 0;
  for (const VerifyCheck& c : checks) {
    if (!c.pass) ++failed;
    out << (c.pass ? "PASS " : "FAIL ") << o.suite << ": " << c.name
        << " residual=" << format_double(c.residual) << " tol=" << format_double(c.tolerance)
        << "\n";
  }
  out << o.suite << ": " << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_member(const Options& o, std::ostream& out) {
  const ResolvedChannel rc = resolve_channel(o.channel, search_config(o));
  if (!rc.family) throw DomainError("no closed-form boundary is known for this channel");
  const Membership m = membership(*rc.family, {o.r, o.p, o.s}, o.grid);
  if (m.inside) {
    out << "inside witness_param=" << format_double(m.param) << "\n";
    return kExitOk;
  }
  static constexpr const char* kConstraint[] = {"R+P", "P+S", "R+P+S"};
  out << "outside closest_param=" << format_double(m.param)
      << " violated=" << kConstraint[std::clamp(m.violated, 0, 2)]
      << " excess=" << format_double(m.violation) << "\n";
  return kExitFailure;
}

}  // namespace

ResolvedChannel resolve_channel(const ChannelSpec& spec, const SearchConfig& cfg) {
  const std::string& kind = spec.kind;
  if (kind == "dephasing") {
    const double p = require(spec.p, "--p", kind);
    return {make_dephasing(p), dephasing_family(p)};
  }
  if (kind == "erasure") {
    const double eps = require(spec.eps, "--eps", kind);
    return {make_erasure(eps), erasure_family(eps)};
  }
  if (kind == "cloning") {
    const int n = require(spec.n, "--n", kind);
    return {make_cloning(n), cloning_family(n)};
  }
  if (kind == "eb") {
    KrausChannel ch = make_dephasing(1.0);
    const double holevo = holevo_capacity(ch, cfg).value;
    return {std::move(ch), eb_family(holevo)};
  }
  if (kind == "custom-file") {
    if (spec.file.empty()) throw DomainError("--channel custom-file requires --file");
    KrausChannel ch = load_channel_file(spec.file);
    const auto params = ch.params();
    std::optional<BoundaryFamily> family;
    if (ch.label() == ChannelLabel::kDephasing && params.size() == 1) {
      family = dephasing_family(params[0]);
    } else if (ch.label() == ChannelLabel::kErasure && params.size() == 1) {
      family = erasure_family(params[0]);
    } else if (ch.label() == ChannelLabel::kCloning && params.size() == 1) {
      family = cloning_family(static_cast<int>(params[0]));
    } else if (ch.traits().entanglement_breaking) {
      family = eb_family(holevo_capacity(ch, cfg).value);
    }
    return {std::move(ch), std::move(family)};
  }
  throw DomainError("--channel is required");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Private dynamic capacity regions of qubit channels", "pdcap"};
  app.require_subcommand(1);
  Options o;

  auto* region = app.add_subcommand("region", "Sample the closed-form boundary to CSV or JSON");
  add_channel_options(region, o, true);
  add_search_options(region, o);
  o.grid = 101;
  region->add_option("--grid", o.grid, "Number of boundary parameters")->capture_default_str();
  region->add_option("--out", o.out_path, "Output file (default: standard output)");
  region->add_option("--plot", o.plot_path, "Also write a gnuplot script to this path");
  region->add_option("--format", o.format, "csv or json")->capture_default_str();

  auto* formula = app.add_subcommand("formula", "Closed-form and numeric trade-off values");
  add_channel_options(formula, o, true);
  add_search_options(formula, o);
  formula->add_option("--lambda", o.lambda, "Weight of P+S")->capture_default_str();
  formula->add_option("--mu", o.mu, "Weight of R+P+S")->capture_default_str();
  formula->add_option("--out", o.out_path, "Output file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  add_channel_options(verify, o, false);
  add_search_options(verify, o);
  verify->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify_suites()));

  auto* member = app.add_subcommand("member", "Test whether a rate triple is achievable");
  add_channel_options(member, o, true);
  add_search_options(member, o);
  member->add_option("-R", o.r, "Public classical rate")->required();
  member->add_option("-P", o.p, "Private classical rate")->required();
  member->add_option("-S", o.s, "Secret key rate")->required();
  std::size_t member_grid = kDefaultMembershipGrid;
  member->add_option("--grid", member_grid, "Parameter grid size")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  set_warning_handler([&err](std::string_view msg) { err << "warning: " << msg << "\n"; });
  int code = kExitOk;
  try {
    if (region->parsed()) {
      code = cmd_region(o, out, err);
    } else if (formula->parsed()) {
      code = cmd_formula(o, out);
    } else if (verify->parsed()) {
      code = cmd_verify(o, out);
    } else {
      o.grid = member_grid;
      code = cmd_member(o, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitIoFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = kExitBadArguments;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitBadArguments;
  }
  set_warning_handler(nullptr);
  return code;
}

}  // namespace pdcap::cli
