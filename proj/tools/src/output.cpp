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

#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "pdcap/cli.hpp"

namespace pdcap::cli {
namespace {

std::string gnuplot_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    out += c;
    if (c == '\'') out += '\'';
  }
  return out + "'";
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

std::string region_csv(std::span<const BoundTriple> rows) {
  std::string out = "param,b_rp,b_ps,b_rps\n";
  for (const BoundTriple& b : rows) {
    out += format_double(b.param) + ',' + format_double(b.b_rp) + ',' + format_double(b.b_ps) +
           ',' + format_double(b.b_rps) + '\n';
  }
  return out;
}

std::string region_json(std::span<const BoundTriple> rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const BoundTriple& b : rows) {
    doc.push_back({{"param", b.param}, {"b_rp", b.b_rp}, {"b_ps", b.b_ps}, {"b_rps", b.b_rps}});
  }
  return doc.dump(2) + "\n";
}

std::string plot_script(const std::string& csv_path, const std::string& title) {
  const std::string data = gnuplot_quote(csv_path);
  // Apex of the cone at one parameter: (b_rps - b_ps, b_rp + b_ps - b_rps, b_rps - b_rp).
  const std::string apex = "($4-$3):($2+$3-$4):($4-$2)";
  std::ostringstream s;
  s << "# Boundary of the rate region; run with gnuplot.\n"
    << "set terminal pngcairo size 1400,600\n"
    << "set output " << gnuplot_quote(csv_path + ".png") << "\n"
    << "set datafile separator ','\n"
    << "set multiplot layout 1,2 title " << gnuplot_quote(title) << "\n"
    << "set xlabel 'boundary parameter'\n"
    << "set ylabel 'bits'\n"
    << "plot " << data << " skip 1 using 1:2 with lines title 'R+P bound', \\\n"
    << "     '' skip 1 using 1:3 with lines title 'P+S bound', \\\n"
    << "     '' skip 1 using 1:4 with lines title 'R+P+S bound'\n"
    << "set xlabel 'R'\n"
    << "set ylabel 'P'\n"
    << "set zlabel 'S'\n"
    << "set view 60,30\n"
    << "splot " << data << " skip 1 using " << apex << " with lines lw 2 title 'cone apex', \\\n"
    << "      '' skip 1 using " << apex
    << ":(-1):(1):(-1) with vectors nohead lc rgb '#a0a0a0' title 'one-time pad edge', \\\n"
    << "      '' skip 1 using " << apex
    << ":(0):(-1):(1) with vectors nohead lc rgb '#80b0e0' title 'secret key edge', \\\n"
    << "      '' skip 1 using " << apex
    << ":(1):(-1):(0) with vectors nohead lc rgb '#e0a080' title 'private-to-public edge'\n"
    << "unset multiplot\n";
  return s.str();
}

}  // namespace pdcap::cli
