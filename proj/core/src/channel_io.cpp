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

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "pdcap/channels.hpp"
#include "pdcap/error.hpp"

namespace pdcap {
namespace {

using nlohmann::json;

Complex parse_complex(const json& z) {
  if (z.is_number()) return {z.get<double>(), 0.0};
  if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
    throw ParseError("channel document: complex entries must be [re, im] pairs");
  }
  return {z[0].get<double>(), z[1].get<double>()};
}

ComplexMatrix parse_kraus(const json& op, std::size_t dim_out, std::size_t dim_in,
                          std::size_t index) {
  if (!op.is_array()) throw ParseError("channel document: kraus[" + std::to_string(index) + "] is not a list");
  std::vector<Complex> entries;
  entries.reserve(dim_out * dim_in);
  const bool nested_rows = !op.empty() && op[0].is_array() && !op[0].empty() && op[0][0].is_array();
  if (nested_rows) {
    if (op.size() != dim_out) {
      throw ParseError("channel document: kraus[" + std::to_string(index) + "] has " +
                       std::to_string(op.size()) + " rows, expected " + std::to_string(dim_out));
    }
    for (const auto& row : op) {
      if (!row.is_array() || row.size() != dim_in) {
        throw ParseError("channel document: kraus[" + std::to_string(index) +
                         "] has a row of the wrong length");
      }
      for (const auto& z : row) entries.push_back(parse_complex(z));
    }
  } else {
    if (op.size() != dim_out * dim_in) {
      throw ParseError("channel document: kraus[" + std::to_string(index) + "] has " +
                       std::to_string(op.size()) + " entries, expected " +
                       std::to_string(dim_out * dim_in));
    }
    for (const auto& z : op) entries.push_back(parse_complex(z));
  }
  return ComplexMatrix(dim_out, dim_in, std::move(entries));
}

ChannelTraits traits_for(ChannelLabel label, const std::vector<double>& params) {
  if (params.empty()) return {};
  const double x = params.front();
  switch (label) {
    case ChannelLabel::kDephasing:
      return {.degradable = true, .antidegradable = x == 1.0, .entanglement_breaking = x == 1.0};
    case ChannelLabel::kErasure:
      return {.degradable = x <= 0.5, .antidegradable = x >= 0.5, .entanglement_breaking = x == 1.0};
    case ChannelLabel::kCloning:
      return {.degradable = true};
    case ChannelLabel::kCustom:
      return {};
  }
  return {};
}

std::size_t positive_dim(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("channel document: missing \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ParseError(std::string("channel document: \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

KrausChannel load_channel(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("channel document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("channel document: top level must be an object");

  const std::size_t dim_in = positive_dim(doc, "dim_in");
  const std::size_t dim_out = positive_dim(doc, "dim_out");
  if (!doc.contains("kraus") || !doc.at("kraus").is_array() || doc.at("kraus").empty()) {
    throw ParseError("channel document: \"kraus\" must be a non-empty list");
  }
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < doc.at("kraus").size(); ++i) {
    kraus.push_back(parse_kraus(doc.at("kraus")[i], dim_out, dim_in, i));
  }

  ChannelLabel label = ChannelLabel::kCustom;
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw ParseError("channel document: \"label\" must be a string");
    label = parse_channel_label(doc.at("label").get<std::string>());
  }
  std::vector<double> params;
  if (doc.contains("params")) {
    const auto& p = doc.at("params");
    if (p.is_number()) {
      params.push_back(p.get<double>());
    } else if (p.is_array()) {
      for (const auto& x : p) {
        if (!x.is_number()) throw ParseError("channel document: \"params\" must be numbers");
        params.push_back(x.get<double>());
      }
    } else {
      throw ParseError("channel document: \"params\" must be a number or a list");
    }
  }
  const ChannelTraits traits = traits_for(label, params);
  return KrausChannel(dim_in, dim_out, std::move(kraus), label, std::move(params), traits);
}

KrausChannel load_channel_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open channel file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_channel(buf.str());
}

std::string channel_to_json(const KrausChannel& ch) {
  json doc;
  doc["dim_in"] = ch.dim_in();
  doc["dim_out"] = ch.dim_out();
  json kraus = json::array();
  for (const auto& a : ch.kraus()) {
    json op = json::array();
    for (const Complex& z : a.data()) op.push_back({z.real(), z.imag()});
    kraus.push_back(std::move(op));
  }
  doc["kraus"] = std::move(kraus);
  doc["label"] = std::string(to_string(ch.label()));
  doc["params"] = std::vector<double>(ch.params().begin(), ch.params().end());
  return doc.dump();
}

}  // namespace pdcap
