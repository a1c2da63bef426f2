// Copyright 2026 The qfield Authors
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

#include "run_config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "qfield/error.hpp"

namespace qfield::cli {
namespace {

double to_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  while (first < last && *first == ' ') ++first;
  if (first < last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InvalidArgument("not a number: '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModeVector embed(const ModeVector& v, const ModeBasis& basis) {
  ModeVector out(basis);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const ModeIndex mu = v.basis().mode(i);
    if (basis.contains(mu)) {
      out[mu] = v[i];
    } else if (std::abs(v[i]) > 1e-12) {
      throw TruncationError("mode (" + std::to_string(mu.n) + "," +
                            std::to_string(mu.m) + ") lies outside n_max = " +
                            std::to_string(basis.n_max()));
    }
  }
  return out;
}

std::string complex_text(Complex c) {
  return format_double(c.real()) + "," + format_double(c.imag());
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_double(v.get<double>());
  throw InvalidArgument("unsupported config value " + v.dump());
}

void collect(const nlohmann::json& obj, std::vector<std::string>& parents,
             std::vector<CLI::ConfigItem>& items) {
  for (const auto& [key, value] : obj.items()) {
    std::string name = key;
    for (char& c : name) {
      if (c == '_') c = '-';
    }
    if (value.is_object()) {
      parents.push_back(name);
      collect(value, parents, items);
      parents.pop_back();
      continue;
    }
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = name;
    if (value.is_array()) {
      std::string joined;
      for (const auto& e : value) {
        if (!joined.empty()) joined += ",";
        joined += json_scalar(e);
      }
      item.inputs.push_back(joined);
    } else {
      item.inputs.push_back(json_scalar(value));
    }
    items.push_back(std::move(item));
  }
}

}  // namespace

void GlobalOptions::register_on(CLI::App& app) {
  app.add_option("--w0", w0, "Beam waist")->check(CLI::PositiveNumber);
  app.add_option("--k", k, "Wavenumber")->check(CLI::PositiveNumber);
  app.add_option("--omega", omega, "Angular frequency (defaults to k)")
      ->check(CLI::PositiveNumber);
  app.add_option("--n-max", n_max, "Largest mode index per axis");
  app.add_option("--quad-order", quad_order, "Gauss-Hermite order");
  app.add_option("--splitter", splitter,
                 "5050 or rho_re,rho_im,tau_re,tau_im");
  app.add_option("--out", out, "Output file (default stdout)");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

RunConfig GlobalOptions::resolve(int default_n_max,
                                 int default_quad_order) const {
  RunConfig cfg;
  cfg.w0 = w0.value_or(1.0);
  cfg.k = k.value_or(1.0);
  cfg.omega = omega.value_or(cfg.k);
  cfg.n_max = n_max.value_or(default_n_max);
  cfg.quad_order = quad_order.value_or(default_quad_order);
  cfg.splitter = parse_splitter(splitter.value_or("5050"));
  cfg.out = out.value_or("");
  cfg.format = format.value_or("csv") == "json" ? Format::kJson : Format::kCsv;
  // Validate eagerly so bad geometry fails before any work.
  (void)cfg.basis();
  return cfg;
}

SplitterCoefficients parse_splitter(const std::string& text) {
  if (text == "5050") return SplitterCoefficients::balanced();
  const auto values = parse_numbers(text);
  if (values.size() != 4) {
    throw InvalidArgument("--splitter expects 5050 or four numbers, got '" +
                          text + "'");
  }
  return SplitterCoefficients(Complex(values[0], values[1]),
                              Complex(values[2], values[3]));
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(to_double(part));
  return values;
}

ModeVector parse_mode_spec(const std::string& spec, const ModeBasis& basis) {
  static const std::regex preset(R"(tem(\d)(\d))");
  std::smatch match;
  if (std::regex_match(spec, match, preset)) {
    const ModeIndex mu{std::stoi(match[1]), std::stoi(match[2])};
    if (!basis.contains(mu)) {
      throw TruncationError("preset " + spec + " lies outside n_max = " +
                            std::to_string(basis.n_max()));
    }
    return ModeVector::unit(basis, mu);
  }
  const std::filesystem::path path(spec);
  if (path.extension() == ".json" || path.extension() == ".csv") {
    const std::string text = read_file(spec);
    const ModeVector v = path.extension() == ".json"
                             ? mode_vector_from_json(text, basis.geometry())
                             : mode_vector_from_csv(text, basis.geometry());
    return embed(v, basis);
  }
  static const std::regex entry(R"(\s*(\d+)\s*,\s*(\d+)\s*:\s*([^,]+)(?:,(.+))?)");
  ModeVector out(basis);
  for (const auto& part : split(spec, ';')) {
    if (!std::regex_match(part, match, entry)) {
      throw InvalidArgument("cannot parse mode spec '" + spec + "'");
    }
    const ModeIndex mu{std::stoi(match[1]), std::stoi(match[2])};
    if (!basis.contains(mu)) {
      throw TruncationError("mode spec entry '" + part +
                            "' lies outside n_max = " +
                            std::to_string(basis.n_max()));
    }
    const double im = match[4].matched ? to_double(match[4]) : 0.0;
    out[mu] += Complex(to_double(match[3]), im);
  }
  return out;
}

Metadata base_metadata(const RunConfig& config, const std::string& command) {
  return {{"command", command},
          {"w0", format_double(config.w0)},
          {"k", format_double(config.k)},
          {"n_max", std::to_string(config.n_max)},
          {"quad_order", std::to_string(config.quad_order)},
          {"rho", complex_text(config.splitter.rho())},
          {"tau", complex_text(config.splitter.tau())},
          {"omega", format_double(config.omega)}};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidArgument("write to '" + path + "' failed");
}

std::string JsonConfig::to_config(const CLI::App*, bool, bool,
                                  std::string) const {
  return "{}\n";
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(
    std::istream& input) const {
  nlohmann::json doc;
  try {
    input >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ConversionError(std::string("config is not valid JSON: ") +
                               e.what());
  }
  if (!doc.is_object()) {
    throw CLI::ConversionError("config must be a JSON object");
  }
  std::vector<CLI::ConfigItem> items;
  std::vector<std::string> parents;
  collect(doc, parents, items);
  return items;
}

}  // namespace qfield::cli
