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

#ifndef QFIELD_TOOLS_RUN_CONFIG_HPP_
#define QFIELD_TOOLS_RUN_CONFIG_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qfield/beamsplitter.hpp"
#include "qfield/geometry.hpp"
#include "qfield/mode_space.hpp"
#include "qfield/serialization.hpp"

namespace qfield::cli {

enum class Format { kCsv, kJson };

/// Settings shared by every subcommand, after flags and --config are merged.
struct RunConfig {
  double w0 = 1.0;
  double k = 1.0;
  double omega = 1.0;
  int n_max = 8;
  int quad_order = 40;
  SplitterCoefficients splitter = SplitterCoefficients::balanced();
  std::string out;
  Format format = Format::kCsv;

  BeamGeometry geometry() const { return BeamGeometry(w0, k); }
  ModeBasis basis() const { return ModeBasis(geometry(), n_max); }
};

/// Raw global options as parsed; unset fields fall back to per-command
/// defaults in resolve().
struct GlobalOptions {
  std::optional<double> w0;
  std::optional<double> k;
  std::optional<double> omega;
  std::optional<int> n_max;
  std::optional<int> quad_order;
  std::optional<std::string> splitter;
  std::optional<std::string> out;
  std::optional<std::string> format;

  void register_on(CLI::App& app);
  RunConfig resolve(int default_n_max, int default_quad_order) const;
};

/// "5050" or "rho_re,rho_im,tau_re,tau_im". Throws InvalidArgument or
/// InvalidSplitter.
SplitterCoefficients parse_splitter(const std::string& text);

/// A mode vector given as
///   - a path to a .json or .csv mode-vector file,
///   - a preset "tem<n><m>" (unit vector, single-digit indices), or
///   - entries "n,m:re[,im]" separated by ';', e.g. "0,0:0.8;1,1:-0.6".
/// File contents are re-embedded into basis; weight outside it throws
/// TruncationError.
ModeVector parse_mode_spec(const std::string& spec, const ModeBasis& basis);

/// "x,y,z" or three numbers.
std::vector<double> parse_numbers(const std::string& text);

Metadata base_metadata(const RunConfig& config, const std::string& command);

/// Writes to config.out, or stdout when it is empty or "-".
void write_output(const std::string& text, const std::string& path);

/// JSON document as a CLI11 config source. Top-level keys set global
/// options; an object under a subcommand name sets that subcommand's
/// options. Underscores in keys map to dashes; arrays become
/// comma-separated values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also,
                        bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace qfield::cli

#endif  // QFIELD_TOOLS_RUN_CONFIG_HPP_
