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

#ifndef QFIELD_VERIFY_HPP_
#define QFIELD_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "qfield/beamsplitter.hpp"
#include "qfield/geometry.hpp"

namespace qfield {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyConfig {
  double w0 = 1.0;
  double k = 1.0;
  double omega = 1.0;
  int n_max = 8;
  int quad_order = 40;
  SplitterCoefficients splitter = SplitterCoefficients::balanced();
  /// Fock cutoff used by the oracle suite.
  int fock_cutoff = 3;
  std::size_t fock_dim_cap = 4096;
  unsigned seed = 20240611;
};

/// Suites: "modes", "beamsplitter", "amplitudes", "oracle", "all".
/// Throws InvalidArgument for an unknown name. Oracle checks that cannot
/// build their Fock space under fock_dim_cap throw DimensionCapExceeded.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

/// {"suite": ..., "pass": bool, "checks": [{check_name, max_error,
/// tolerance, pass}, ...]}.
std::string report_json(const std::string& suite,
                        const std::vector<CheckResult>& results);

}  // namespace qfield

#endif  // QFIELD_VERIFY_HPP_
