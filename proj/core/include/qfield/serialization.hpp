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

#ifndef QFIELD_SERIALIZATION_HPP_
#define QFIELD_SERIALIZATION_HPP_

#include <string>
#include <utility>
#include <vector>

#include "qfield/beamsplitter.hpp"
#include "qfield/mode_space.hpp"
#include "qfield/observables.hpp"

namespace qfield {

/// Ordered key/value pairs written at the top of every emitted file:
/// '# key: value' lines in CSV, a "metadata" object in JSON.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// 17 significant digits, '.' separator, independent of the C locale.
std::string format_double(double v);

/// {"n_max": int, "coeffs": [[re, im], ...]} in row-major (n, m) order.
std::string mode_vector_to_json(const ModeVector& v,
                                const Metadata& metadata = {});
/// Throws InvalidArgument on malformed input or a coefficient count that
/// does not match (n_max + 1)^2.
ModeVector mode_vector_from_json(const std::string& text,
                                 const BeamGeometry& geom);

/// Columns n,m,re,im; '#' lines are metadata and are skipped on read.
std::string mode_vector_to_csv(const ModeVector& v,
                               const Metadata& metadata = {});
/// Entries absent from the file are zero; n_max is the largest index seen.
ModeVector mode_vector_from_csv(const std::string& text,
                                const BeamGeometry& geom);

/// CSV columns xi1,xi2,R. With with_closed_form the columns
/// R_closed_form,abs_diff are appended.
std::string r_surface_to_csv(const RSurface& surface,
                             const Metadata& metadata = {},
                             bool with_closed_form = false);
/// {"xi1": [...], "xi2": [...], "values": [[...]]}, plus "closed_form"
/// and "abs_diff" matrices when requested.
std::string r_surface_to_json(const RSurface& surface,
                              const Metadata& metadata = {},
                              bool with_closed_form = false);

/// {"port1": {"amp": [re, im], "mode": <ModeVector>}, "port2": {...}}.
std::string to_json(const SinglePhotonOutput& out,
                    const Metadata& metadata = {});
std::string to_json(const CoherentOutput& out, const Metadata& metadata = {});

/// Named numeric columns, one row per record.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Header line of column names, then rows of 17-digit values.
std::string table_to_csv(const Table& table, const Metadata& metadata = {});
/// {"columns": [...], "rows": [[...], ...], "metadata": {...}}.
std::string table_to_json(const Table& table, const Metadata& metadata = {});

}  // namespace qfield

#endif  // QFIELD_SERIALIZATION_HPP_
