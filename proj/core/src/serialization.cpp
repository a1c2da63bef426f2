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

#include "qfield/serialization.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qfield/error.hpp"

namespace qfield {

using nlohmann::json;

namespace {

json metadata_json(const Metadata& metadata) {
  json obj = json::object();
  for (const auto& [key, value] : metadata) obj[key] = value;
  return obj;
}

void write_metadata_csv(std::ostringstream& out, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) {
    out << "# " << key << ": " << value << '\n';
  }
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json mode_vector_json(const ModeVector& v) {
  json coeffs = json::array();
  for (const Complex& c : v.coeffs()) coeffs.push_back(complex_json(c));
  return {{"n_max", v.basis().n_max()}, {"coeffs", std::move(coeffs)}};
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  while (begin < end && *begin == ' ') ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\r')) --end;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("cannot parse number '" + token + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string mode_vector_to_json(const ModeVector& v,
                                const Metadata& metadata) {
  json doc = mode_vector_json(v);
  if (!metadata.empty()) doc["metadata"] = metadata_json(metadata);
  return doc.dump(2) + "\n";
}

ModeVector mode_vector_from_json(const std::string& text,
                                 const BeamGeometry& geom) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed mode vector JSON: ") +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("n_max") || !doc.contains("coeffs")) {
    throw InvalidArgument("mode vector JSON needs \"n_max\" and \"coeffs\"");
  }
  try {
    const ModeBasis basis(geom, doc.at("n_max").get<int>());
    const json& coeffs = doc.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != basis.size()) {
      throw InvalidArgument("mode vector JSON has " +
                            std::to_string(coeffs.size()) +
                            " coefficients, expected " +
                            std::to_string(basis.size()));
    }
    std::vector<Complex> values;
    values.reserve(coeffs.size());
    for (const json& c : coeffs) {
      if (!c.is_array() || c.size() != 2) {
        throw InvalidArgument("each coefficient must be a [re, im] pair");
      }
      values.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return ModeVector(basis, std::move(values));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed mode vector JSON: ") +
                          e.what());
  }
}

std::string mode_vector_to_csv(const ModeVector& v, const Metadata& metadata) {
  std::ostringstream out;
  write_metadata_csv(out, metadata);
  out << "n,m,re,im\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    const ModeIndex mu = v.basis().mode(i);
    out << mu.n << ',' << mu.m << ',' << format_double(v[i].real()) << ','
        << format_double(v[i].imag()) << '\n';
  }
  return out.str();
}

ModeVector mode_vector_from_csv(const std::string& text,
                                const BeamGeometry& geom) {
  std::istringstream in(text);
  std::string line;
  struct Entry {
    int n;
    int m;
    Complex c;
  };
  std::vector<Entry> entries;
  int n_max = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "n,m,re,im") {
        throw InvalidArgument("mode vector CSV header must be 'n,m,re,im'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      throw InvalidArgument("mode vector CSV row needs 4 fields: " + line);
    }
    const double n = parse_double(fields[0]);
    const double m = parse_double(fields[1]);
    if (n < 0 || m < 0 || n != std::floor(n) || m != std::floor(m)) {
      throw InvalidArgument("mode indices must be nonnegative integers: " + line);
    }
    entries.push_back({static_cast<int>(n), static_cast<int>(m),
                       Complex(parse_double(fields[2]), parse_double(fields[3]))});
    n_max = std::max({n_max, entries.back().n, entries.back().m});
  }
  if (!header_seen) throw InvalidArgument("mode vector CSV is empty");
  ModeVector v(ModeBasis(geom, n_max));
  for (const Entry& e : entries) v[ModeIndex{e.n, e.m}] = e.c;
  return v;
}

std::string r_surface_to_csv(const RSurface& surface, const Metadata& metadata,
                             bool with_closed_form) {
  std::ostringstream out;
  write_metadata_csv(out, metadata);
  out << "xi1,xi2,R";
  if (with_closed_form) out << ",R_closed_form,abs_diff";
  out << '\n';
  for (std::size_t i = 0; i < surface.xi1.size(); ++i) {
    for (std::size_t j = 0; j < surface.xi2.size(); ++j) {
      const double r = surface.values[i][j];
      out << format_double(surface.xi1[i]) << ','
          << format_double(surface.xi2[j]) << ',' << format_double(r);
      if (with_closed_form) {
        const double c = r_closed_form(surface.xi1[i], surface.xi2[j]);
        out << ',' << format_double(c) << ',' << format_double(std::abs(r - c));
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string r_surface_to_json(const RSurface& surface,
                              const Metadata& metadata,
                              bool with_closed_form) {
  json doc = {{"xi1", surface.xi1},
              {"xi2", surface.xi2},
              {"values", surface.values}};
  if (with_closed_form) {
    json closed = json::array();
    json diff = json::array();
    for (std::size_t i = 0; i < surface.xi1.size(); ++i) {
      json crow = json::array();
      json drow = json::array();
      for (std::size_t j = 0; j < surface.xi2.size(); ++j) {
        const double c = r_closed_form(surface.xi1[i], surface.xi2[j]);
        crow.push_back(c);
        drow.push_back(std::abs(surface.values[i][j] - c));
      }
      closed.push_back(std::move(crow));
      diff.push_back(std::move(drow));
    }
    doc["closed_form"] = std::move(closed);
    doc["abs_diff"] = std::move(diff);
  }
  if (!surface.flagged.empty()) {
    json flagged = json::array();
    for (const auto& cell : surface.flagged) {
      flagged.push_back({{"i", cell.i},
                         {"j", cell.j},
                         {"truncation_residual", cell.truncation_residual}});
    }
    doc["flagged"] = std::move(flagged);
  }
  if (!metadata.empty()) doc["metadata"] = metadata_json(metadata);
  return doc.dump(2) + "\n";
}

std::string to_json(const SinglePhotonOutput& out, const Metadata& metadata) {
  json doc = {
      {"port1", {{"amp", complex_json(out.amp1)}, {"mode", mode_vector_json(out.mode1)}}},
      {"port2", {{"amp", complex_json(out.amp2)}, {"mode", mode_vector_json(out.mode2)}}}};
  if (!metadata.empty()) doc["metadata"] = metadata_json(metadata);
  return doc.dump(2) + "\n";
}

std::string to_json(const CoherentOutput& out, const Metadata& metadata) {
  json doc = {
      {"port1", {{"amp", complex_json(out.alpha1)}, {"mode", mode_vector_json(out.mode1)}}},
      {"port2", {{"amp", complex_json(out.alpha2)}, {"mode", mode_vector_json(out.mode2)}}}};
  if (!metadata.empty()) doc["metadata"] = metadata_json(metadata);
  return doc.dump(2) + "\n";
}

std::string table_to_csv(const Table& table, const Metadata& metadata) {
  std::ostringstream out;
  write_metadata_csv(out, metadata);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw InvalidArgument("table row width does not match its columns");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_double(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const Table& table, const Metadata& metadata) {
  json doc;
  doc["columns"] = table.columns;
  doc["rows"] = json::array();
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw InvalidArgument("table row width does not match its columns");
    }
    doc["rows"].push_back(row);
  }
  if (!metadata.empty()) doc["metadata"] = metadata_json(metadata);
  return doc.dump(2) + "\n";
}

}  // namespace qfield
