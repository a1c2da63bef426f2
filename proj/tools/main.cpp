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

// qfield command-line front end.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfield/qfield.hpp"
#include "run_config.hpp"

namespace {

using namespace qfield;
using qfield::cli::Format;
using qfield::cli::RunConfig;

constexpr int kDefaultNMax = 8;
constexpr int kDefaultQuadOrder = 40;

struct FieldOptions {
  std::string psi;
  std::string phi;
  std::string psi1;
  std::string psi2;
  std::string phi1;
  std::string phi2;
  bool physical = false;
};

FieldConvention convention(const FieldOptions& f) {
  return f.physical ? FieldConvention::kPhysicalPsi
                    : FieldConvention::kReducedPsi;
}

void emit(const Table& table, const Metadata& meta, const RunConfig& cfg) {
  cli::write_output(cfg.format == Format::kJson ? table_to_json(table, meta)
                                                : table_to_csv(table, meta),
                    cfg.out);
}

void add_physical_flag(CLI::App* sub, FieldOptions& f) {
  sub->add_flag("--physical", f.physical,
                "Field specs give Psi itself rather than psi = sqrt(2 omega) Psi");
}

int run_fig2(const RunConfig& cfg, double xi_min, double xi_max, int steps,
             bool allow_unbalanced) {
  if (!cfg.splitter.is_balanced() && !allow_unbalanced) {
    throw InvalidArgument(
        "fig2 compares against a closed form valid for a 50:50 splitter; "
        "pass --allow-unbalanced to run anyway");
  }
  if (steps < 1) throw InvalidArgument("--steps must be >= 1");
  const auto grid = linspace(xi_min, xi_max, steps);
  RSurfaceOptions options;
  options.quad_order = cfg.quad_order;
  const RSurface surface =
      r_surface(grid, grid, cfg.basis(), cfg.splitter, options);
  Metadata meta = cli::base_metadata(cfg, "fig2");
  meta.emplace_back("xi_min", format_double(xi_min));
  meta.emplace_back("xi_max", format_double(xi_max));
  meta.emplace_back("steps", std::to_string(steps));
  meta.emplace_back("flagged_cells", std::to_string(surface.flagged.size()));
  if (!surface.flagged.empty()) {
    double worst = 0.0;
    for (const auto& cell : surface.flagged) {
      worst = std::max(worst, cell.truncation_residual);
    }
    std::cerr << "qfield: warning: " << surface.flagged.size()
              << " cells exceed the truncation tolerance (largest residual "
              << worst << "); raise --n-max to shrink it\n";
  }
  cli::write_output(cfg.format == Format::kJson
                        ? r_surface_to_json(surface, meta, true)
                        : r_surface_to_csv(surface, meta, true),
                    cfg.out);
  return 0;
}

int run_table1(const RunConfig& cfg, const FieldOptions& f,
               const std::vector<double>& times) {
  const ModeBasis basis = cfg.basis();
  const FieldConfiguration config(cli::parse_mode_spec(f.psi, basis),
                                  cfg.omega, convention(f));
  const ModeVector phi = cli::parse_mode_spec(f.phi, basis);
  const Complex w = waist_bracket(config.psi(), phi);
  const Complex q = waist_bracket(phi, phi);
  Table table{{"t", "N", "re", "im", "closed_re", "closed_im", "abs_diff"}, {}};
  for (double t : times) {
    const Complex e = std::polar(1.0, -cfg.omega * t);
    const Complex closed[4] = {1.0, w * e, (w * w - q) * e * e / std::sqrt(2.0),
                               w * (w * w - 3.0 * q) * e * e * e / std::sqrt(6.0)};
    for (int n = 0; n <= 3; ++n) {
      const Complex r = number_state_ratio(config, phi, n, t);
      table.rows.push_back({t, static_cast<double>(n), r.real(), r.imag(),
                            closed[n].real(), closed[n].imag(),
                            std::abs(r - closed[n])});
    }
  }
  Metadata meta = cli::base_metadata(cfg, "table1");
  meta.emplace_back("psi", f.psi);
  meta.emplace_back("phi", f.phi);
  meta.emplace_back("psi_phi", format_double(w.real()) + "," + format_double(w.imag()));
  meta.emplace_back("phi_phi", format_double(q.real()) + "," + format_double(q.imag()));
  emit(table, meta, cfg);
  return 0;
}

int run_amplitude(const RunConfig& cfg, const FieldOptions& f, double t,
                  int max_photons) {
  if (max_photons < 0) throw InvalidArgument("--max-photons must be >= 0");
  const ModeBasis basis = cfg.basis();
  const FieldConfiguration config(cli::parse_mode_spec(f.psi, basis),
                                  cfg.omega, convention(f));
  const ModeVector phi = cli::parse_mode_spec(f.phi, basis);
  Table table{{"N", "re", "im", "abs2"}, {}};
  for (int n = 0; n <= max_photons; ++n) {
    const Complex r = number_state_ratio(config, phi, n, t);
    table.rows.push_back(
        {static_cast<double>(n), r.real(), r.imag(), std::norm(r)});
  }
  Metadata meta = cli::base_metadata(cfg, "amplitude");
  meta.emplace_back("psi", f.psi);
  meta.emplace_back("phi", f.phi);
  meta.emplace_back("t", format_double(t));
  emit(table, meta, cfg);
  return 0;
}

TwoPortFieldConfiguration two_port(const RunConfig& cfg, const FieldOptions& f,
                                   const ModeBasis& basis) {
  return TwoPortFieldConfiguration(
      FieldConfiguration(cli::parse_mode_spec(f.psi1, basis), cfg.omega,
                         convention(f)),
      FieldConfiguration(cli::parse_mode_spec(f.psi2, basis), cfg.omega,
                         convention(f)));
}

int run_r_functional(const RunConfig& cfg, const FieldOptions& f) {
  const ModeBasis basis = cfg.basis();
  const auto config = two_port(cfg, f, basis);
  const ModeVector phi = cli::parse_mode_spec(f.phi, basis);
  Table table{{"R", "vacuum_weight_1", "vacuum_weight_2"},
              {{r_functional(config, phi, cfg.splitter),
                vacuum_relative_weight(config.port1()),
                vacuum_relative_weight(config.port2())}}};
  Metadata meta = cli::base_metadata(cfg, "r-functional");
  meta.emplace_back("psi1", f.psi1);
  meta.emplace_back("psi2", f.psi2);
  meta.emplace_back("phi", f.phi);
  emit(table, meta, cfg);
  return 0;
}

Point3 to_point(const std::vector<double>& v, const char* what) {
  if (v.size() != 3) {
    throw InvalidArgument(std::string(what) + " expects x,y,z");
  }
  return {v[0], v[1], v[2]};
}

int run_correlation(const RunConfig& cfg, const FieldOptions& f,
                    const std::vector<double>& r1, const std::vector<double>& r2) {
  const ModeBasis basis = cfg.basis();
  const ModeVector phi = cli::parse_mode_spec(f.phi, basis);
  const Point3 p1 = to_point(r1, "--r1");
  const Point3 p2 = to_point(r2, "--r2");
  Table table{{"x1", "y1", "z1", "x2", "y2", "z2", "G"},
              {{p1.x, p1.y, p1.z, p2.x, p2.y, p2.z,
                two_point_correlation(phi, p1, p2, cfg.splitter, cfg.omega)}}};
  Metadata meta = cli::base_metadata(cfg, "correlation");
  meta.emplace_back("phi", f.phi);
  emit(table, meta, cfg);
  return 0;
}

int run_detect_prob(const RunConfig& cfg, const FieldOptions& f, int n1_max,
                    int n2_max) {
  if (n1_max < 0 || n2_max < 0) {
    throw InvalidArgument("photon-number limits must be >= 0");
  }
  const ModeBasis basis = cfg.basis();
  const auto config = two_port(cfg, f, basis);
  const ModeVector phi1 = cli::parse_mode_spec(f.phi1, basis);
  const ModeVector phi2 = cli::parse_mode_spec(f.phi2, basis);
  Table table{{"N1", "N2", "ratio"}, {}};
  for (int n1 = 0; n1 <= n1_max; ++n1) {
    for (int n2 = 0; n2 <= n2_max; ++n2) {
      table.rows.push_back(
          {static_cast<double>(n1), static_cast<double>(n2),
           detection_probability_ratio(n1, n2, config, phi1, phi2)});
    }
  }
  Metadata meta = cli::base_metadata(cfg, "detect-prob");
  meta.emplace_back("psi1", f.psi1);
  meta.emplace_back("psi2", f.psi2);
  meta.emplace_back("phi1", f.phi1);
  meta.emplace_back("phi2", f.phi2);
  emit(table, meta, cfg);
  return 0;
}

struct VerifyOptions {
  std::string suite = "all";
  int fock_cutoff = 3;
  std::size_t dim_cap = fock::kDefaultDimensionCap;
  unsigned seed = VerifyConfig{}.seed;
};

void add_verify_options(CLI::App* sub, VerifyOptions& v) {
  sub->add_option("--fock-cutoff", v.fock_cutoff,
                  "Photon cutoff of the oracle Fock space")
      ->capture_default_str();
  sub->add_option("--dim-cap", v.dim_cap, "Largest oracle Fock dimension")
      ->capture_default_str();
  sub->add_option("--seed", v.seed, "Seed for randomized checks")
      ->capture_default_str();
}

int run_verify(const RunConfig& cfg, const VerifyOptions& v) {
  VerifyConfig vc;
  vc.w0 = cfg.w0;
  vc.k = cfg.k;
  vc.omega = cfg.omega;
  vc.n_max = cfg.n_max;
  vc.quad_order = cfg.quad_order;
  vc.splitter = cfg.splitter;
  vc.fock_cutoff = v.fock_cutoff;
  vc.fock_dim_cap = v.dim_cap;
  vc.seed = v.seed;
  const auto results = run_suite(v.suite, vc);
  Metadata meta = cli::base_metadata(cfg, "verify");
  meta.emplace_back("suite", v.suite);
  meta.emplace_back("fock_cutoff", std::to_string(v.fock_cutoff));
  meta.emplace_back("dim_cap", std::to_string(v.dim_cap));
  meta.emplace_back("seed", std::to_string(v.seed));
  if (cfg.format == Format::kCsv) {
    std::string text;
    for (const auto& [key, value] : meta) text += "# " + key + ": " + value + "\n";
    text += "check_name,max_error,tolerance,pass\n";
    for (const auto& r : results) {
      text += r.name + "," + format_double(r.max_error) + "," +
              format_double(r.tolerance) + "," + (r.pass ? "true" : "false") +
              "\n";
    }
    cli::write_output(text, cfg.out);
  } else {
    auto doc = nlohmann::json::parse(report_json(v.suite, results));
    for (const auto& [key, value] : meta) doc["metadata"][key] = value;
    cli::write_output(doc.dump(2) + "\n", cfg.out);
  }
  for (const auto& r : results) {
    if (!r.pass) {
      std::cerr << "qfield: check failed: " << r.name
                << " (max_error " << r.max_error << " > tolerance "
                << r.tolerance << ")\n";
    }
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite-Gauss photon fields at a beam splitter"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<cli::JsonConfig>());
  app.set_config("--config", "", "JSON run configuration");
  cli::GlobalOptions global;
  global.register_on(app);

  FieldOptions fields;

  auto* fig2 = app.add_subcommand("fig2", "R surface over displaced TEM10 fields");
  double xi_min = -3.0;
  double xi_max = 3.0;
  int steps = 41;
  bool allow_unbalanced = false;
  fig2->add_option("--xi-min", xi_min, "Lower end of the xi grid")->capture_default_str();
  fig2->add_option("--xi-max", xi_max, "Upper end of the xi grid")->capture_default_str();
  fig2->add_option("--steps", steps, "Grid points per axis")->capture_default_str();
  fig2->add_flag("--allow-unbalanced", allow_unbalanced,
                 "Run with a non-50:50 splitter; the closed-form column "
                 "then does not apply");

  auto* table1 = app.add_subcommand("table1", "Number-state ratios for N = 0..3");
  std::vector<double> times{0.0};
  table1->add_option("--psi", fields.psi, "Field configuration psi")->required();
  table1->add_option("--phi", fields.phi, "Photon mode phi")->required();
  table1->add_option("--t", times, "Times (comma separated)")->delimiter(',');
  add_physical_flag(table1, fields);

  auto* amplitude = app.add_subcommand("amplitude", "Number-state ratio sweep over N");
  double t_single = 0.0;
  int max_photons = 6;
  amplitude->add_option("--psi", fields.psi, "Field configuration psi")->required();
  amplitude->add_option("--phi", fields.phi, "Photon mode phi")->required();
  amplitude->add_option("--t", t_single, "Time")->capture_default_str();
  amplitude->add_option("--max-photons", max_photons, "Largest photon number N")->capture_default_str();
  add_physical_flag(amplitude, fields);

  auto* rfun = app.add_subcommand("r-functional", "Single-photon R functional");
  rfun->add_option("--psi1", fields.psi1, "Port-1 field configuration")->required();
  rfun->add_option("--psi2", fields.psi2, "Port-2 field configuration")->required();
  rfun->add_option("--phi", fields.phi, "Photon mode phi")->required();
  add_physical_flag(rfun, fields);

  auto* corr = app.add_subcommand("correlation", "Two-point field correlation");
  std::vector<double> r1;
  std::vector<double> r2;
  corr->add_option("--phi", fields.phi, "Photon mode phi")->required();
  corr->add_option("--r1", r1, "Port-1 point x,y,z")->delimiter(',')->required();
  corr->add_option("--r2", r2, "Port-2 point x,y,z")->delimiter(',')->required();

  auto* detect = app.add_subcommand("detect-prob", "Detection-probability ratios");
  int n1_max = 3;
  int n2_max = 3;
  detect->add_option("--psi1", fields.psi1, "Port-1 field configuration")->required();
  detect->add_option("--psi2", fields.psi2, "Port-2 field configuration")->required();
  detect->add_option("--phi1", fields.phi1, "Port-1 detection mode")->required();
  detect->add_option("--phi2", fields.phi2, "Port-2 detection mode")->required();
  detect->add_option("--n1-max", n1_max, "Largest port-1 photon count")->capture_default_str();
  detect->add_option("--n2-max", n2_max, "Largest port-2 photon count")->capture_default_str();
  add_physical_flag(detect, fields);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("suite", verify_opts.suite,
                     "modes, beamsplitter, amplitudes, oracle or all")
      ->capture_default_str();
  add_verify_options(verify, verify_opts);

  auto* oracle = app.add_subcommand("oracle", "Fock-space oracle");
  oracle->require_subcommand(1);
  auto* oracle_verify = oracle->add_subcommand("verify", "Run the oracle suite");
  add_verify_options(oracle_verify, verify_opts);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  oracle_verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*fig2) {
      return run_fig2(global.resolve(14, 48), xi_min, xi_max, steps,
                      allow_unbalanced);
    }
    const RunConfig cfg = global.resolve(kDefaultNMax, kDefaultQuadOrder);
    if (*table1) return run_table1(cfg, fields, times);
    if (*amplitude) return run_amplitude(cfg, fields, t_single, max_photons);
    if (*rfun) return run_r_functional(cfg, fields);
    if (*corr) return run_correlation(cfg, fields, r1, r2);
    if (*detect) return run_detect_prob(cfg, fields, n1_max, n2_max);
    if (*verify) return run_verify(cfg, verify_opts);
    if (*oracle_verify) {
      verify_opts.suite = "oracle";
      return run_verify(cfg, verify_opts);
    }
  } catch (const qfield::Error& e) {
    std::cerr << "qfield: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qfield: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
