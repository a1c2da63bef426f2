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

#include "qfield/observables.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "qfield/error.hpp"
#include "qfield/parallel.hpp"
#include "qfield/quadrature.hpp"

namespace qfield {

double r_functional(const TwoPortFieldConfiguration& cfg,
                    const ModeVector& phi, const SplitterCoefficients& s) {
  require_normalized(phi);
  const ModeVector phi_r = reflect_mode_vector(phi);
  const Complex amp =
      s.tau() * inner_product(cfg.port1().physical_Psi(), phi) +
      s.rho() * inner_product(cfg.port2().physical_Psi(), phi_r);
  return 2.0 * cfg.omega() * std::norm(amp);
}

DisplacedConfiguration displaced_tem10_config(double xi,
                                              const ModeBasis& basis,
                                              int quad_order) {
  if (!(std::abs(xi) <= kMaxDisplacement)) {
    throw TruncationError("displacement |xi| = " + std::to_string(std::abs(xi)) +
                          " exceeds the supported maximum 3");
  }
  if (basis.n_max() < kMinDisplacedNMax) {
    throw TruncationError("displaced TEM10 configurations need n_max >= 12, got " +
                          std::to_string(basis.n_max()));
  }
  const BeamGeometry& geom = basis.geometry();
  const double shift = geom.x_scale(0.0) * xi;
  const SampledField field{geom, [geom, shift](double x, double y, double) {
                             return mode_1d(1, x + shift, 0.0, geom) *
                                    mode_1d(0, y, 0.0, geom);
                           }};
  const QuadratureRule quad(quad_order);
  ModeVector psi = decompose(field, basis, 0.0, quad);
  // The displaced mode is real at the waist; drop quadrature roundoff.
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = psi[i].real();
  const double residual = 1.0 - psi.norm2();
  return {FieldConfiguration(psi, geom.omega(), FieldConvention::kReducedPsi),
          residual};
}

double r_closed_form(double xi1, double xi2) {
  return 0.5 * (xi1 * xi1 * std::exp(-0.5 * xi1 * xi1) +
                xi2 * xi2 * std::exp(-0.5 * xi2 * xi2));
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw InvalidArgument("grid needs at least one point");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo + step * i;
  out[n - 1] = hi;
  return out;
}

RSurface r_surface(const std::vector<double>& xi1_grid,
                   const std::vector<double>& xi2_grid,
                   const ModeBasis& basis, const SplitterCoefficients& s,
                   const RSurfaceOptions& options) {
  // One decomposition per distinct axis value, shared by every cell.
  std::map<double, std::size_t> slot;
  std::vector<double> axis;
  for (const auto* grid : {&xi1_grid, &xi2_grid}) {
    for (double xi : *grid) {
      if (slot.emplace(xi, axis.size()).second) axis.push_back(xi);
    }
  }
  std::vector<std::optional<DisplacedConfiguration>> configs(axis.size());
  parallel_for(axis.size(), [&](std::size_t k) {
    configs[k] = displaced_tem10_config(axis[k], basis, options.quad_order);
  });

  const ModeVector photon = ModeVector::unit(basis, {0, 0});
  RSurface out;
  out.xi1 = xi1_grid;
  out.xi2 = xi2_grid;
  out.values.assign(xi1_grid.size(), std::vector<double>(xi2_grid.size()));
  const std::size_t cols = xi2_grid.size();
  parallel_for(xi1_grid.size() * cols, [&](std::size_t cell) {
    const std::size_t i = cell / cols;
    const std::size_t j = cell % cols;
    const auto& c1 = *configs[slot.at(xi1_grid[i])];
    const auto& c2 = *configs[slot.at(xi2_grid[j])];
    out.values[i][j] =
        r_functional(TwoPortFieldConfiguration(c1.config, c2.config), photon, s);
  });
  for (std::size_t i = 0; i < xi1_grid.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double residual =
          std::max(configs[slot.at(xi1_grid[i])]->truncation_residual,
                   configs[slot.at(xi2_grid[j])]->truncation_residual);
      if (residual > options.truncation_tolerance) {
        out.flagged.push_back({i, j, residual});
      }
    }
  }
  return out;
}

Complex two_point_correlation_complex(const ModeVector& phi, Point3 r1,
                                      Point3 r2,
                                      const SplitterCoefficients& s,
                                      double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("omega must be > 0");
  const ModeVector phi_r = reflect_mode_vector(phi);
  const Complex f1 = synthesize(phi, r1.x, r1.y, r1.z);
  const Complex f2 = synthesize(phi_r, r2.x, r2.y, r2.z);
  const Complex tau = s.tau();
  const Complex rho = s.rho();
  return (tau * std::conj(rho) * f1 * std::conj(f2) +
          std::conj(tau) * rho * std::conj(f1) * f2) /
         (2.0 * omega);
}

double two_point_correlation(const ModeVector& phi, Point3 r1, Point3 r2,
                             const SplitterCoefficients& s, double omega) {
  return two_point_correlation_complex(phi, r1, r2, s, omega).real();
}

double detection_probability_ratio(int n1, int n2,
                                   const TwoPortFieldConfiguration& cfg,
                                   const ModeVector& phi1,
                                   const ModeVector& phi2) {
  if (n1 < 0 || n2 < 0) throw InvalidArgument("photon numbers must be >= 0");
  for (const ModeVector* phi : {&phi1, &phi2}) {
    if (!phi->is_real(1e-12)) {
      throw InvalidArgument("detection modes must be real-valued");
    }
    require_normalized(*phi, "detection mode");
  }
  const double root_omega = std::sqrt(cfg.omega());
  const double x1 =
      root_omega * inner_product(cfg.port1().physical_Psi(), phi1).real();
  const double x2 =
      root_omega * inner_product(cfg.port2().physical_Psi(), phi2).real();
  const double h1 = hermite_poly(n1, x1);
  const double h2 = hermite_poly(n2, x2);
  const double log_denominator = (n1 + n2) * std::log(2.0) +
                                 std::lgamma(n1 + 1.0) + std::lgamma(n2 + 1.0);
  return h1 * h1 * h2 * h2 * std::exp(-log_denominator);
}

double photon_number_correlation(const ModeVector& phi, const ModeVector& phi1,
                                 const ModeVector& phi2,
                                 const SplitterCoefficients& s) {
  require_normalized(phi);
  require_normalized(phi1, "phi1");
  require_normalized(phi2, "phi2");
  const ModeVector phi_r = reflect_mode_vector(phi);
  // Branch A: one photon in port 1, vacuum in port 2. Branch B: the reverse.
  // N_p[phi_p] annihilates the vacuum of its own port, and the cross terms
  // <1|N|0> vanish by photon-number conservation.
  const double n1_in_a = std::norm(inner_product(phi1, phi));
  const double n2_in_a = 0.0;
  const double n1_in_b = 0.0;
  const double n2_in_b = std::norm(inner_product(phi2, phi_r));
  return std::norm(s.tau()) * n1_in_a * n2_in_a +
         std::norm(s.rho()) * n1_in_b * n2_in_b;
}

}  // namespace qfield
