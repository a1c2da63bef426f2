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

#ifndef QFIELD_OBSERVABLES_HPP_
#define QFIELD_OBSERVABLES_HPP_

#include <vector>

#include "qfield/amplitudes.hpp"
#include "qfield/beamsplitter.hpp"
#include "qfield/mode_space.hpp"

namespace qfield {

/// R[Psi1, Psi2] = 2 omega |tau (Psi1, phi) + rho (Psi2, phi~)|^2.
double r_functional(const TwoPortFieldConfiguration& cfg,
                    const ModeVector& phi, const SplitterCoefficients& s);

struct DisplacedConfiguration {
  FieldConfiguration config;
  /// 1 - norm^2 of the decomposed vector: the weight lost to truncation.
  double truncation_residual;
};

/// Largest |xi| accepted by displaced_tem10_config, and the smallest n_max.
inline constexpr double kMaxDisplacement = 3.0;
inline constexpr int kMinDisplacedNMax = 12;

/// sqrt(2 omega) Psi(x, y, 0) = phi_1(x + x0 xi, 0) phi_0(y, 0), decomposed
/// at z = 0. Throws TruncationError when |xi| > 3 or n_max < 12.
DisplacedConfiguration displaced_tem10_config(double xi,
                                              const ModeBasis& basis,
                                              int quad_order = 48);

/// (1/2)(xi1^2 e^{-xi1^2/2} + xi2^2 e^{-xi2^2/2}), the reference closed
/// form for the balanced splitter with a TEM00 photon.
double r_closed_form(double xi1, double xi2);

struct RSurfaceOptions {
  int quad_order = 48;
  /// Cells whose displaced configurations lose more than this to
  /// truncation are listed in RSurface::flagged.
  double truncation_tolerance = 1e-6;
};

struct RSurface {
  std::vector<double> xi1;
  std::vector<double> xi2;
  /// values[i][j] = R at (xi1[i], xi2[j]).
  std::vector<std::vector<double>> values;
  struct Cell {
    std::size_t i;
    std::size_t j;
    double truncation_residual;
  };
  std::vector<Cell> flagged;
};

/// R over a grid through the full pipeline: displaced_tem10_config on each
/// axis value, then r_functional with a TEM00 photon.
RSurface r_surface(const std::vector<double>& xi1_grid,
                   const std::vector<double>& xi2_grid,
                   const ModeBasis& basis, const SplitterCoefficients& s,
                   const RSurfaceOptions& options = {});

/// n evenly spaced values on [lo, hi]; n = 1 yields {lo}.
std::vector<double> linspace(double lo, double hi, int n);

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// (1/(2 omega)) [tau rho* phi(r1) phi~*(r2) + tau* rho phi*(r1) phi~(r2)],
/// returned with its (vanishing) imaginary part.
Complex two_point_correlation_complex(const ModeVector& phi, Point3 r1,
                                      Point3 r2,
                                      const SplitterCoefficients& s,
                                      double omega);

double two_point_correlation(const ModeVector& phi, Point3 r1, Point3 r2,
                             const SplitterCoefficients& s, double omega);

/// |<N1[phi1], N2[phi2] | Psi1, Psi2, t> / <0 | Psi1, Psi2, t>|^2
///   = H_N1^2(sqrt(omega)(Psi1, phi1)) H_N2^2(sqrt(omega)(Psi2, phi2))
///     / (2^{N1+N2} N1! N2!).
/// Throws InvalidArgument for complex-valued phi1 or phi2.
double detection_probability_ratio(int n1, int n2,
                                   const TwoPortFieldConfiguration& cfg,
                                   const ModeVector& phi1,
                                   const ModeVector& phi2);

/// <1[phi]| N1_out[phi1] N2_out[phi2] |1[phi]> evaluated on the output
/// state tau |1[phi]>_1|0>_2 + rho |0>_1|1[phi~]>_2.
double photon_number_correlation(const ModeVector& phi, const ModeVector& phi1,
                                 const ModeVector& phi2,
                                 const SplitterCoefficients& s);

}  // namespace qfield

#endif  // QFIELD_OBSERVABLES_HPP_
