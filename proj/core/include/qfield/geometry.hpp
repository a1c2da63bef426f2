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

#ifndef QFIELD_GEOMETRY_HPP_
#define QFIELD_GEOMETRY_HPP_

#include <complex>

namespace qfield {

using Complex = std::complex<double>;

/// Paraxial beam geometry in natural units (hbar = c = 1, so omega = k).
///
/// Every Hermite-Gauss mode in the library is built on one of these. The
/// Rayleigh length and the transverse scale are derived, never stored
/// independently, so they cannot drift out of sync with w0 and k.
class BeamGeometry {
 public:
  /// Throws InvalidArgument unless w0 > 0 and k > 0 (both finite).
  BeamGeometry(double w0, double k);

  double w0() const { return w0_; }
  double k() const { return k_; }
  double omega() const { return k_; }
  /// z0 = k w0^2 / 2.
  double rayleigh_length() const { return z0_; }
  /// x0(z) = w0 sqrt((1 + z^2/z0^2) / 2); equals w0/sqrt(2) at the waist.
  double x_scale(double z) const;
  /// arctan(z / z0).
  double gouy_angle(double z) const;

  friend bool operator==(const BeamGeometry&, const BeamGeometry&) = default;

 private:
  double w0_;
  double k_;
  double z0_;
};

struct ModeIndex {
  int n = 0;
  int m = 0;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// Physicists' Hermite polynomial H_n(x) by upward three-term recurrence.
/// Overflows to infinity for extreme n and x; the truncations used in this
/// library (n <= ~40, |x| <= ~10) stay far from that regime.
double hermite_poly(int n, double x);

/// Hermite polynomial at a complex argument, same recurrence.
Complex hermite_poly(int n, Complex x);

/// One-dimensional Hermite-Gauss function phi_n(x, z), including the
/// normalization, Gaussian envelope, quadratic chirp and Gouy phase.
Complex mode_1d(int n, double x, double z, const BeamGeometry& geom);

/// |phi_n(x, z)| computed without any of the phase factors.
double mode_1d_modulus(int n, double x, double z, const BeamGeometry& geom);

/// u_mu(x, y, z) = phi_n(x, z) phi_m(y, z) e^{ikz}.
Complex mode_2d(ModeIndex mu, double x, double y, double z,
                const BeamGeometry& geom);

/// The chirped envelope phi_n(x,z) phi_m(y,z), i.e. u_mu without e^{ikz}.
Complex mode_envelope(ModeIndex mu, double x, double y, double z,
                      const BeamGeometry& geom);

struct FiniteDifferenceSteps {
  double hx;
  double hy;
  double hz;
};

/// Central-difference estimate of (d_xx + d_yy + 2ik d_z) applied to the
/// chirped envelope of mode mu. Vanishes as O(h^2). Throws InvalidArgument
/// for a zero or non-finite step.
Complex paraxial_residual(ModeIndex mu, double x, double y, double z,
                          const BeamGeometry& geom,
                          const FiniteDifferenceSteps& h);

}  // namespace qfield

#endif  // QFIELD_GEOMETRY_HPP_
