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

#include "qfield/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qfield/error.hpp"

namespace qfield {

BeamGeometry::BeamGeometry(double w0, double k) : w0_(w0), k_(k) {
  if (!(std::isfinite(w0) && w0 > 0.0)) {
    throw InvalidArgument("beam waist w0 must be finite and > 0, got " +
                          std::to_string(w0));
  }
  if (!(std::isfinite(k) && k > 0.0)) {
    throw InvalidArgument("wavenumber k must be finite and > 0, got " +
                          std::to_string(k));
  }
  z0_ = k_ * w0_ * w0_ / 2.0;
}

double BeamGeometry::x_scale(double z) const {
  const double r = z / z0_;
  return w0_ * std::sqrt((1.0 + r * r) / 2.0);
}

double BeamGeometry::gouy_angle(double z) const { return std::atan(z / z0_); }

double hermite_poly(int n, double x) {
  if (n < 0) throw InvalidArgument("Hermite degree must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int j = 1; j < n; ++j) {
    const double next = 2.0 * x * cur - 2.0 * j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex hermite_poly(int n, Complex x) {
  if (n <= 0) return 1.0;
  Complex prev = 1.0;
  Complex cur = 2.0 * x;
  for (int j = 1; j < n; ++j) {
    const Complex next = 2.0 * x * cur - 2.0 * static_cast<double>(j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// pi^{-1/4} (2^n n!)^{-1/2} x0^{-1/2}
double mode_normalization(int n, double x0) {
  const double log_norm =
      -0.25 * std::log(std::numbers::pi) -
      0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0)) -
      0.5 * std::log(x0);
  return std::exp(log_norm);
}

}  // namespace

double mode_1d_modulus(int n, double x, double z, const BeamGeometry& geom) {
  const double x0 = geom.x_scale(z);
  const double u = x / x0;
  return std::abs(mode_normalization(n, x0) * hermite_poly(n, u) *
                  std::exp(-0.5 * u * u));
}

Complex mode_1d(int n, double x, double z, const BeamGeometry& geom) {
  const double x0 = geom.x_scale(z);
  const double u = x / x0;
  const double real_part =
      mode_normalization(n, x0) * hermite_poly(n, u) * std::exp(-0.5 * u * u);
  const double phase = 0.5 * (z / geom.rayleigh_length()) * u * u -
                       (n + 0.5) * geom.gouy_angle(z);
  return std::polar(1.0, phase) * real_part;
}

Complex mode_envelope(ModeIndex mu, double x, double y, double z,
                      const BeamGeometry& geom) {
  return mode_1d(mu.n, x, z, geom) * mode_1d(mu.m, y, z, geom);
}

Complex mode_2d(ModeIndex mu, double x, double y, double z,
                const BeamGeometry& geom) {
  return mode_envelope(mu, x, y, z, geom) * std::polar(1.0, geom.k() * z);
}

Complex paraxial_residual(ModeIndex mu, double x, double y, double z,
                          const BeamGeometry& geom,
                          const FiniteDifferenceSteps& h) {
  for (double step : {h.hx, h.hy, h.hz}) {
    if (!(std::isfinite(step) && step > 0.0)) {
      throw InvalidArgument("finite-difference steps must be finite and > 0");
    }
  }
  auto f = [&](double xx, double yy, double zz) {
    return mode_envelope(mu, xx, yy, zz, geom);
  };
  const Complex center = f(x, y, z);
  const Complex d_xx =
      (f(x + h.hx, y, z) - 2.0 * center + f(x - h.hx, y, z)) / (h.hx * h.hx);
  const Complex d_yy =
      (f(x, y + h.hy, z) - 2.0 * center + f(x, y - h.hy, z)) / (h.hy * h.hy);
  const Complex d_z = (f(x, y, z + h.hz) - f(x, y, z - h.hz)) / (2.0 * h.hz);
  return d_xx + d_yy + Complex(0.0, 2.0 * geom.k()) * d_z;
}

}  // namespace qfield
