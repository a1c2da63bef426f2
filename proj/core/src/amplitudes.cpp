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

#include "qfield/amplitudes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qfield/error.hpp"

namespace qfield {

FieldConfiguration::FieldConfiguration(const ModeVector& field, double omega,
                                       FieldConvention convention)
    : psi_(field), omega_(omega) {
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw InvalidArgument("omega must be finite and > 0");
  }
  if (!field.is_real(1e-12)) {
    throw InvalidArgument(
        "field eigenvalue must be real-valued (imaginary parts <= 1e-12)");
  }
  for (std::size_t i = 0; i < psi_.size(); ++i) psi_[i] = psi_[i].real();
  if (convention == FieldConvention::kPhysicalPsi) {
    psi_ *= Complex(std::sqrt(2.0 * omega_), 0.0);
  }
}

ModeVector FieldConfiguration::physical_Psi() const {
  ModeVector out = psi_;
  out *= Complex(1.0 / std::sqrt(2.0 * omega_), 0.0);
  return out;
}

TwoPortFieldConfiguration::TwoPortFieldConfiguration(FieldConfiguration port1,
                                                     FieldConfiguration port2)
    : port1_(std::move(port1)), port2_(std::move(port2)) {
  require_same_basis(port1_.psi().basis(), port2_.psi().basis());
  if (port1_.omega() != port2_.omega()) {
    throw InvalidArgument("both ports must share the same omega");
  }
}

double vacuum_relative_weight(const FieldConfiguration& cfg) {
  return std::exp(-cfg.psi().norm2());
}

Complex number_state_ratio(const FieldConfiguration& cfg,
                           const ModeVector& phi, int n, double t) {
  if (n < 0) throw InvalidArgument("photon number must be >= 0");
  require_normalized(phi);
  const Complex overlap = waist_bracket(cfg.psi(), phi);
  const Complex square = waist_bracket(phi, phi);
  const Complex phase = std::polar(1.0, -n * cfg.omega() * t);
  const double inv_sqrt_fact = std::exp(-0.5 * std::lgamma(n + 1.0));
  if (std::abs(square) < kDegenerateSquareThreshold) {
    return phase * std::pow(overlap, n) * inv_sqrt_fact;
  }
  const Complex scale = std::sqrt(2.0 * square);  // principal branch
  return phase * hermite_poly(n, overlap / scale) * std::pow(scale, n) *
         inv_sqrt_fact / std::pow(2.0, n);
}

Complex coherent_state_ratio(const FieldConfiguration& cfg,
                             const ModeVector& phi, Complex alpha, double t) {
  require_normalized(phi);
  const Complex overlap = waist_bracket(cfg.psi(), phi);
  const Complex square = waist_bracket(phi, phi);
  const Complex e1 = std::polar(1.0, -cfg.omega() * t);
  return std::exp(-0.5 * std::norm(alpha) + alpha * e1 * overlap -
                  0.5 * alpha * alpha * e1 * e1 * square);
}

Complex two_port_single_photon_ratio(const TwoPortFieldConfiguration& cfg,
                                     const ModeVector& phi,
                                     const SplitterCoefficients& s, double t) {
  require_normalized(phi);
  const ModeVector phi_r = reflect_mode_vector(phi);
  const Complex amp = s.tau() * inner_product(cfg.port1().psi(), phi) +
                      s.rho() * inner_product(cfg.port2().psi(), phi_r);
  return amp * std::polar(1.0, -cfg.omega() * t);
}

Complex two_port_coherent_ratio(const TwoPortFieldConfiguration& cfg,
                                const ModeVector& phi, Complex alpha,
                                const SplitterCoefficients& s, double t) {
  require_normalized(phi);
  const ModeVector phi_r = reflect_mode_vector(phi);
  const Complex ta = s.tau() * alpha;
  const Complex ra = s.rho() * alpha;
  const Complex e1 = std::polar(1.0, -cfg.omega() * t);
  const Complex square = waist_bracket(phi, phi);
  const Complex linear = ta * waist_bracket(cfg.port1().psi(), phi) +
                         ra * waist_bracket(cfg.port2().psi(), phi_r);
  const Complex value =
      std::exp(-0.5 * (std::norm(ta) + std::norm(ra)) + e1 * linear -
               0.5 * e1 * e1 * (ta * ta + ra * ra) * square);
  if (s.is_balanced()) {
    const Complex single = two_port_single_photon_ratio(cfg, phi, s, t);
    const Complex identity = std::exp(-0.5 * std::norm(alpha) + alpha * single);
    if (std::abs(value - identity) > 1e-12 * std::max(1.0, std::abs(value))) {
      throw std::logic_error(
          "balanced-splitter coherent ratio disagrees with exp(alpha * "
          "single-photon ratio)");
    }
  }
  return value;
}

Complex single_photon_wavefunction(const ModeVector& phi, double x, double y,
                                   double z, double t, double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("omega must be > 0");
  return synthesize(phi, x, y, z) * std::polar(1.0, -omega * t) /
         std::sqrt(2.0 * omega);
}

}  // namespace qfield
