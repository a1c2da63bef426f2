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

#include "qfield/beamsplitter.hpp"

#include <cmath>
#include <string>

#include "qfield/error.hpp"

namespace qfield {

SplitterCoefficients::SplitterCoefficients(Complex rho, Complex tau)
    : rho_(rho), tau_(tau) {
  const double energy = std::norm(rho) + std::norm(tau) - 1.0;
  const double symmetry =
      std::abs(std::conj(rho) * tau + rho * std::conj(tau));
  if (!(std::abs(energy) <= kTolerance)) {
    throw InvalidSplitter("|rho|^2 + |tau|^2 - 1 = " + std::to_string(energy) +
                          " violates losslessness");
  }
  if (!(symmetry <= kTolerance)) {
    throw InvalidSplitter("|rho* tau + rho tau*| = " +
                          std::to_string(symmetry) +
                          " violates the symmetric-splitter constraint");
  }
}

SplitterCoefficients SplitterCoefficients::balanced() {
  const double h = 1.0 / std::sqrt(2.0);
  return SplitterCoefficients(Complex(0.0, h), Complex(h, 0.0));
}

SplitterCoefficients SplitterCoefficients::from_transmission(double t,
                                                             double phase) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidSplitter("transmission magnitude must lie in [0, 1]");
  }
  const Complex p = std::polar(1.0, phase);
  const double r = std::sqrt(1.0 - t * t);
  return SplitterCoefficients(Complex(0.0, r) * p, t * p);
}

bool SplitterCoefficients::is_balanced() const {
  return std::abs(std::norm(tau_) - 0.5) <= kTolerance &&
         std::abs(std::norm(rho_) - 0.5) <= kTolerance;
}

ModeVector reflect_mode_vector(const ModeVector& v) {
  ModeVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= reflection_parity(v.basis().mode(i));
  }
  return out;
}

TwoPortModeVectors operator_transform(const TwoPortModeVectors& a,
                                      const SplitterCoefficients& s) {
  require_same_basis(a.port1.basis(), a.port2.basis());
  TwoPortModeVectors b{ModeVector(a.port1.basis()),
                       ModeVector(a.port1.basis())};
  for (std::size_t i = 0; i < a.port1.size(); ++i) {
    const double p = reflection_parity(a.port1.basis().mode(i));
    b.port1[i] = s.tau() * a.port1[i] + s.rho() * p * a.port2[i];
    b.port2[i] = s.rho() * p * a.port1[i] + s.tau() * a.port2[i];
  }
  return b;
}

TwoPortModeVectors inverse_transform(const TwoPortModeVectors& b,
                                     const SplitterCoefficients& s) {
  require_same_basis(b.port1.basis(), b.port2.basis());
  const Complex tc = std::conj(s.tau());
  const Complex rc = std::conj(s.rho());
  TwoPortModeVectors a{ModeVector(b.port1.basis()),
                       ModeVector(b.port1.basis())};
  for (std::size_t i = 0; i < b.port1.size(); ++i) {
    const double p = reflection_parity(b.port1.basis().mode(i));
    a.port1[i] = tc * b.port1[i] + rc * p * b.port2[i];
    a.port2[i] = rc * p * b.port1[i] + tc * b.port2[i];
  }
  return a;
}

void require_normalized(const ModeVector& phi, const char* what) {
  const double n2 = phi.norm2();
  if (!(std::abs(n2 - 1.0) <= 1e-9)) {
    throw NotNormalized(std::string(what) + " must satisfy (phi, phi) = 1, got " +
                        std::to_string(n2));
  }
}

SinglePhotonOutput single_photon_output(const ModeVector& phi,
                                        const SplitterCoefficients& s) {
  require_normalized(phi);
  return {s.tau(), phi, s.rho(), reflect_mode_vector(phi)};
}

CoherentOutput coherent_output(Complex alpha, const ModeVector& phi,
                               const SplitterCoefficients& s) {
  require_normalized(phi);
  return {s.tau() * alpha, phi, s.rho() * alpha, reflect_mode_vector(phi)};
}

}  // namespace qfield
