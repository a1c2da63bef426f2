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

#ifndef QFIELD_BEAMSPLITTER_HPP_
#define QFIELD_BEAMSPLITTER_HPP_

#include "qfield/geometry.hpp"
#include "qfield/mode_space.hpp"

namespace qfield {

/// Reflection and transmission amplitudes of a lossless symmetric splitter:
/// |rho|^2 + |tau|^2 = 1 and conj(rho) tau + rho conj(tau) = 0.
class SplitterCoefficients {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws InvalidSplitter if either constraint is off by more than
  /// kTolerance.
  SplitterCoefficients(Complex rho, Complex tau);

  /// tau = 1/sqrt(2), rho = i/sqrt(2).
  static SplitterCoefficients balanced();
  /// tau = t e^{i phase}, rho = i sqrt(1 - t^2) e^{i phase}; valid for any
  /// 0 <= t <= 1 by construction.
  static SplitterCoefficients from_transmission(double t, double phase = 0.0);

  Complex rho() const { return rho_; }
  Complex tau() const { return tau_; }
  /// |tau|^2 = |rho|^2 = 1/2 within kTolerance.
  bool is_balanced() const;

 private:
  Complex rho_;
  Complex tau_;
};

/// Images of the port-1 and port-2 ladder operators in a shared basis.
struct TwoPortModeVectors {
  ModeVector port1;
  ModeVector port2;
};

/// (-1)^m sign picked up by mode (n, m) under y -> -y.
inline double reflection_parity(ModeIndex mu) {
  return (mu.m % 2 == 0) ? 1.0 : -1.0;
}

/// v~_(n,m) = (-1)^m v_(n,m): the coefficients of v(x, -y, z).
ModeVector reflect_mode_vector(const ModeVector& v);

/// b1 = tau a1 + rho (-1)^m a2,  b2 = rho (-1)^m a1 + tau a2, per mode.
/// Throws GeometryMismatch if the ports do not share a basis.
TwoPortModeVectors operator_transform(const TwoPortModeVectors& a,
                                      const SplitterCoefficients& s);

/// a1 = tau* b1 + rho* (-1)^m b2,  a2 = rho* (-1)^m b1 + tau* b2.
TwoPortModeVectors inverse_transform(const TwoPortModeVectors& b,
                                     const SplitterCoefficients& s);

/// tau |1[phi]>_1 |0>_2 + rho |0>_1 |1[phi~]>_2.
struct SinglePhotonOutput {
  Complex amp1;
  ModeVector mode1;
  Complex amp2;
  ModeVector mode2;
};

/// |tau alpha, [phi]>_1 |rho alpha, [phi~]>_2, a product state.
struct CoherentOutput {
  Complex alpha1;
  ModeVector mode1;
  Complex alpha2;
  ModeVector mode2;
};

/// Throws NotNormalized unless (phi, phi) = 1 within 1e-9.
void require_normalized(const ModeVector& phi, const char* what = "phi");

SinglePhotonOutput single_photon_output(const ModeVector& phi,
                                        const SplitterCoefficients& s);

CoherentOutput coherent_output(Complex alpha, const ModeVector& phi,
                               const SplitterCoefficients& s);

}  // namespace qfield

#endif  // QFIELD_BEAMSPLITTER_HPP_
