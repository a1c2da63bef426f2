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

#ifndef QFIELD_AMPLITUDES_HPP_
#define QFIELD_AMPLITUDES_HPP_

#include "qfield/beamsplitter.hpp"
#include "qfield/geometry.hpp"
#include "qfield/mode_space.hpp"

namespace qfield {

/// Which field a coefficient vector describes: the reduced eigenvalue
/// psi = sqrt(2 omega) Psi, or the physical field Psi itself.
enum class FieldConvention { kReducedPsi, kPhysicalPsi };

/// Real field-eigenvalue configuration on one port, referenced to the
/// detector plane z = 0 where every u_mu is real.
///
/// Stored canonically as the reduced psi; physical_Psi() recovers Psi.
class FieldConfiguration {
 public:
  /// Throws InvalidArgument if any coefficient has |Im| > 1e-12 or
  /// omega <= 0.
  FieldConfiguration(const ModeVector& field, double omega,
                     FieldConvention convention = FieldConvention::kReducedPsi);

  const ModeVector& psi() const { return psi_; }
  ModeVector physical_Psi() const;
  double omega() const { return omega_; }

 private:
  ModeVector psi_;
  double omega_;
};

class TwoPortFieldConfiguration {
 public:
  /// Throws InvalidArgument on differing omega, GeometryMismatch on
  /// differing bases.
  TwoPortFieldConfiguration(FieldConfiguration port1,
                            FieldConfiguration port2);

  const FieldConfiguration& port1() const { return port1_; }
  const FieldConfiguration& port2() const { return port2_; }
  double omega() const { return port1_.omega(); }

 private:
  FieldConfiguration port1_;
  FieldConfiguration port2_;
};

/// |<Psi,t|0>|^2 / |<Psi=0,t|0>|^2 = exp(-(psi, psi)).
double vacuum_relative_weight(const FieldConfiguration& cfg);

/// Below this |[phi^2]| the number-state ratio switches to its analytic
/// limit [psi phi]^N / sqrt(N!).
inline constexpr double kDegenerateSquareThreshold = 1e-12;

/// <Psi,t|N[phi]> / <Psi,t|0>
///   = e^{-iN omega t} H_N([psi phi] / s) s^N / (2^N sqrt(N!)),
/// with s = sqrt(2 [phi^2]) on the principal branch.
Complex number_state_ratio(const FieldConfiguration& cfg,
                           const ModeVector& phi, int n, double t);

/// <Psi,t|alpha,[phi]> / <Psi,t|0>
///   = e^{-|alpha|^2/2} exp(alpha e^{-i omega t} [psi phi]
///                          - alpha^2 e^{-2i omega t} [phi^2] / 2).
Complex coherent_state_ratio(const FieldConfiguration& cfg,
                             const ModeVector& phi, Complex alpha, double t);

/// <Psi1,Psi2,t|1[phi]>_out / <Psi1,Psi2,t|0>
///   = [tau (psi1, phi) + rho (psi2, phi~)] e^{-i omega t}.
Complex two_port_single_photon_ratio(const TwoPortFieldConfiguration& cfg,
                                     const ModeVector& phi,
                                     const SplitterCoefficients& s, double t);

/// Coherent input through the splitter, as a ratio to the two-port vacuum
/// amplitude. For a balanced splitter the result is cross-checked against
/// e^{-|alpha|^2/2} exp(alpha * single-photon ratio) and a mismatch beyond
/// 1e-12 (relative) throws std::logic_error.
Complex two_port_coherent_ratio(const TwoPortFieldConfiguration& cfg,
                                const ModeVector& phi, Complex alpha,
                                const SplitterCoefficients& s, double t);

/// <0|Psi_hat(r,t)|1[phi]> = phi(x, y, z) e^{-i omega t} / sqrt(2 omega).
Complex single_photon_wavefunction(const ModeVector& phi, double x, double y,
                                   double z, double t, double omega);

}  // namespace qfield

#endif  // QFIELD_AMPLITUDES_HPP_
