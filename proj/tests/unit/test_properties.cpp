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

// Randomized invariants over many seeds.

#include <cmath>
#include <random>

#include "doctest.h"
#include "qfield/qfield.hpp"
#include "test_oracles.hpp"

using namespace qfield;
namespace ref = qfield::testing;
using doctest::Approx;

namespace {

constexpr int kTrials = 50;

SplitterCoefficients random_splitter(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return SplitterCoefficients::from_transmission(u(rng), 6.283185307179586 * u(rng));
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("splitter transform is unitary on mode vectors") {
  std::mt19937 rng(101);
  const ModeBasis b(BeamGeometry(1, 1), 4);
  for (int k = 0; k < kTrials; ++k) {
    const auto s = random_splitter(rng);
    const TwoPortModeVectors a{ref::random_unit_vector(b, rng, 4), ref::random_unit_vector(b, rng, 4)};
    const TwoPortModeVectors c{ref::random_unit_vector(b, rng, 4), ref::random_unit_vector(b, rng, 4)};
    const auto ta = operator_transform(a, s);
    const auto tc = operator_transform(c, s);
    const Complex before = ref::coeff_inner(a.port1, c.port1) + ref::coeff_inner(a.port2, c.port2);
    const Complex after = ref::coeff_inner(ta.port1, tc.port1) + ref::coeff_inner(ta.port2, tc.port2);
    CHECK(std::abs(before - after) < 1e-13);
  }
}

TEST_CASE("number-state ratio obeys the Hermite recurrence") {
  // r_{N+1} = (e [psi phi] r_N - e^2 [phi^2] sqrt(N) r_{N-1} / 1) / sqrt(N+1)
  std::mt19937 rng(102);
  const ModeBasis b(BeamGeometry(1, 1), 3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < kTrials; ++k) {
    const FieldConfiguration cfg(ref::random_real_vector(b, rng, 3, 0.7), 1.0);
    const ModeVector phi = ref::random_unit_vector(b, rng, 3);
    const double t = u(rng);
    const Complex e = std::polar(1.0, -t);
    const Complex w = ref::coeff_bilinear(cfg.psi(), phi);
    const Complex q = ref::coeff_bilinear(phi, phi);
    for (int n = 1; n < 8; ++n) {
      const Complex lhs = number_state_ratio(cfg, phi, n + 1, t) * std::sqrt(n + 1.0);
      const Complex rhs = e * w * number_state_ratio(cfg, phi, n, t) -
                          e * e * q * std::sqrt(static_cast<double>(n)) * number_state_ratio(cfg, phi, n - 1, t);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("decomposition is linear and z-independent") {
  std::mt19937 rng(103);
  const BeamGeometry g(0.9, 1.7);
  const ModeBasis b(g, 5);
  const QuadratureRule q(min_quadrature_order(b));
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 10; ++k) {
    const ModeVector v = ref::random_unit_vector(b, rng, 5);
    const double z = u(rng) * g.rayleigh_length();
    const ModeVector d = decompose(as_field(v), b, z, q);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(d[i] - v[i]) < 1e-10);
  }
}

TEST_CASE("R functional bounded by one for normalized configurations") {
  // |tau a + rho b|^2 <= (|a|^2 + |b|^2) by Cauchy-Schwarz and unitarity.
  std::mt19937 rng(104);
  const ModeBasis b(BeamGeometry(1, 1), 3);
  for (int k = 0; k < kTrials; ++k) {
    const auto s = random_splitter(rng);
    const ModeVector phi = ref::random_unit_vector(b, rng, 3);
    const TwoPortFieldConfiguration cfg(
        FieldConfiguration(ref::random_real_vector(b, rng, 3, 1.0).normalized(), 1.0),
        FieldConfiguration(ref::random_real_vector(b, rng, 3, 1.0).normalized(), 1.0));
    const double r = r_functional(cfg, phi, s);
    CHECK(r >= 0.0);
    CHECK(r <= 2.0 + 1e-12);
  }
}

TEST_CASE("oracle splitter matches analytic output for random splitters") {
  std::mt19937 rng(105);
  const ModeBasis b(BeamGeometry(1, 1), 1);
  const fock::FockSpace s = fock::FockSpace::two_port({{0, 0}, {1, 1}}, 2);
  for (int k = 0; k < 10; ++k) {
    const auto sp = random_splitter(rng);
    std::normal_distribution<double> g(0, 1);
    ModeVector phi(b);
    phi[ModeIndex{0, 0}] = {g(rng), g(rng)};
    phi[ModeIndex{1, 1}] = {g(rng), g(rng)};
    phi = phi.normalized();
    const fock::FockStateVector out = fock::bs_unitary(s, sp) * fock::number_state(s, phi, 1, 1);
    const fock::FockStateVector expected = sp.tau() * fock::number_state(s, phi, 1, 1) +
                          sp.rho() * fock::number_state(s, reflect_mode_vector(phi), 2, 1);
    CHECK((out - expected).norm() < 1e-10);
  }
}

}  // TEST_SUITE
