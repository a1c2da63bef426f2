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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qfield/error.hpp"
#include "qfield/geometry.hpp"

using namespace qfield;
using doctest::Approx;

TEST_SUITE("geometry") {

TEST_CASE("hermite values") {
  CHECK(hermite_poly(0, 3.7) == 1.0);
  CHECK(hermite_poly(1, 0.5) == 1.0);
  CHECK(hermite_poly(3, 1.0) == Approx(-4.0).epsilon(1e-15));
  // H_n(-x) = (-1)^n H_n(x)
  for (int n = 0; n < 12; ++n) {
    CHECK(hermite_poly(n, -0.83) ==
          Approx(std::pow(-1.0, n) * hermite_poly(n, 0.83)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(hermite_poly(-1, 0.0), InvalidArgument);
}

TEST_CASE("hermite complex argument agrees on the real axis") {
  for (int n = 0; n < 10; ++n) {
    const Complex h = hermite_poly(n, Complex(1.3, 0.0));
    CHECK(h.real() == Approx(hermite_poly(n, 1.3)).epsilon(1e-14));
    CHECK(h.imag() == 0.0);
  }
  // H_2(i) = -4 - 2
  CHECK(std::abs(hermite_poly(2, Complex(0.0, 1.0)) - Complex(-6.0, 0.0)) < 1e-14);
}

TEST_CASE("beam geometry") {
  const BeamGeometry g(2.0, 3.0);
  CHECK(g.rayleigh_length() == Approx(6.0));
  CHECK(g.omega() == 3.0);
  CHECK(g.x_scale(0.0) == Approx(2.0 / std::sqrt(2.0)));
  CHECK(g.x_scale(6.0) == Approx(2.0));
  CHECK(g.gouy_angle(6.0) == Approx(std::numbers::pi / 4));
  CHECK_THROWS_AS(BeamGeometry(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(BeamGeometry(1.0, -1.0), InvalidArgument);
  CHECK_THROWS_AS(BeamGeometry(std::nan(""), 1.0), InvalidArgument);
}

TEST_CASE("mode_1d values") {
  const BeamGeometry g(1.0, 1.0);
  const Complex v = mode_1d(0, 0.0, 0.0, g);
  CHECK(v.real() == Approx(std::pow(2.0, 0.25) / std::pow(std::numbers::pi, 0.25)));
  CHECK(v.imag() == 0.0);
  CHECK(std::abs(mode_1d(1, 0.0, 0.7, g)) == 0.0);
  CHECK(mode_1d_modulus(3, 0.4, 1.1, g) ==
        Approx(std::abs(mode_1d(3, 0.4, 1.1, g))).epsilon(1e-14));
  // Far tail stays finite and tiny.
  const Complex tail = mode_1d(40, 30.0, 0.0, g);
  CHECK(std::isfinite(tail.real()));
  CHECK(std::abs(tail) < 1e-50);
  CHECK_THROWS_AS(mode_1d(-1, 0.0, 0.0, g), InvalidArgument);
}

TEST_CASE("mode_1d Gouy phase") {
  const BeamGeometry g(1.0, 1.0);
  const double z = 0.8;
  // On axis the chirp vanishes: phase is -(n + 1/2) atan(z/z0).
  for (int n : {0, 2, 4}) {
    const Complex v = mode_1d(n, 0.0, z, g);
    const double sign = hermite_poly(n, 0.0) < 0 ? -1.0 : 1.0;
    const Complex expected =
        sign * std::polar(1.0, -(n + 0.5) * std::atan(z / g.rayleigh_length()));
    CHECK(std::abs(v / std::abs(v) - expected) < 1e-12);
  }
}

TEST_CASE("mode_2d is a product with the carrier phase") {
  const BeamGeometry g(1.5, 2.0);
  const Complex u = mode_2d({2, 3}, 0.3, -0.4, 0.9, g);
  const Complex expected = mode_1d(2, 0.3, 0.9, g) * mode_1d(3, -0.4, 0.9, g) *
                           std::polar(1.0, 2.0 * 0.9);
  CHECK(std::abs(u - expected) < 1e-15);
  CHECK(std::abs(mode_envelope({2, 3}, 0.3, -0.4, 0.9, g) -
                 mode_1d(2, 0.3, 0.9, g) * mode_1d(3, -0.4, 0.9, g)) < 1e-15);
  const BeamGeometry unit(1.0, 1.0);
  CHECK(mode_2d({0, 0}, 0.0, 0.0, 0.0, unit).real() ==
        Approx(std::sqrt(2.0) / std::sqrt(std::numbers::pi)));
}

TEST_CASE("reflection parity") {
  const BeamGeometry g(1.0, 1.0);
  CHECK(std::abs(mode_2d({0, 1}, 0.2, -0.5, 0.3, g) +
                 mode_2d({0, 1}, 0.2, 0.5, 0.3, g)) < 1e-15);
  CHECK(std::abs(mode_2d({2, 0}, 0.2, -0.5, 0.3, g) -
                 mode_2d({2, 0}, 0.2, 0.5, 0.3, g)) < 1e-15);
}

TEST_CASE("paraxial residual") {
  const BeamGeometry g(1.0, 2.0);
  const double z = 0.5;
  const double xs = g.x_scale(z);
  SUBCASE("TEM00 at the axis, fine steps") {
    const double h = xs / 200;
    const Complex r = paraxial_residual({0, 0}, 0.0, 0.0, z, g, {h, h, h});
    CHECK(std::abs(r) <= 1e-4 * std::abs(mode_envelope({0, 0}, 0, 0, z, g)) / (xs * xs));
  }
  SUBCASE("second-order convergence") {
    const double h = xs / 20;
    const double e1 =
        std::abs(paraxial_residual({1, 1}, 0.3 * xs, 0.2 * xs, z, g, {h, h, h}));
    const double e2 = std::abs(
        paraxial_residual({1, 1}, 0.3 * xs, 0.2 * xs, z, g, {h / 2, h / 2, h / 2}));
    CHECK(e1 / e2 == Approx(4.0).epsilon(0.05));
  }
  CHECK_THROWS_AS(paraxial_residual({0, 0}, 0, 0, 0, g, {0.0, 0.1, 0.1}),
                  InvalidArgument);
}

}  // TEST_SUITE
