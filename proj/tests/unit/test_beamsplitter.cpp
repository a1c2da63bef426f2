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
#include <random>

#include "doctest.h"
#include "qfield/beamsplitter.hpp"
#include "qfield/error.hpp"
#include "test_oracles.hpp"

using namespace qfield;
namespace ref = qfield::testing;
using doctest::Approx;

TEST_SUITE("beamsplitter") {

TEST_CASE("coefficient validation") {
  CHECK_NOTHROW(SplitterCoefficients(Complex(0, 0.6), Complex(0.8, 0)));
  CHECK_NOTHROW(SplitterCoefficients(Complex(0, 0), Complex(1, 0)));
  // Lossless violated
  CHECK_THROWS_AS(SplitterCoefficients(Complex(0, 0.8), Complex(0.8, 0)), InvalidSplitter);
  // |rho|^2 + |tau|^2 = 1 but rho* tau + rho tau* != 0
  CHECK_THROWS_AS(SplitterCoefficients(Complex(0.6, 0), Complex(0.8, 0)), InvalidSplitter);
  CHECK_THROWS_AS(SplitterCoefficients(Complex(std::nan(""), 0), Complex(1, 0)), InvalidSplitter);
  const auto b = SplitterCoefficients::balanced();
  CHECK(b.is_balanced());
  CHECK(std::abs(b.tau() - Complex(std::sqrt(0.5), 0)) <= 2.3e-16);
  CHECK(std::abs(b.rho() - Complex(0, std::sqrt(0.5))) <= 2.3e-16);
  const auto t = SplitterCoefficients::from_transmission(0.3, 0.9);
  CHECK(std::abs(t.tau()) == Approx(0.3));
  CHECK_FALSE(t.is_balanced());
  CHECK_THROWS_AS(SplitterCoefficients::from_transmission(1.2), InvalidSplitter);
}

TEST_CASE("reflection") {
  const ModeBasis b(BeamGeometry(1, 1), 3);
  CHECK(reflect_mode_vector(ModeVector::unit(b, {0, 1}))[ModeIndex{0, 1}] == Complex(-1.0));
  CHECK(reflect_mode_vector(ModeVector::unit(b, {3, 0}))[ModeIndex{3, 0}] == Complex(1.0));
  std::mt19937 rng(1);
  const ModeVector v = ref::random_unit_vector(b, rng, 3);
  const ModeVector rr = reflect_mode_vector(reflect_mode_vector(v));
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(rr[i] == v[i]);
}

TEST_CASE("operator transform") {
  const ModeBasis b(BeamGeometry(1, 1), 2);
  SUBCASE("identity splitter") {
    const SplitterCoefficients id(Complex(0), Complex(1));
    std::mt19937 rng(2);
    const TwoPortModeVectors a{ref::random_unit_vector(b, rng, 2), ref::random_unit_vector(b, rng, 2)};
    const auto out = operator_transform(a, id);
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(out.port1[i] == a.port1[i]);
      CHECK(out.port2[i] == a.port2[i]);
    }
  }
  SUBCASE("50:50 on TEM00") {
    const auto out = operator_transform({ModeVector::unit(b, {0, 0}), ModeVector(b)},
                                        SplitterCoefficients::balanced());
    CHECK(std::abs(out.port1[ModeIndex{0, 0}] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(out.port2[ModeIndex{0, 0}] - Complex(0, std::sqrt(0.5))) < 1e-15);
  }
  SUBCASE("inverse") {
    std::mt19937 rng(4);
    const auto s = SplitterCoefficients::from_transmission(0.45, -0.3);
    const TwoPortModeVectors a{ref::random_unit_vector(b, rng, 2), ref::random_unit_vector(b, rng, 2)};
    const auto back = inverse_transform(operator_transform(a, s), s);
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(std::abs(back.port1[i] - a.port1[i]) < 1e-12);
      CHECK(std::abs(back.port2[i] - a.port2[i]) < 1e-12);
    }
  }
  SUBCASE("mismatched ports") {
    const ModeBasis other(BeamGeometry(1, 1), 3);
    CHECK_THROWS_AS(operator_transform({ModeVector(b), ModeVector(other)},
                                       SplitterCoefficients::balanced()),
                    GeometryMismatch);
  }
}

TEST_CASE("single photon and coherent outputs") {
  const ModeBasis b(BeamGeometry(1, 1), 2);
  const auto s = SplitterCoefficients::balanced();
  const auto out = single_photon_output(ModeVector::unit(b, {0, 0}), s);
  CHECK(std::abs(out.amp1 - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(out.amp2 - Complex(0, std::sqrt(0.5))) < 1e-15);
  CHECK(out.mode2[ModeIndex{0, 0}] == Complex(1.0));
  const auto odd = single_photon_output(ModeVector::unit(b, {0, 1}), s);
  CHECK(odd.mode2[ModeIndex{0, 1}] == Complex(-1.0));
  const auto pass = single_photon_output(ModeVector::unit(b, {1, 0}),
                                         SplitterCoefficients(Complex(0), Complex(1)));
  CHECK(pass.amp1 == Complex(1.0));
  CHECK(pass.amp2 == Complex(0.0));
  CHECK_THROWS_AS(single_photon_output(2.0 * ModeVector::unit(b, {0, 0}), s), NotNormalized);

  const auto vac = coherent_output(0.0, ModeVector::unit(b, {0, 0}), s);
  CHECK(vac.alpha1 == Complex(0.0));
  CHECK(vac.alpha2 == Complex(0.0));
  const auto one = coherent_output(1.0, ModeVector::unit(b, {0, 0}), s);
  CHECK(std::abs(one.alpha1 - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(one.alpha2 - Complex(0, std::sqrt(0.5))) < 1e-15);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const auto sk = SplitterCoefficients::from_transmission(u(rng), 6.0 * u(rng));
    const Complex alpha(u(rng) * 3, -u(rng));
    const auto c = coherent_output(alpha, ModeVector::unit(b, {1, 1}), sk);
    CHECK(std::norm(c.alpha1) + std::norm(c.alpha2) == Approx(std::norm(alpha)).epsilon(1e-13));
  }
}

}  // TEST_SUITE
