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
#include "qfield/error.hpp"
#include "qfield/mode_space.hpp"
#include "qfield/quadrature.hpp"
#include "test_oracles.hpp"

using namespace qfield;
namespace ref = qfield::testing;
using doctest::Approx;

namespace {

SampledField displaced_tem00(const BeamGeometry& g, double xi) {
  const double shift = xi * g.x_scale(0.0);
  return {g, [g, shift](double x, double y, double z) {
            return mode_2d({0, 0}, x - shift, y, z, g);
          }};
}

}  // namespace

TEST_SUITE("mode_space") {

TEST_CASE("basis indexing") {
  const ModeBasis b(BeamGeometry(1.0, 1.0), 3);
  CHECK(b.size() == 16);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index(b.mode(i)) == i);
  CHECK(b.index({1, 2}) == 6);
  CHECK(b.contains({3, 3}));
  CHECK_FALSE(b.contains({4, 0}));
  CHECK_THROWS_AS(b.index({4, 0}), InvalidArgument);
  CHECK_THROWS_AS(ModeBasis(BeamGeometry(1.0, 1.0), -1), InvalidArgument);
  CHECK_THROWS_AS(ModeBasis(BeamGeometry(1.0, 1.0), 61), InvalidArgument);
}

TEST_CASE("mode vector arithmetic") {
  const ModeBasis b(BeamGeometry(1.0, 1.0), 2);
  ModeVector v = ModeVector::unit(b, {1, 0});
  v += Complex(0.0, 1.0) * ModeVector::unit(b, {0, 2});
  CHECK(v.norm2() == Approx(2.0));
  CHECK_FALSE(v.is_normalized());
  CHECK(v.normalized().is_normalized());
  CHECK_FALSE(v.is_real());
  CHECK(v.conj()[ModeIndex{0, 2}] == Complex(0.0, -1.0));
  CHECK_THROWS_AS(ModeVector(b, std::vector<Complex>(3)), InvalidArgument);
  CHECK_THROWS_AS(ModeVector(b).normalized(), InvalidArgument);
  const ModeBasis other(BeamGeometry(2.0, 1.0), 2);
  CHECK_THROWS_AS(v += ModeVector(other), GeometryMismatch);
  CHECK_THROWS_AS(inner_product(v, ModeVector(other)), GeometryMismatch);
}

TEST_CASE("inner product and functional product") {
  const BeamGeometry g(1.0, 1.0);
  const ModeBasis b(g, 4);
  const QuadratureRule q(30);
  std::mt19937 rng(3);
  const ModeVector f = ref::random_unit_vector(b, rng, 4);
  const ModeVector h = ref::random_unit_vector(b, rng, 4);
  CHECK(std::abs(inner_product(f, f) - 1.0) < 1e-14);
  CHECK(std::abs(inner_product(f, h) - ref::coeff_inner(f, h)) < 1e-14);
  // Quadrature overloads agree with the coefficient form at any z.
  CHECK(std::abs(inner_product(as_field(f), h, 0.7, q) - ref::coeff_inner(f, h)) < 1e-12);
  CHECK(std::abs(inner_product(f, as_field(h), -0.4, q) - ref::coeff_inner(f, h)) < 1e-12);
  // [f g] is symmetric; at the waist it is sum f g.
  CHECK(std::abs(waist_bracket(f, h) - waist_bracket(h, f)) < 1e-15);
  CHECK(std::abs(functional_product(f, h, 0.0, q) - ref::coeff_bilinear(f, h)) < 1e-14);
  CHECK(std::abs(functional_product(as_field(f), as_field(h), 0.0, q) -
                 ref::coeff_bilinear(f, h)) < 1e-12);
  const ModeVector u00 = ModeVector::unit(b, {0, 0});
  const ModeVector u10 = ModeVector::unit(b, {1, 0});
  CHECK(std::abs(functional_product(as_field(u00), as_field(u10), 0.0, q)) < 1e-14);
  ModeVector real_phi = ref::random_real_vector(b, rng, 3, 1.0).normalized();
  CHECK(std::abs(waist_bracket(real_phi, real_phi) - 1.0) < 1e-14);
}

TEST_CASE("overlap with displaced TEM00") {
  const BeamGeometry g(1.0, 1.0);
  const ModeBasis b(g, 0);
  const QuadratureRule q(40);
  for (double xi : {0.0, 0.3, 1.0, -1.7}) {
    const Complex o = inner_product(ModeVector::unit(b, {0, 0}), displaced_tem00(g, xi), 0.0, q);
    CHECK(o.real() == Approx(std::exp(-xi * xi / 4)).epsilon(1e-12));
    CHECK(std::abs(o.imag()) < 1e-14);
  }
}

TEST_CASE("decompose") {
  const BeamGeometry g(1.2, 1.5);
  const ModeBasis b(g, 10);
  const QuadratureRule q(min_quadrature_order(b));
  SUBCASE("basis mode round trip") {
    const ModeVector u = ModeVector::unit(b, {2, 3});
    const ModeVector d = decompose(as_field(u), b, 0.3, q);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(std::abs(d[i] - u[i]) <= 1e-10);
    }
  }
  SUBCASE("displaced TEM00 against the coherent series") {
    const double xi = 0.4;
    const ModeVector d = decompose(displaced_tem00(g, xi), b, 0.0, q);
    const double beta = xi / std::sqrt(2.0);
    for (int n = 0; n <= 10; ++n) {
      const double c = std::exp(-beta * beta / 2) * std::pow(beta, n) /
                       std::sqrt(std::tgamma(n + 1.0));
      CHECK(std::abs(d[ModeIndex{n, 0}] - c) <= 1e-8);
      CHECK(std::abs(d[ModeIndex{n, 1}]) <= 1e-12);
    }
  }
  SUBCASE("coefficients independent of z") {
    const ModeVector d0 = decompose(displaced_tem00(g, 0.5), b, 0.0, q);
    const ModeVector dz = decompose(as_field(d0), b, 0.3 * g.rayleigh_length(), q);
    for (std::size_t i = 0; i < d0.size(); ++i) CHECK(std::abs(d0[i] - dz[i]) <= 1e-8);
  }
  SUBCASE("round trip to points") {
    const ModeVector d = decompose(as_field(ModeVector::unit(b, {1, 1})), b, 0.0, q);
    for (double x : {-1.0, 0.0, 0.7}) {
      for (double y : {-0.4, 0.9}) {
        CHECK(std::abs(synthesize(d, x, y, 0.2) - mode_2d({1, 1}, x, y, 0.2, g)) <= 1e-8);
      }
    }
  }
  SUBCASE("order policy") {
    CHECK_THROWS_AS(decompose(displaced_tem00(g, 0.1), b, 0.0, QuadratureRule(20)),
                    QuadraturePolicyError);
    CHECK_NOTHROW(decompose(displaced_tem00(g, 0.1), b, 0.0, QuadratureRule(20),
                            DecomposeOptions{false}));
  }
  SUBCASE("non-finite samples") {
    const SampledField bad{g, [](double, double, double) { return Complex(std::nan(""), 0); }};
    CHECK_THROWS_AS(decompose(bad, b, 0.0, q), NonFiniteSample);
  }
  SUBCASE("geometry mismatch") {
    const SampledField other = as_field(ModeVector::unit(ModeBasis(BeamGeometry(2, 1), 1), {0, 0}));
    CHECK_THROWS_AS(decompose(other, b, 0.0, q), GeometryMismatch);
  }
}

TEST_CASE("synthesize") {
  const BeamGeometry g(1.0, 1.0);
  const ModeBasis b(g, 3);
  CHECK(synthesize(ModeVector(b), 0.3, 0.1, 0.5) == Complex(0.0));
  CHECK(std::abs(synthesize(ModeVector::unit(b, {3, 1}), 0.3, 0.1, 0.5) -
                 mode_2d({3, 1}, 0.3, 0.1, 0.5, g)) < 1e-15);
}

TEST_CASE("completeness kernel") {
  const BeamGeometry g(1.0, 1.0);
  const QuadratureRule q(64);
  const Complex diag = completeness_kernel(ModeBasis(g, 5), 0.3, -0.2, 0.3, -0.2, 0.4);
  CHECK(diag.real() > 0.0);
  CHECK(std::abs(diag.imag()) < 1e-15);
  for (int n : {0, 2, 5}) {
    const Complex k = kernel_action(ModeBasis(g, n), as_field(ModeVector::unit(ModeBasis(g, n), {0, 0})),
                                    0.4, 0.1, 0.0, q);
    CHECK(std::abs(k - mode_2d({0, 0}, 0.4, 0.1, 0.0, g)) < 1e-12);
  }
  // A displaced TEM00 outside the basis converges monotonically in N.
  const SampledField f = displaced_tem00(g, 0.2);
  const Complex exact = f(0.3, 0.2, 0.0);
  double prev = 1e300;
  for (int n = 0; n <= 12; n += 2) {
    const double err = std::abs(kernel_action(ModeBasis(g, n), f, 0.3, 0.2, 0.0, q) - exact);
    CHECK(err <= prev);
    prev = err;
  }
  CHECK(prev <= 1e-6);
}

TEST_CASE("gram matrix and Parseval") {
  const BeamGeometry g(0.8, 2.0);
  const ModeBasis b(g, 6);
  const QuadratureRule q(30);
  const auto gram = gram_matrix(b, 1.3, q);
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) {
      CHECK(std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)) < 1e-9);
    }
  }
  std::mt19937 rng(5);
  const ModeVector v = ref::random_unit_vector(b, rng, 6);
  CHECK(quadrature_norm2(as_field(v), 0.9, q) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("mode table") {
  const BeamGeometry g(1.0, 1.0);
  const std::vector<double> xs = {-0.5, 0.0, 1.25};
  const auto t = mode_table(4, xs, 0.6, g);
  REQUIRE(t.size() == 3);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    REQUIRE(t[i].size() == 5);
    for (int n = 0; n <= 4; ++n) CHECK(std::abs(t[i][n] - mode_1d(n, xs[i], 0.6, g)) < 1e-14);
  }
}

}  // TEST_SUITE
