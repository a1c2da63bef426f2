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
#include "qfield/quadrature.hpp"

using namespace qfield;
using doctest::Approx;

namespace {

// Integral of t^j e^{-t^2} over R: Gamma((j+1)/2) for even j, 0 for odd.
double gaussian_moment(int j) {
  return j % 2 ? 0.0 : std::tgamma((j + 1) / 2.0);
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("order bounds") {
  CHECK_THROWS_AS(QuadratureRule(0), InvalidArgument);
  CHECK_THROWS_AS(QuadratureRule(401), InvalidArgument);
  const QuadratureRule one(1);
  CHECK(one.nodes()[0] == 0.0);
  CHECK(one.weights()[0] == Approx(std::sqrt(std::numbers::pi)));
}

TEST_CASE("exact for polynomials up to degree 2Q-1") {
  for (int q : {2, 5, 12, 40}) {
    const QuadratureRule rule(q);
    for (int j = 0; j <= 2 * q - 1; j += 1) {
      double sum = 0.0;
      double scale = 0.0;
      for (int i = 0; i < q; ++i) {
        const double term = rule.weights()[i] * std::pow(rule.nodes()[i], j);
        sum += term;
        scale += std::abs(term);
      }
      CHECK(std::abs(sum - gaussian_moment(j)) <= 1e-13 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("nodes symmetric and sorted, weights positive") {
  const QuadratureRule rule(48);
  const auto& t = rule.nodes();
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i] == Approx(-t[t.size() - 1 - i]).epsilon(1e-14));
    CHECK(rule.weights()[i] > 0.0);
    if (i) CHECK(t[i] > t[i - 1]);
  }
}

TEST_CASE("plain weights integrate a Gaussian-decaying function") {
  const QuadratureRule rule(60);
  double sum = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    const double t = rule.nodes()[i];
    sum += rule.plain_weights()[i] * std::exp(-t * t) / (1.0 + 0.0 * t);
  }
  CHECK(sum == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("high orders stay accurate") {
  const QuadratureRule rule(400);
  double total = 0.0;
  for (double w : rule.weights()) total += w;
  CHECK(total == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("rescaled rule") {
  const QuadratureRule rule(20);
  const auto s = rule.rescaled(2.5);
  double second = 0.0;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    second += s.weights[i] * s.nodes[i] * s.nodes[i];
  }
  // integral x^2 e^{-(x/2.5)^2} dx = 2.5^3 sqrt(pi) / 2
  CHECK(second == Approx(std::pow(2.5, 3) * std::sqrt(std::numbers::pi) / 2));
  CHECK_THROWS_AS(rule.rescaled(0.0), InvalidArgument);
}

}  // TEST_SUITE
