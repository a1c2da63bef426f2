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

#include "qfield/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qfield/error.hpp"

namespace qfield {
namespace {

// Orthonormal Hermite polynomials p_j(t) = H_j(t) / sqrt(2^j j! sqrt(pi)),
// so that p_j(t) e^{-t^2/2} are the Hermite functions. Returns p_n and
// p_{n-1}.
std::pair<double, double> orthonormal_hermite(int n, double t) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  for (int j = 0; j < n; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * t * cur -
                        std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

QuadratureRule::QuadratureRule(int order) {
  if (order < 1 || order > 400) {
    throw InvalidArgument("quadrature order must be in [1, 400], got " +
                          std::to_string(order));
  }
  // Golub-Welsch: the Jacobi matrix of the orthonormal Hermite recurrence
  // has off-diagonal sqrt(j/2) and zero diagonal.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int j = 1; j < order; ++j) {
    jacobi(j, j - 1) = jacobi(j - 1, j) = std::sqrt(j / 2.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      jacobi, Eigen::EigenvaluesOnly);
  std::vector<double> roots(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + order);

  nodes_.resize(order);
  weights_.resize(order);
  plain_weights_.resize(order);
  for (int i = 0; i < order; ++i) {
    double t = roots[i];
    for (int iter = 0; iter < 8; ++iter) {
      const auto [p, p_prev] = orthonormal_hermite(order, t);
      // p_n'(t) = sqrt(2n) p_{n-1}(t)
      const double dt = p / (std::sqrt(2.0 * order) * p_prev);
      t -= dt;
      if (std::abs(dt) <= 1e-15 * std::max(1.0, std::abs(t))) break;
    }
    const double p_prev = orthonormal_hermite(order, t).second;
    nodes_[i] = t;
    weights_[i] = 1.0 / (order * p_prev * p_prev);
    plain_weights_[i] = weights_[i] * std::exp(t * t);
  }
  // Symmetrize: the rule is exactly even.
  for (int i = 0; i < order / 2; ++i) {
    const int j = order - 1 - i;
    const double t = 0.5 * (nodes_[j] - nodes_[i]);
    nodes_[i] = -t;
    nodes_[j] = t;
    const double w = 0.5 * (weights_[i] + weights_[j]);
    weights_[i] = weights_[j] = w;
    const double pw = 0.5 * (plain_weights_[i] + plain_weights_[j]);
    plain_weights_[i] = plain_weights_[j] = pw;
  }
  if (order % 2 == 1) nodes_[order / 2] = 0.0;
}

QuadratureRule::Scaled QuadratureRule::rescaled(double scale) const {
  if (!(std::isfinite(scale) && scale > 0.0)) {
    throw InvalidArgument("quadrature scale must be finite and > 0");
  }
  Scaled out;
  out.nodes.reserve(nodes_.size());
  out.weights.reserve(nodes_.size());
  out.plain_weights.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out.nodes.push_back(scale * nodes_[i]);
    out.weights.push_back(scale * weights_[i]);
    out.plain_weights.push_back(scale * plain_weights_[i]);
  }
  return out;
}

}  // namespace qfield
