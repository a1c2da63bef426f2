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

#ifndef QFIELD_QUADRATURE_HPP_
#define QFIELD_QUADRATURE_HPP_

#include <vector>

namespace qfield {

/// Gauss-Hermite rule for the weight e^{-t^2} on the real line.
///
/// Nodes come from the Golub-Welsch eigenproblem, polished by Newton steps
/// on the orthonormal Hermite polynomials; weights use the closed form
/// 1 / (Q p_{Q-1}(t)^2) so the far-tail weights keep full relative
/// accuracy. Exact for polynomials of degree <= 2Q - 1.
class QuadratureRule {
 public:
  /// Throws InvalidArgument unless 1 <= order <= 400.
  explicit QuadratureRule(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  /// Weights for the weight function e^{-t^2}.
  const std::vector<double>& weights() const { return weights_; }
  /// weights()[i] * exp(nodes()[i]^2): weights for a plain integral of a
  /// function that already carries its own Gaussian decay.
  const std::vector<double>& plain_weights() const { return plain_weights_; }

  /// The same rule mapped onto x = scale * t. Integrates
  /// x^j e^{-(x/scale)^2} exactly for j <= 2Q - 1.
  struct Scaled {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> plain_weights;
  };
  Scaled rescaled(double scale) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> plain_weights_;
};

}  // namespace qfield

#endif  // QFIELD_QUADRATURE_HPP_
