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

// Reference computations that share no code with the library beyond the
// mode functions and basic types. Used by unit and acceptance tests.

#ifndef QFIELD_TESTS_TEST_ORACLES_HPP_
#define QFIELD_TESTS_TEST_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qfield/geometry.hpp"
#include "qfield/mode_space.hpp"

namespace qfield::testing {

using Complex = std::complex<double>;

/// Trapezoidal 1D Gram matrix of phi_0..phi_n at plane z. Integrands are
/// Gaussian-damped, so the rule converges geometrically.
inline std::vector<std::vector<Complex>> trapezoid_gram_1d(
    int n_max, double z, const BeamGeometry& geom, double half_width = 14.0,
    int points = 1400) {
  const double xs = geom.x_scale(z);
  const double h = 2.0 * half_width * xs / points;
  std::vector<std::vector<Complex>> samples(n_max + 1,
                                            std::vector<Complex>(points + 1));
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i <= points; ++i) {
      samples[n][i] = mode_1d(n, -half_width * xs + i * h, z, geom);
    }
  }
  std::vector<std::vector<Complex>> gram(n_max + 1,
                                         std::vector<Complex>(n_max + 1));
  for (int a = 0; a <= n_max; ++a) {
    for (int b = 0; b <= n_max; ++b) {
      Complex sum = 0.0;
      for (int i = 0; i <= points; ++i) {
        const double w = (i == 0 || i == points) ? 0.5 : 1.0;
        sum += w * std::conj(samples[a][i]) * samples[b][i];
      }
      gram[a][b] = sum * h;
    }
  }
  return gram;
}

/// sum_mu conj(f_mu) g_mu, written out independently of inner_product().
inline Complex coeff_inner(const ModeVector& f, const ModeVector& g) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += std::conj(f[i]) * g[i];
  return sum;
}

/// sum_mu f_mu g_mu, the waist-plane functional product.
inline Complex coeff_bilinear(const ModeVector& f, const ModeVector& g) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * g[i];
  return sum;
}

/// f^(n)(0) / n! from a trapezoidal Cauchy integral on |a| = r.
inline Complex cauchy_coefficient(const std::function<Complex(Complex)>& f,
                                  int n, double r = 0.5, int samples = 64) {
  Complex sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / samples;
    sum += f(std::polar(r, th)) * std::polar(std::pow(r, -n), -n * th);
  }
  return sum / static_cast<double>(samples);
}

/// Dense truncated ladder operators for M modes, each with occupations
/// 0..cutoff, first mode most significant.
struct DenseFock {
  int modes;
  int cutoff;
  Eigen::Index dim;
  std::vector<Eigen::MatrixXcd> a;

  DenseFock(int m, int c) : modes(m), cutoff(c), dim(1) {
    for (int i = 0; i < m; ++i) dim *= (c + 1);
  }

  /// Builds a_j for every mode. Only sensible for small dim.
  void build_ladders() {
    a.clear();
    for (int j = 0; j < modes; ++j) {
      Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
      for (Eigen::Index s = 0; s < dim; ++s) {
        const int n = occupation(s, j);
        if (n > 0) op(s - stride(j), s) = std::sqrt(static_cast<double>(n));
      }
      a.push_back(op);
    }
  }

  Eigen::Index stride(int mode) const {
    Eigen::Index s = 1;
    for (int i = mode + 1; i < modes; ++i) s *= (cutoff + 1);
    return s;
  }
  int occupation(Eigen::Index state, int mode) const {
    return static_cast<int>((state / stride(mode)) % (cutoff + 1));
  }

  /// prod_j e^{-|b_j|^2/2} b_j^{n_j} / sqrt(n_j!).
  Eigen::VectorXcd coherent(const std::vector<Complex>& beta) const {
    Eigen::VectorXcd v(dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
      Complex amp = 1.0;
      for (int j = 0; j < modes; ++j) {
        const int n = occupation(s, j);
        amp *= std::exp(-0.5 * std::norm(beta[j])) * std::pow(beta[j], n) /
               std::sqrt(std::tgamma(n + 1.0));
      }
      v(s) = amp;
    }
    return v;
  }
};

inline ModeVector random_unit_vector(const ModeBasis& basis, std::mt19937& rng,
                                     int max_order) {
  std::normal_distribution<double> g(0.0, 1.0);
  ModeVector v(basis);
  for (int n = 0; n <= max_order; ++n) {
    for (int m = 0; m <= max_order; ++m) v[ModeIndex{n, m}] = {g(rng), g(rng)};
  }
  return v.normalized();
}

inline ModeVector random_real_vector(const ModeBasis& basis, std::mt19937& rng,
                                     int max_order, double sigma) {
  std::normal_distribution<double> g(0.0, sigma);
  ModeVector v(basis);
  for (int n = 0; n <= max_order; ++n) {
    for (int m = 0; m <= max_order; ++m) v[ModeIndex{n, m}] = g(rng);
  }
  return v;
}

}  // namespace qfield::testing

#endif  // QFIELD_TESTS_TEST_ORACLES_HPP_
