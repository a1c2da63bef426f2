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

#include "qfield/mode_space.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qfield/error.hpp"

namespace qfield {

ModeBasis::ModeBasis(BeamGeometry geom, int n_max)
    : geom_(geom), n_max_(n_max) {
  if (n_max < 0 || n_max > 60) {
    throw InvalidArgument("n_max must be in [0, 60], got " +
                          std::to_string(n_max));
  }
}

std::size_t ModeBasis::index(ModeIndex mu) const {
  if (!contains(mu)) {
    throw InvalidArgument("mode (" + std::to_string(mu.n) + ", " +
                          std::to_string(mu.m) + ") outside basis with n_max " +
                          std::to_string(n_max_));
  }
  return static_cast<std::size_t>(mu.n) * (n_max_ + 1) + mu.m;
}

ModeIndex ModeBasis::mode(std::size_t index) const {
  const auto stride = static_cast<std::size_t>(n_max_ + 1);
  return {static_cast<int>(index / stride), static_cast<int>(index % stride)};
}

ModeVector::ModeVector(ModeBasis basis)
    : basis_(basis), coeffs_(basis.size(), Complex(0.0, 0.0)) {}

ModeVector::ModeVector(ModeBasis basis, std::vector<Complex> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_.size()) {
    throw InvalidArgument("coefficient count " +
                          std::to_string(coeffs_.size()) +
                          " does not match basis size " +
                          std::to_string(basis_.size()));
  }
}

ModeVector ModeVector::unit(const ModeBasis& basis, ModeIndex mu) {
  ModeVector v(basis);
  v[mu] = 1.0;
  return v;
}

double ModeVector::norm2() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return s;
}

bool ModeVector::is_normalized(double tol) const {
  return std::abs(norm2() - 1.0) <= tol;
}

bool ModeVector::is_real(double tol) const {
  for (const Complex& c : coeffs_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

ModeVector ModeVector::normalized() const {
  const double n = std::sqrt(norm2());
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  ModeVector out = *this;
  out *= Complex(1.0 / n, 0.0);
  return out;
}

ModeVector ModeVector::conj() const {
  ModeVector out = *this;
  for (Complex& c : out.coeffs_) c = std::conj(c);
  return out;
}

ModeVector& ModeVector::operator+=(const ModeVector& other) {
  require_same_basis(basis_, other.basis_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ModeVector& ModeVector::operator*=(Complex s) {
  for (Complex& c : coeffs_) c *= s;
  return *this;
}

void require_same_basis(const ModeBasis& a, const ModeBasis& b) {
  if (!(a.geometry() == b.geometry())) {
    throw GeometryMismatch("mode vectors attached to different geometries");
  }
  if (a.n_max() != b.n_max()) {
    throw GeometryMismatch("mode vectors truncated at different n_max (" +
                           std::to_string(a.n_max()) + " vs " +
                           std::to_string(b.n_max()) + ")");
  }
}

std::vector<std::vector<Complex>> mode_table(int n_max,
                                             std::span<const double> xs,
                                             double z,
                                             const BeamGeometry& geom) {
  const double x0 = geom.x_scale(z);
  const double gouy = geom.gouy_angle(z);
  const double zr = z / geom.rayleigh_length();
  std::vector<std::vector<Complex>> table(xs.size(),
                                          std::vector<Complex>(n_max + 1));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double u = xs[i] / x0;
    const double envelope = std::exp(-0.5 * u * u);
    double h_prev = 0.0;
    double h = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      if (n == 1) {
        h_prev = h;
        h = 2.0 * u;
      } else if (n > 1) {
        const double next = 2.0 * u * h - 2.0 * (n - 1) * h_prev;
        h_prev = h;
        h = next;
      }
      const double norm = std::exp(-0.25 * std::log(std::numbers::pi) -
                                   0.5 * (n * std::numbers::ln2 +
                                          std::lgamma(n + 1.0)) -
                                   0.5 * std::log(x0));
      const double phase = 0.5 * zr * u * u - (n + 0.5) * gouy;
      table[i][n] = std::polar(norm * h * envelope, phase);
    }
  }
  return table;
}

namespace {

using Grid = std::vector<std::vector<Complex>>;

struct TensorRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // plain integration weights
};

TensorRule tensor_rule(const BeamGeometry& geom, double z,
                       const QuadratureRule& quad) {
  auto scaled = quad.rescaled(geom.x_scale(z));
  return {std::move(scaled.nodes), std::move(scaled.plain_weights)};
}

Grid sample(const SampledField& f, const TensorRule& rule, double z) {
  const std::size_t q = rule.nodes.size();
  Grid g(q, std::vector<Complex>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Complex v = f(rule.nodes[i], rule.nodes[j], z);
      if (!(std::isfinite(v.real()) && std::isfinite(v.imag()))) {
        throw NonFiniteSample("field sample is not finite at (" +
                              std::to_string(rule.nodes[i]) + ", " +
                              std::to_string(rule.nodes[j]) + ")");
      }
      g[i][j] = v;
    }
  }
  return g;
}

Grid sample(const ModeVector& v, const TensorRule& rule, double z) {
  const ModeBasis& basis = v.basis();
  const int n_max = basis.n_max();
  const auto table = mode_table(n_max, rule.nodes, z, basis.geometry());
  const Complex carrier = std::polar(1.0, basis.geometry().k() * z);
  const std::size_t q = rule.nodes.size();
  // partial[i][m] = sum_n v_nm phi_n(x_i)
  Grid partial(q, std::vector<Complex>(n_max + 1));
  for (std::size_t i = 0; i < q; ++i) {
    for (int n = 0; n <= n_max; ++n) {
      const Complex pn = table[i][n];
      for (int m = 0; m <= n_max; ++m) partial[i][m] += v[ModeIndex{n, m}] * pn;
    }
  }
  Grid g(q, std::vector<Complex>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      Complex s = 0.0;
      for (int m = 0; m <= n_max; ++m) s += partial[i][m] * table[j][m];
      g[i][j] = carrier * s;
    }
  }
  return g;
}

Complex integrate(const Grid& f, const Grid& g, const TensorRule& rule,
                  bool conjugate_first) {
  Complex total = 0.0;
  const std::size_t q = rule.nodes.size();
  for (std::size_t i = 0; i < q; ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      const Complex a = conjugate_first ? std::conj(f[i][j]) : f[i][j];
      row += rule.weights[j] * a * g[i][j];
    }
    total += rule.weights[i] * row;
  }
  return total;
}

void require_same_geometry(const BeamGeometry& a, const BeamGeometry& b) {
  if (!(a == b)) throw GeometryMismatch("fields attached to different geometries");
}

}  // namespace

Complex inner_product(const ModeVector& f, const ModeVector& g) {
  require_same_basis(f.basis(), g.basis());
  Complex s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::conj(f[i]) * g[i];
  return s;
}

Complex inner_product(const ModeVector& f, const SampledField& g, double z,
                      const QuadratureRule& quad) {
  require_same_geometry(f.basis().geometry(), g.geom);
  const auto rule = tensor_rule(g.geom, z, quad);
  return integrate(sample(f, rule, z), sample(g, rule, z), rule, true);
}

Complex inner_product(const SampledField& f, const ModeVector& g, double z,
                      const QuadratureRule& quad) {
  return std::conj(inner_product(g, f, z, quad));
}

Complex inner_product(const SampledField& f, const SampledField& g, double z,
                      const QuadratureRule& quad) {
  require_same_geometry(f.geom, g.geom);
  const auto rule = tensor_rule(f.geom, z, quad);
  return integrate(sample(f, rule, z), sample(g, rule, z), rule, true);
}

Complex waist_bracket(const ModeVector& f, const ModeVector& g) {
  require_same_basis(f.basis(), g.basis());
  Complex s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s;
}

Complex functional_product(const ModeVector& f, const ModeVector& g, double z,
                           const QuadratureRule& quad) {
  require_same_basis(f.basis(), g.basis());
  if (z == 0.0) return waist_bracket(f, g);
  const auto rule = tensor_rule(f.basis().geometry(), z, quad);
  return integrate(sample(f, rule, z), sample(g, rule, z), rule, false);
}

Complex functional_product(const ModeVector& f, const SampledField& g,
                           double z, const QuadratureRule& quad) {
  require_same_geometry(f.basis().geometry(), g.geom);
  const auto rule = tensor_rule(g.geom, z, quad);
  return integrate(sample(f, rule, z), sample(g, rule, z), rule, false);
}

Complex functional_product(const SampledField& f, const SampledField& g,
                           double z, const QuadratureRule& quad) {
  require_same_geometry(f.geom, g.geom);
  const auto rule = tensor_rule(f.geom, z, quad);
  return integrate(sample(f, rule, z), sample(g, rule, z), rule, false);
}

double quadrature_norm2(const SampledField& f, double z,
                        const QuadratureRule& quad) {
  const auto rule = tensor_rule(f.geom, z, quad);
  const Grid g = sample(f, rule, z);
  return integrate(g, g, rule, true).real();
}

int min_quadrature_order(const ModeBasis& basis) {
  return 2 * basis.n_max() + 16;
}

ModeVector decompose(const SampledField& field, const ModeBasis& basis,
                     double z, const QuadratureRule& quad,
                     const DecomposeOptions& options) {
  require_same_geometry(basis.geometry(), field.geom);
  if (options.enforce_order_policy &&
      quad.order() < min_quadrature_order(basis)) {
    throw QuadraturePolicyError(
        "quadrature order " + std::to_string(quad.order()) +
        " below policy 2*n_max+16 = " +
        std::to_string(min_quadrature_order(basis)));
  }
  const auto rule = tensor_rule(field.geom, z, quad);
  const Grid samples = sample(field, rule, z);
  const int n_max = basis.n_max();
  const auto table = mode_table(n_max, rule.nodes, z, basis.geometry());
  const std::size_t q = rule.nodes.size();

  // partial[i][m] = sum_j w_j conj(phi_m(y_j)) F(x_i, y_j)
  Grid partial(q, std::vector<Complex>(n_max + 1));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Complex wf = rule.weights[j] * samples[i][j];
      for (int m = 0; m <= n_max; ++m) partial[i][m] += std::conj(table[j][m]) * wf;
    }
  }
  const Complex carrier = std::polar(1.0, -basis.geometry().k() * z);
  ModeVector out(basis);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < q; ++i) {
        s += rule.weights[i] * std::conj(table[i][n]) * partial[i][m];
      }
      out[ModeIndex{n, m}] = carrier * s;
    }
  }
  return out;
}

Complex synthesize(const ModeVector& v, double x, double y, double z) {
  const ModeBasis& basis = v.basis();
  const int n_max = basis.n_max();
  const double pts[2] = {x, y};
  const auto table = mode_table(n_max, pts, z, basis.geometry());
  Complex s = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      const Complex c = v[ModeIndex{n, m}];
      if (c != Complex(0.0, 0.0)) s += c * table[0][n] * table[1][m];
    }
  }
  return s * std::polar(1.0, basis.geometry().k() * z);
}

SampledField as_field(const ModeVector& v) {
  return SampledField{v.basis().geometry(),
                      [v](double x, double y, double z) {
                        return synthesize(v, x, y, z);
                      }};
}

Complex completeness_kernel(const ModeBasis& basis, double x, double y,
                            double xp, double yp, double z) {
  const int n_max = basis.n_max();
  const double pts[4] = {x, y, xp, yp};
  const auto t = mode_table(n_max, pts, z, basis.geometry());
  // The e^{ikz} carriers cancel between u and conj(u).
  Complex sx = 0.0;
  Complex sy = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    sx += t[0][n] * std::conj(t[2][n]);
    sy += t[1][n] * std::conj(t[3][n]);
  }
  return sx * sy;
}

std::vector<std::vector<Complex>> gram_matrix(const ModeBasis& basis, double z,
                                              const QuadratureRule& quad) {
  const auto rule = tensor_rule(basis.geometry(), z, quad);
  const auto table = mode_table(basis.n_max(), rule.nodes, z, basis.geometry());
  const std::size_t q = rule.nodes.size();
  const std::size_t size = basis.size();
  // Every u_mu sampled on the tensor grid; the e^{ikz} carrier cancels.
  std::vector<std::vector<Complex>> samples(size, std::vector<Complex>(q * q));
  for (std::size_t mu = 0; mu < size; ++mu) {
    const ModeIndex idx = basis.mode(mu);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        samples[mu][i * q + j] = table[i][idx.n] * table[j][idx.m];
      }
    }
  }
  std::vector<double> w(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) w[i * q + j] = rule.weights[i] * rule.weights[j];
  }
  std::vector<std::vector<Complex>> gram(size, std::vector<Complex>(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < q * q; ++k) {
        s += w[k] * std::conj(samples[a][k]) * samples[b][k];
      }
      gram[a][b] = s;
      gram[b][a] = std::conj(s);
    }
  }
  return gram;
}

Complex kernel_action(const ModeBasis& basis, const SampledField& f, double xp,
                      double yp, double z, const QuadratureRule& quad) {
  require_same_geometry(basis.geometry(), f.geom);
  const auto rule = tensor_rule(f.geom, z, quad);
  const Grid samples = sample(f, rule, z);
  Complex total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      total += rule.weights[i] * rule.weights[j] *
               completeness_kernel(basis, xp, yp, rule.nodes[i],
                                   rule.nodes[j], z) *
               samples[i][j];
    }
  }
  return total;
}

}  // namespace qfield
