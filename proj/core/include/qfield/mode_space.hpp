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

#ifndef QFIELD_MODE_SPACE_HPP_
#define QFIELD_MODE_SPACE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qfield/geometry.hpp"
#include "qfield/quadrature.hpp"

namespace qfield {

/// Square truncation {(n, m) : 0 <= n, m <= n_max} of the Hermite-Gauss
/// basis. Flat index order is row-major in (n, m); file formats rely on it.
class ModeBasis {
 public:
  ModeBasis(BeamGeometry geom, int n_max);

  const BeamGeometry& geometry() const { return geom_; }
  int n_max() const { return n_max_; }
  std::size_t size() const {
    return static_cast<std::size_t>(n_max_ + 1) * (n_max_ + 1);
  }
  std::size_t index(ModeIndex mu) const;
  ModeIndex mode(std::size_t index) const;
  bool contains(ModeIndex mu) const {
    return mu.n >= 0 && mu.m >= 0 && mu.n <= n_max_ && mu.m <= n_max_;
  }

  friend bool operator==(const ModeBasis&, const ModeBasis&) = default;

 private:
  BeamGeometry geom_;
  int n_max_;
};

/// Complex coefficients of a transverse field in a ModeBasis.
class ModeVector {
 public:
  explicit ModeVector(ModeBasis basis);
  ModeVector(ModeBasis basis, std::vector<Complex> coeffs);

  static ModeVector unit(const ModeBasis& basis, ModeIndex mu);

  const ModeBasis& basis() const { return basis_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  Complex operator[](ModeIndex mu) const { return coeffs_[basis_.index(mu)]; }
  Complex& operator[](ModeIndex mu) { return coeffs_[basis_.index(mu)]; }
  Complex operator[](std::size_t i) const { return coeffs_[i]; }
  Complex& operator[](std::size_t i) { return coeffs_[i]; }

  /// Sum of |c_mu|^2.
  double norm2() const;
  bool is_normalized(double tol = 1e-9) const;
  bool is_real(double tol = 1e-12) const;
  ModeVector normalized() const;
  /// Coefficientwise complex conjugate (the mode vector of phi* only at
  /// the waist, where every u_mu is real).
  ModeVector conj() const;

  ModeVector& operator+=(const ModeVector& other);
  ModeVector& operator*=(Complex s);
  friend ModeVector operator+(ModeVector a, const ModeVector& b) {
    return a += b;
  }
  friend ModeVector operator*(Complex s, ModeVector v) { return v *= s; }

 private:
  ModeBasis basis_;
  std::vector<Complex> coeffs_;
};

/// A transverse field given pointwise, e.g. a closed form or a displaced
/// mode. Square integrability is checked through the quadrature norm.
struct SampledField {
  BeamGeometry geom;
  std::function<Complex(double x, double y, double z)> eval;

  Complex operator()(double x, double y, double z) const {
    return eval(x, y, z);
  }
};

/// Throws GeometryMismatch if the two bases differ.
void require_same_basis(const ModeBasis& a, const ModeBasis& b);

/// (f, g) = integral of conj(f) g over the transverse plane.
///
/// Two ModeVectors contract exactly by orthonormality; anything involving
/// a SampledField is integrated with the tensor Gauss-Hermite rule scaled
/// by x0(z).
Complex inner_product(const ModeVector& f, const ModeVector& g);
Complex inner_product(const ModeVector& f, const SampledField& g, double z,
                      const QuadratureRule& quad);
Complex inner_product(const SampledField& f, const ModeVector& g, double z,
                      const QuadratureRule& quad);
Complex inner_product(const SampledField& f, const SampledField& g, double z,
                      const QuadratureRule& quad);

/// [f g] = integral of f g with no conjugation.
Complex functional_product(const ModeVector& f, const ModeVector& g, double z,
                           const QuadratureRule& quad);
Complex functional_product(const ModeVector& f, const SampledField& g,
                           double z, const QuadratureRule& quad);
Complex functional_product(const SampledField& f, const SampledField& g,
                           double z, const QuadratureRule& quad);

/// [f g] in the waist plane z = 0, where every u_mu is real, so the
/// product reduces to sum_mu f_mu g_mu.
Complex waist_bracket(const ModeVector& f, const ModeVector& g);

/// Integral of |f|^2 by quadrature.
double quadrature_norm2(const SampledField& f, double z,
                        const QuadratureRule& quad);

struct DecomposeOptions {
  /// Require quad.order() >= 2 n_max + 16.
  bool enforce_order_policy = true;
};

/// Minimum quadrature order accepted by decompose() for a basis.
int min_quadrature_order(const ModeBasis& basis);

/// phi_mu = (u_mu, field) evaluated at height z.
///
/// Throws QuadraturePolicyError when the order is below the policy (unless
/// disabled) and NonFiniteSample for NaN/inf samples.
ModeVector decompose(const SampledField& field, const ModeBasis& basis,
                     double z, const QuadratureRule& quad,
                     const DecomposeOptions& options = {});

/// sum_mu v_mu u_mu(x, y, z).
Complex synthesize(const ModeVector& v, double x, double y, double z);

/// Wraps a ModeVector as a SampledField via synthesize().
SampledField as_field(const ModeVector& v);

/// Truncated completeness kernel sum_mu u_mu(x, y, z) conj(u_mu(x', y', z)).
Complex completeness_kernel(const ModeBasis& basis, double x, double y,
                            double xp, double yp, double z);

/// integral of K_N(x', y'; x, y) f(x, y) over (x, y): the truncated
/// kernel acting as a reproducing kernel at (x', y').
Complex kernel_action(const ModeBasis& basis, const SampledField& f, double xp,
                      double yp, double z, const QuadratureRule& quad);

/// Gram matrix (u_mu, u_nu) of the whole basis by tensor quadrature at
/// height z, row-major in the flat basis index. The identity up to
/// quadrature error.
std::vector<std::vector<Complex>> gram_matrix(const ModeBasis& basis, double z,
                                              const QuadratureRule& quad);

/// Table of phi_n(x_i, z) for n <= n_max at each of the given points.
/// Row i holds the values at xs[i].
std::vector<std::vector<Complex>> mode_table(int n_max,
                                             std::span<const double> xs,
                                             double z,
                                             const BeamGeometry& geom);

}  // namespace qfield

#endif  // QFIELD_MODE_SPACE_HPP_
