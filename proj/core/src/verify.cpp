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

#include "qfield/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "qfield/amplitudes.hpp"
#include "qfield/error.hpp"
#include "qfield/fock_oracle.hpp"
#include "qfield/mode_space.hpp"
#include "qfield/observables.hpp"
#include "qfield/quadrature.hpp"

namespace qfield {
namespace {

class Suite {
 public:
  void add(std::string name, double max_error, double tolerance) {
    const bool pass = std::isfinite(max_error) && max_error <= tolerance;
    results_.push_back({std::move(name), max_error, tolerance, pass});
  }
  std::vector<CheckResult>& results() { return results_; }

 private:
  std::vector<CheckResult> results_;
};

ModeVector random_complex(const ModeBasis& basis, std::mt19937& rng,
                          int max_order) {
  std::normal_distribution<double> g(0.0, 1.0);
  ModeVector v(basis);
  for (int n = 0; n <= max_order; ++n) {
    for (int m = 0; m <= max_order; ++m) v[ModeIndex{n, m}] = {g(rng), g(rng)};
  }
  return v.normalized();
}

ModeVector random_real(const ModeBasis& basis, std::mt19937& rng,
                       int max_order, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  ModeVector v(basis);
  for (int n = 0; n <= max_order; ++n) {
    for (int m = 0; m <= max_order; ++m) v[ModeIndex{n, m}] = g(rng);
  }
  return v;
}

// Orthonormal Hermite polynomials by their own recurrence, independent of
// hermite_poly(): p_N(x) / p_0(x) = H_N(x) / sqrt(2^N N!).
double oscillator_ratio(int n, double x) {
  double prev = 0.0;
  double cur = 1.0;
  for (int j = 0; j < n; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * x * cur -
                        std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// f^(N)(0) / N! from M samples on a circle of radius r (trapezoidal
// Cauchy integral).
Complex taylor_coefficient(const std::function<Complex(Complex)>& f, int n,
                           double r = 0.5, int samples = 48) {
  Complex sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    sum += f(std::polar(r, theta)) * std::polar(std::pow(r, -n), -n * theta);
  }
  return sum / static_cast<double>(samples);
}

double max_abs(const fock::OperatorMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    for (fock::OperatorMatrix::InnerIterator it(m, c); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

void run_modes(Suite& suite, const VerifyConfig& cfg) {
  const BeamGeometry geom(cfg.w0, cfg.k);
  const ModeBasis basis(geom, cfg.n_max);
  const QuadratureRule quad(cfg.quad_order);
  const double z0 = geom.rayleigh_length();

  {
    // Explicit polynomials for n <= 6.
    const std::function<double(double)> explicit_h[] = {
        [](double) { return 1.0; },
        [](double x) { return 2 * x; },
        [](double x) { return 4 * x * x - 2; },
        [](double x) { return 8 * x * x * x - 12 * x; },
        [](double x) { return 16 * std::pow(x, 4) - 48 * x * x + 12; },
        [](double x) { return 32 * std::pow(x, 5) - 160 * std::pow(x, 3) + 120 * x; },
        [](double x) {
          return 64 * std::pow(x, 6) - 480 * std::pow(x, 4) + 720 * x * x - 120;
        }};
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n) {
      for (double x = -3.0; x <= 3.0; x += 0.25) {
        const double e = explicit_h[n](x);
        worst = std::max(worst, std::abs(hermite_poly(n, x) - e) /
                                    std::max(1.0, std::abs(e)));
      }
    }
    suite.add("hermite_recurrence_vs_explicit", worst, 1e-12);
  }

  for (auto [label, z] : {std::pair{"0", 0.0}, std::pair{"0.5z0", 0.5 * z0},
                          std::pair{"2z0", 2.0 * z0}}) {
    const auto gram = gram_matrix(basis, z, quad);
    double worst = 0.0;
    for (std::size_t a = 0; a < gram.size(); ++a) {
      for (std::size_t b = 0; b < gram.size(); ++b) {
        worst = std::max(worst, std::abs(gram[a][b] - (a == b ? 1.0 : 0.0)));
      }
    }
    suite.add(std::string("gram_identity_z=") + label, worst, 1e-9);
  }

  {
    double worst = 0.0;
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const ModeIndex mu = basis.mode(i);
      for (int k = 0; k < 25; ++k) {
        const double x = u(rng) * geom.w0();
        const double y = u(rng) * geom.w0();
        const double z = u(rng) * z0;
        const Complex a = mode_2d(mu, x, -y, z, geom);
        const Complex b = (mu.m % 2 ? -1.0 : 1.0) * mode_2d(mu, x, y, z, geom);
        worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
      }
    }
    suite.add("reflection_parity", worst, 1e-12);
  }

  {
    const ModeIndex mu{1, 1};
    const double z = 0.3 * z0;
    const double xs = geom.x_scale(z);
    const double x = 0.37 * xs;
    const double y = -0.52 * xs;
    std::vector<double> errors;
    for (int level = 0; level < 4; ++level) {
      const double h = xs / (10.0 * std::pow(2.0, level));
      const double hz = z0 / (10.0 * std::pow(2.0, level));
      errors.push_back(
          std::abs(paraxial_residual(mu, x, y, z, geom, {h, h, hz})));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
      worst = std::max(worst, std::abs(std::log2(errors[i] / errors[i + 1]) - 2.0));
    }
    suite.add("paraxial_residual_order2", worst, 0.1);
  }

  {
    const BeamGeometry g = geom;
    const double shift = 0.2 * geom.x_scale(0.0);
    const SampledField displaced{g, [g, shift](double x, double y, double z) {
                                   return mode_2d({0, 0}, x - shift, y, z, g);
                                 }};
    const ModeBasis big(geom, std::max(cfg.n_max, 12));
    const QuadratureRule q2(std::max(cfg.quad_order, min_quadrature_order(big)));
    const ModeVector at0 = decompose(displaced, big, 0.0, q2);
    // The same physical beam propagated to z: synthesize from the waist
    // coefficients and decompose again.
    const ModeVector at_z = decompose(as_field(at0), big, 0.3 * z0, q2);
    double worst = 0.0;
    for (std::size_t i = 0; i < at0.size(); ++i) {
      worst = std::max(worst, std::abs(at0[i] - at_z[i]));
    }
    suite.add("coefficient_z_invariance", worst, 1e-8);
  }

  {
    std::mt19937 rng(cfg.seed + 1);
    const ModeVector v = random_complex(basis, rng, std::min(cfg.n_max, 4));
    const double quad_norm = quadrature_norm2(as_field(v), 0.5 * z0, quad);
    suite.add("parseval", std::abs(quad_norm - v.norm2()), 1e-8);
  }
}

void run_beamsplitter(Suite& suite, const VerifyConfig& cfg) {
  const BeamGeometry geom(cfg.w0, cfg.k);
  const ModeBasis basis(geom, cfg.n_max);
  const SplitterCoefficients& s = cfg.splitter;

  {
    double rejected = 0.0;
    try {
      const double t = std::sqrt(0.55);
      SplitterCoefficients bad(Complex(0.0, t), Complex(t, 0.0));
      (void)bad;
    } catch (const InvalidSplitter&) {
      rejected = 1.0;
    }
    suite.add("corrupted_splitter_rejected", 1.0 - rejected, 0.0);
  }

  {
    double worst = 0.0;
    for (double p : {1.0, -1.0}) {
      const Complex u[2][2] = {{s.tau(), s.rho() * p}, {s.rho() * p, s.tau()}};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          Complex dot = std::conj(u[0][a]) * u[0][b] + std::conj(u[1][a]) * u[1][b];
          worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
      }
    }
    suite.add("splitter_block_unitarity", worst, 1e-12);
  }

  {
    std::mt19937 rng(cfg.seed + 2);
    double norm_err = 0.0;
    double inverse_err = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const TwoPortModeVectors a{random_complex(basis, rng, cfg.n_max),
                                 2.0 * random_complex(basis, rng, cfg.n_max)};
      const auto b = operator_transform(a, s);
      norm_err = std::max(norm_err, std::abs(b.port1.norm2() + b.port2.norm2() -
                                             a.port1.norm2() - a.port2.norm2()));
      const auto back = inverse_transform(b, s);
      for (std::size_t i = 0; i < a.port1.size(); ++i) {
        inverse_err = std::max({inverse_err, std::abs(back.port1[i] - a.port1[i]),
                                std::abs(back.port2[i] - a.port2[i])});
      }
    }
    suite.add("transform_norm_preservation", norm_err, 1e-12);
    suite.add("transform_inverse_identity", inverse_err, 1e-12);
  }

  {
    std::mt19937 rng(cfg.seed + 3);
    const ModeVector v = random_complex(basis, rng, std::min(cfg.n_max, 4));
    const ModeVector r = reflect_mode_vector(v);
    double worst = 0.0;
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int k = 0; k < 20; ++k) {
      const double x = u(rng), y = u(rng), z = u(rng);
      worst = std::max(worst, std::abs(synthesize(r, x, y, z) -
                                       synthesize(v, x, -y, z)));
    }
    suite.add("reflection_matches_y_inversion", worst, 1e-12);
  }
}

void run_amplitudes(Suite& suite, const VerifyConfig& cfg) {
  const BeamGeometry geom(cfg.w0, cfg.k);
  const ModeBasis basis(geom, 4);
  const double omega = cfg.omega;
  std::mt19937 rng(cfg.seed + 4);
  std::uniform_real_distribution<double> time(0.0, 10.0);

  double table_err = 0.0;
  double gen_err = 0.0;
  double odd_err = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const FieldConfiguration cfg_psi(random_real(basis, rng, 4, 0.6), omega);
    const ModeVector phi = random_complex(basis, rng, 4);
    const double t = time(rng);
    const Complex w = waist_bracket(cfg_psi.psi(), phi);
    const Complex q = waist_bracket(phi, phi);
    const Complex e = std::polar(1.0, -omega * t);
    const Complex table[4] = {
        1.0, w * e, (w * w - q) * e * e / std::sqrt(2.0),
        w * (w * w - 3.0 * q) * e * e * e / std::sqrt(6.0)};
    for (int n = 0; n <= 3; ++n) {
      table_err = std::max(table_err,
                           std::abs(number_state_ratio(cfg_psi, phi, n, t) - table[n]));
    }
    auto generating = [&](Complex alpha) {
      return coherent_state_ratio(cfg_psi, phi, alpha, t) *
             std::exp(0.5 * std::norm(alpha));
    };
    for (int n = 0; n <= 5; ++n) {
      const Complex oracle = taylor_coefficient(generating, n) *
                             std::exp(0.5 * std::lgamma(n + 1.0));
      gen_err = std::max(gen_err,
                         std::abs(number_state_ratio(cfg_psi, phi, n, t) - oracle));
    }
  }
  suite.add("table1_closed_forms", table_err, 1e-10);
  suite.add("generating_function_oracle", gen_err, 1e-8);

  {
    // psi orthogonal to a real phi: all odd ratios vanish.
    const ModeVector phi =
        (std::sqrt(0.5) * ModeVector::unit(basis, {0, 0})) +
        (std::sqrt(0.5) * ModeVector::unit(basis, {2, 1}));
    ModeVector psi = (0.8 * ModeVector::unit(basis, {0, 0})) +
                     (-0.8 * ModeVector::unit(basis, {2, 1})) +
                     (1.3 * ModeVector::unit(basis, {1, 1}));
    const FieldConfiguration c(psi, omega);
    for (int n = 1; n <= 7; n += 2) {
      odd_err = std::max(odd_err, std::abs(number_state_ratio(c, phi, n, 0.7)));
    }
    suite.add("odd_ratios_vanish", odd_err, 1e-12);
  }

  {
    double worst = 0.0;
    const ModeVector phi = ModeVector::unit(basis, {1, 2});
    for (double c : {-2.0, -0.7, 0.0, 0.4, 1.9}) {
      const FieldConfiguration cc(c * ModeVector::unit(basis, {1, 2}), omega);
      for (int n = 0; n <= 8; ++n) {
        const double oracle = oscillator_ratio(n, c / std::sqrt(2.0));
        worst = std::max(worst, std::abs(number_state_ratio(cc, phi, n, 0.0) - oracle));
      }
    }
    suite.add("oscillator_wavefunction_oracle", worst, 1e-10);
  }

  {
    double worst = 0.0;
    const SplitterCoefficients s = SplitterCoefficients::balanced();
    for (int trial = 0; trial < 10; ++trial) {
      const TwoPortFieldConfiguration c(
          FieldConfiguration(random_real(basis, rng, 3, 0.5), omega),
          FieldConfiguration(random_real(basis, rng, 3, 0.5), omega));
      const ModeVector phi = random_complex(basis, rng, 3);
      const Complex alpha(0.8, -0.3);
      const double t = time(rng);
      const Complex lhs = two_port_coherent_ratio(c, phi, alpha, s, t);
      const Complex rhs =
          std::exp(-0.5 * std::norm(alpha) +
                   alpha * two_port_single_photon_ratio(c, phi, s, t));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    suite.add("balanced_coherent_exp_identity", worst, 1e-12);
  }

  {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const TwoPortFieldConfiguration c(
          FieldConfiguration(random_real(basis, rng, 3, 0.7), omega),
          FieldConfiguration(random_real(basis, rng, 3, 0.7), omega));
      ModeVector phi1 = random_real(basis, rng, 2, 1.0).normalized();
      ModeVector phi2 = random_real(basis, rng, 2, 1.0).normalized();
      for (int n1 = 0; n1 <= 3; ++n1) {
        for (int n2 = 0; n2 <= 3; ++n2) {
          const double lhs = detection_probability_ratio(n1, n2, c, phi1, phi2);
          const double rhs = std::norm(number_state_ratio(c.port1(), phi1, n1, 0.3)) *
                             std::norm(number_state_ratio(c.port2(), phi2, n2, 0.3));
          worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
      }
    }
    suite.add("detection_ratio_vs_number_ratio", worst, 1e-10);
  }

  {
    // Detection ratio at the Hermite roots: x = 0 for N = 1, x = 1/sqrt2 for
    // N = 2, with x = sqrt(omega) (Psi, phi) = (psi, phi) / sqrt2.
    const ModeVector phi1 = ModeVector::unit(basis, {1, 0});
    const ModeVector phi2 = ModeVector::unit(basis, {0, 2});
    double worst = 0.0;
    for (auto [n, x] : {std::pair{1, 0.0}, std::pair{2, std::sqrt(0.5)},
                        std::pair{2, -std::sqrt(0.5)}}) {
      const TwoPortFieldConfiguration c(
          FieldConfiguration(std::sqrt(2.0) * x * phi1 +
                                 0.4 * ModeVector::unit(basis, {0, 0}),
                             omega),
          FieldConfiguration(0.9 * phi2, omega));
      worst = std::max(worst, detection_probability_ratio(n, 1, c, phi1, phi2));
      worst = std::max(worst, detection_probability_ratio(
                                  1, n,
                                  TwoPortFieldConfiguration(c.port2(), c.port1()),
                                  phi2, phi1));
    }
    suite.add("detection_ratio_hermite_roots", worst, 1e-20);
  }
}

void run_oracle(Suite& suite, const VerifyConfig& cfg) {
  using namespace fock;
  const BeamGeometry geom(cfg.w0, cfg.k);
  const ModeBasis basis(geom, std::max(cfg.n_max, 1));
  const SplitterCoefficients& s = cfg.splitter;
  const int cutoff = cfg.fock_cutoff;
  std::mt19937 rng(cfg.seed + 5);

  const std::vector<ModeIndex> spatial = {{0, 0}, {0, 1}};
  const FockSpace space = FockSpace::two_port(spatial, cutoff, cfg.fock_dim_cap);
  const auto ladders = ladder_matrices(space);
  const auto dim = static_cast<Eigen::Index>(space.dim());
  OperatorMatrix identity(dim, dim);
  identity.setIdentity();

  {
    double worst = 0.0;
    for (std::size_t j = 0; j < ladders.size(); ++j) {
      for (std::size_t k = 0; k < ladders.size(); ++k) {
        const OperatorMatrix comm = ladders[j].a * ladders[k].a_dag -
                                    ladders[k].a_dag * ladders[j].a;
        const OperatorMatrix expected =
            j == k ? identity : OperatorMatrix(dim, dim);
        worst = std::max(worst, max_interior_deviation(space, comm, expected));
        worst = std::max(worst, max_abs(OperatorMatrix(ladders[j].a * ladders[k].a -
                                                       ladders[k].a * ladders[j].a)));
      }
    }
    suite.add("ladder_commutators", worst, 1e-14);
  }

  const OperatorMatrix S = bs_unitary(space, s);
  const OperatorMatrix S_dag = adjoint(S);
  std::vector<OperatorMatrix> b(ladders.size());
  {
    double worst = 0.0;
    for (std::size_t j = 0; j < ladders.size(); ++j) {
      b[j] = S_dag * ladders[j].a * S;
      const std::size_t p = *space.partner(j);
      const double parity = reflection_parity(space.modes()[j].mu);
      const OperatorMatrix expected =
          s.tau() * ladders[j].a + (s.rho() * parity) * ladders[p].a;
      worst = std::max(worst, max_interior_deviation(space, b[j], expected));
    }
    suite.add("splitter_conjugation_matches_transform", worst, 1e-10);
  }

  {
    double worst = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        const OperatorMatrix b_dag = adjoint(b[k]);
        const OperatorMatrix comm = b[j] * b_dag - b_dag * b[j];
        worst = std::max(worst, max_interior_deviation(
                                    space, comm,
                                    j == k ? identity : OperatorMatrix(dim, dim)));
      }
    }
    suite.add("output_commutators", worst, 1e-10);
  }

  {
    ModeVector phi(basis);
    phi[ModeIndex{0, 0}] = Complex(0.6, 0.2);
    phi[ModeIndex{0, 1}] = Complex(-0.3, 0.5);
    phi = phi.normalized();
    const FockStateVector in = number_state(space, phi, 1, 1);
    const FockStateVector out = S * in;
    const FockStateVector expected =
        s.tau() * number_state(space, phi, 1, 1) +
        s.rho() * number_state(space, reflect_mode_vector(phi), 2, 1);
    suite.add("single_photon_conversion",
              std::abs(1.0 - std::abs(expected.dot(out))), 1e-10);

    const Eigen::VectorXcd psi_in = Eigen::VectorXcd::Random(dim).normalized();
    const OperatorMatrix n_op = number_operator(space) * Complex(cfg.omega, 0.0);
    const Eigen::VectorXcd psi_out = S * psi_in;
    suite.add("energy_conservation",
              std::abs(psi_in.dot(n_op * psi_in) - psi_out.dot(n_op * psi_out)),
              1e-10);

    double corr = 0.0;
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int k = 0; k < 10; ++k) {
      const double x1 = u(rng), y1 = u(rng), x2 = u(rng), y2 = u(rng);
      const double t = u(rng);
      const OperatorMatrix f1 = field_operator_matrix(space, ladders, geom, 1, x1,
                                                      y1, 0.0, t, cfg.omega);
      const OperatorMatrix f2 = field_operator_matrix(space, ladders, geom, 2, x2,
                                                      y2, 0.0, t, cfg.omega);
      const Complex oracle = out.dot(f1 * (f2 * out));
      const Complex analytic = two_point_correlation_complex(
          phi, {x1, y1, 0.0}, {x2, y2, 0.0}, s, cfg.omega);
      corr = std::max(corr, std::abs(oracle - analytic));
    }
    suite.add("two_point_correlation_oracle", corr, 1e-9);

    if (s.is_balanced()) {
      ModeVector real_phi(basis);
      real_phi[ModeIndex{0, 0}] = 0.6;
      real_phi[ModeIndex{0, 1}] = -0.8;
      double zero = 0.0;
      for (int k = 0; k < 10; ++k) {
        zero = std::max(zero, std::abs(two_point_correlation(
                                  real_phi, {u(rng), u(rng), 0.0},
                                  {u(rng), u(rng), 0.0}, s, cfg.omega)));
      }
      suite.add("two_point_correlation_real_mode_zero", zero, 1e-12);
    }

    const ModeVector phi1 = ModeVector::unit(basis, {0, 0});
    ModeVector phi2(basis);
    phi2[ModeIndex{0, 0}] = std::sqrt(0.5);
    phi2[ModeIndex{0, 1}] = Complex(0.0, std::sqrt(0.5));
    const Ladder l1 = projected_ladder(space, ladders, phi1, 1);
    const Ladder l2 = projected_ladder(space, ladders, phi2, 2);
    const OperatorMatrix n1n2 = l1.a_dag * l1.a * l2.a_dag * l2.a;
    const Complex oracle_nn = out.dot(n1n2 * out);
    const double analytic_nn = photon_number_correlation(phi, phi1, phi2, s);
    suite.add("photon_number_correlation_zero",
              std::max(std::abs(oracle_nn), std::abs(analytic_nn)), 1e-12);

    const OperatorMatrix field = field_operator_matrix(space, ladders, geom, 1,
                                                       0.3, -0.2, 0.0, 0.4,
                                                       cfg.omega);
    suite.add("field_operator_hermitian",
              max_abs(OperatorMatrix(field - adjoint(field))), 1e-14);
    const Complex wf = space.vacuum().dot(field * in);
    suite.add("single_photon_wavefunction_oracle",
              std::abs(wf - single_photon_wavefunction(phi, 0.3, -0.2, 0.0, 0.4,
                                                       cfg.omega)),
              1e-10);
  }

  {
    // Overlap law on a one-port, two-mode space.
    const FockSpace one_port({{1, {0, 0}}, {1, {1, 0}}}, 3, cfg.fock_dim_cap);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      ModeVector f(basis), g(basis);
      std::normal_distribution<double> gn(0.0, 1.0);
      for (ModeIndex mu : {ModeIndex{0, 0}, ModeIndex{1, 0}}) {
        f[mu] = {gn(rng), gn(rng)};
        g[mu] = {gn(rng), gn(rng)};
      }
      f = f.normalized();
      g = g.normalized();
      const Complex overlap = inner_product(f, g);
      for (int n = 0; n <= 3; ++n) {
        for (int np = 0; np <= 3; ++np) {
          const Complex lhs =
              number_state(one_port, f, 1, n).dot(number_state(one_port, g, 1, np));
          const Complex rhs = n == np ? std::pow(overlap, n) : Complex(0.0);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
    suite.add("number_state_overlap_law", worst, 1e-9);
  }

  {
    // Coherent conversion on one spatial mode of odd parity.
    const FockSpace pair = FockSpace::two_port({{0, 1}}, 8, cfg.fock_dim_cap);
    const ModeVector phi = ModeVector::unit(basis, {0, 1});
    const Complex alpha = 0.3;
    const FockStateVector in = coherent_state(pair, phi, 1, alpha);
    const FockStateVector out = bs_unitary(pair, s) * in;
    const FockStateVector expected = coherent_product_state(
        pair, {{phi, 1, s.tau() * alpha},
               {reflect_mode_vector(phi), 2, s.rho() * alpha}});
    suite.add("coherent_conversion",
              std::abs(1.0 - std::abs(expected.dot(out))), 1e-8);
  }

  {
    const double omega = cfg.omega;
    const OperatorMatrix u1 = time_evolution(space, omega, 0.7);
    const OperatorMatrix u2 = time_evolution(space, omega, -1.9);
    const OperatorMatrix u12 = time_evolution(space, omega, 0.7 - 1.9);
    double worst = max_abs(OperatorMatrix(u1 * u2 - u12));
    worst = std::max(worst, max_abs(OperatorMatrix(time_evolution(space, omega, 0.0) - identity)));
    for (std::size_t j = 0; j < ladders.size(); ++j) {
      const OperatorMatrix heis = adjoint(u1) * ladders[j].a * u1;
      worst = std::max(worst, max_abs(OperatorMatrix(
                                  heis - std::polar(1.0, -omega * 0.7) * ladders[j].a)));
    }
    suite.add("time_evolution", worst, 1e-12);

    ModeVector phi(basis);
    phi[ModeIndex{0, 0}] = Complex(0.8, 0.0);
    phi[ModeIndex{0, 1}] = Complex(0.0, 0.6);
    const Ladder lp = projected_ladder(space, ladders, phi, 1);
    const double t1 = 0.4, t2 = 1.3;
    const OperatorMatrix a_t1 =
        adjoint(time_evolution(space, omega, t1)) * lp.a * time_evolution(space, omega, t1);
    const OperatorMatrix ad_t2 = adjoint(time_evolution(space, omega, t2)) * lp.a_dag *
                                 time_evolution(space, omega, t2);
    const OperatorMatrix comm = a_t1 * ad_t2 - ad_t2 * a_t1;
    const OperatorMatrix expected = std::polar(1.0, -omega * (t1 - t2)) * identity;
    suite.add("two_time_commutator_phase",
              max_interior_deviation(space, comm, expected), 1e-12);
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite_name,
                                   const VerifyConfig& config) {
  Suite suite;
  const bool all = suite_name == "all";
  if (!all && suite_name != "modes" && suite_name != "beamsplitter" &&
      suite_name != "amplitudes" && suite_name != "oracle") {
    throw InvalidArgument("unknown verification suite '" + suite_name +
                          "' (expected modes, beamsplitter, amplitudes, "
                          "oracle or all)");
  }
  if (all || suite_name == "modes") run_modes(suite, config);
  if (all || suite_name == "beamsplitter") run_beamsplitter(suite, config);
  if (all || suite_name == "amplitudes") run_amplitudes(suite, config);
  if (all || suite_name == "oracle") run_oracle(suite, config);
  return std::move(suite.results());
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::string report_json(const std::string& suite,
                        const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    checks.push_back({{"check_name", r.name},
                      {"max_error", r.max_error},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
  }
  const nlohmann::json doc = {
      {"suite", suite}, {"pass", all_passed(results)}, {"checks", checks}};
  return doc.dump(2) + "\n";
}

}  // namespace qfield
