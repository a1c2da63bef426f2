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

#ifndef QFIELD_FOCK_ORACLE_HPP_
#define QFIELD_FOCK_ORACLE_HPP_

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <optional>
#include <vector>

#include "qfield/beamsplitter.hpp"
#include "qfield/geometry.hpp"
#include "qfield/mode_space.hpp"

// Brute-force truncated Fock-space realization of the mode algebra. Every
// operator is an explicit matrix; nothing here reuses the closed-form
// formulas from amplitudes.hpp or observables.hpp, so the two can check
// each other.
namespace qfield::fock {

using OperatorMatrix = Eigen::SparseMatrix<Complex>;
using FockStateVector = Eigen::VectorXcd;

inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// One bosonic mode of the oracle: a spatial mode mu on port 1 or 2.
struct FockMode {
  int port = 1;
  ModeIndex mu;

  friend bool operator==(const FockMode&, const FockMode&) = default;
};

/// (C+1)^M-dimensional space of M modes with at most C photons each.
/// Basis states are ordered lexicographically by occupation numbers, the
/// first listed mode being most significant.
class FockSpace {
 public:
  /// Throws InvalidArgument for an empty mode list, duplicate modes, or
  /// cutoff < 1, and DimensionCapExceeded when (C+1)^M > dim_cap.
  FockSpace(std::vector<FockMode> modes, int cutoff,
            std::size_t dim_cap = kDefaultDimensionCap);

  /// Port-1 and port-2 copies of each spatial mode, in the order given.
  static FockSpace two_port(const std::vector<ModeIndex>& spatial, int cutoff,
                            std::size_t dim_cap = kDefaultDimensionCap);

  const std::vector<FockMode>& modes() const { return modes_; }
  std::size_t num_modes() const { return modes_.size(); }
  int cutoff() const { return cutoff_; }
  std::size_t dim() const { return dim_; }

  std::vector<int> occupations(std::size_t index) const;
  std::size_t index(const std::vector<int>& occupations) const;
  std::optional<std::size_t> find(int port, ModeIndex mu) const;
  /// Index of the mode on the other port with the same mu, if any.
  std::optional<std::size_t> partner(std::size_t mode) const;

  /// True when every port-1/port-2 pair holds at most C-1 photons in total
  /// and every unpaired mode at most C-1. On these states truncated ladder
  /// algebra and the lifted splitter act exactly.
  bool is_interior(std::size_t index) const;

  FockStateVector vacuum() const;

 private:
  std::vector<FockMode> modes_;
  int cutoff_;
  std::size_t dim_;
};

struct Ladder {
  OperatorMatrix a;
  OperatorMatrix a_dag;
};

/// Truncated a_j, a_j^dagger for every mode of the space.
std::vector<Ladder> ladder_matrices(const FockSpace& space);

/// a[phi] = sum_mu conj(phi_mu) a_{port,mu} and its adjoint. Throws
/// TruncationError if phi has weight (|c| > 1e-12) on a mode the space
/// lacks.
Ladder projected_ladder(const FockSpace& space,
                        const std::vector<Ladder>& ladders,
                        const ModeVector& phi, int port);
Ladder projected_ladder(const FockSpace& space, const ModeVector& phi,
                        int port);

/// Total photon number operator (diagonal).
OperatorMatrix number_operator(const FockSpace& space);

/// (a^dagger[phi])^N |0> / sqrt(N!). Throws TruncationError for N > C.
FockStateVector number_state(const FockSpace& space, const ModeVector& phi,
                             int port, int n);

/// e^{-|alpha|^2/2} sum_{N <= C} alpha^N / sqrt(N!) |N[phi]>. Throws
/// TruncationError outside the policy |alpha| <= 0.5, C >= 6.
FockStateVector coherent_state(const FockSpace& space, const ModeVector& phi,
                               int port, Complex alpha);

struct CoherentComponent {
  ModeVector phi;
  int port;
  Complex alpha;
};

/// Product of coherent states on distinct ports, each expanded to C
/// photons. Same policy as coherent_state().
FockStateVector coherent_product_state(
    const FockSpace& space, const std::vector<CoherentComponent>& parts);

/// Second-quantized splitter: S = exp(i sum_mu sum_jk (K_mu)_jk a_j^+ a_k),
/// where i K_mu is the principal logarithm of the single-particle block
/// [[tau, rho (-1)^m], [rho (-1)^m, tau]]. Generators of different mu
/// commute, so S is assembled as a product of exact two-mode exponentials.
/// Throws InvalidArgument if some mode lacks its other-port partner and
/// std::logic_error if S^dagger S deviates from I by more than 1e-10.
OperatorMatrix bs_unitary(const FockSpace& space,
                          const SplitterCoefficients& s);

/// The 2x2 generator K with exp(i K) = [[tau, rho p], [rho p, tau]].
Eigen::Matrix2cd splitter_generator(const SplitterCoefficients& s,
                                    double parity);

/// U(t) = exp(-i omega N t), diagonal.
OperatorMatrix time_evolution(const FockSpace& space, double omega, double t);

/// Psi_hat(r, t) = (2 omega)^{-1/2} (A + A^dagger) on one port, with
/// A = e^{-i omega t} sum_mu a_{port,mu} u_mu(r).
OperatorMatrix field_operator_matrix(const FockSpace& space,
                                     const std::vector<Ladder>& ladders,
                                     const BeamGeometry& geom, int port,
                                     double x, double y, double z, double t,
                                     double omega);

/// max |(lhs - rhs) e_j| over interior basis states j (all rows).
double max_interior_deviation(const FockSpace& space,
                              const OperatorMatrix& lhs,
                              const OperatorMatrix& rhs);

/// Conjugate transpose.
OperatorMatrix adjoint(const OperatorMatrix& m);

}  // namespace qfield::fock

#endif  // QFIELD_FOCK_ORACLE_HPP_
