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

#include "qfield/fock_oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qfield/error.hpp"

namespace qfield::fock {
namespace {

using Triplet = Eigen::Triplet<Complex>;

// Entries of dense exponentials below this are roundoff from sectors the
// exact operator never couples.
constexpr double kDropTolerance = 1e-15;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

FockSpace::FockSpace(std::vector<FockMode> modes, int cutoff,
                     std::size_t dim_cap)
    : modes_(std::move(modes)), cutoff_(cutoff), dim_(1) {
  if (modes_.empty()) throw InvalidArgument("Fock space needs at least one mode");
  if (cutoff < 1) throw InvalidArgument("Fock cutoff must be >= 1");
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i].port != 1 && modes_[i].port != 2) {
      throw InvalidArgument("mode port must be 1 or 2");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (modes_[i] == modes_[j]) throw InvalidArgument("duplicate Fock mode");
    }
  }
  const auto base = static_cast<std::size_t>(cutoff) + 1;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (dim_ > dim_cap / base) {
      throw DimensionCapExceeded(
          "Fock space of " + std::to_string(modes_.size()) +
          " modes at cutoff " + std::to_string(cutoff) +
          " exceeds the dimension cap " + std::to_string(dim_cap));
    }
    dim_ *= base;
  }
}

FockSpace FockSpace::two_port(const std::vector<ModeIndex>& spatial,
                              int cutoff, std::size_t dim_cap) {
  std::vector<FockMode> modes;
  for (int port : {1, 2}) {
    for (const ModeIndex& mu : spatial) modes.push_back({port, mu});
  }
  return FockSpace(std::move(modes), cutoff, dim_cap);
}

std::vector<int> FockSpace::occupations(std::size_t index) const {
  const auto base = static_cast<std::size_t>(cutoff_) + 1;
  std::vector<int> occ(modes_.size());
  for (std::size_t j = modes_.size(); j-- > 0;) {
    occ[j] = static_cast<int>(index % base);
    index /= base;
  }
  return occ;
}

std::size_t FockSpace::index(const std::vector<int>& occupations) const {
  const auto base = static_cast<std::size_t>(cutoff_) + 1;
  std::size_t idx = 0;
  for (int n : occupations) idx = idx * base + static_cast<std::size_t>(n);
  return idx;
}

std::optional<std::size_t> FockSpace::find(int port, ModeIndex mu) const {
  for (std::size_t j = 0; j < modes_.size(); ++j) {
    if (modes_[j].port == port && modes_[j].mu == mu) return j;
  }
  return std::nullopt;
}

std::optional<std::size_t> FockSpace::partner(std::size_t mode) const {
  const FockMode& m = modes_.at(mode);
  return find(m.port == 1 ? 2 : 1, m.mu);
}

bool FockSpace::is_interior(std::size_t index) const {
  const auto occ = occupations(index);
  for (std::size_t j = 0; j < modes_.size(); ++j) {
    const auto p = partner(j);
    const int load = p ? occ[j] + occ[*p] : occ[j];
    if (load > cutoff_ - 1) return false;
  }
  return true;
}

FockStateVector FockSpace::vacuum() const {
  FockStateVector v = FockStateVector::Zero(static_cast<Eigen::Index>(dim_));
  v(0) = 1.0;
  return v;
}

OperatorMatrix adjoint(const OperatorMatrix& m) {
  return OperatorMatrix(m.adjoint());
}

std::vector<Ladder> ladder_matrices(const FockSpace& space) {
  const auto dim = static_cast<Eigen::Index>(space.dim());
  const auto base = static_cast<std::size_t>(space.cutoff()) + 1;
  const std::size_t modes = space.num_modes();
  std::vector<Ladder> out;
  out.reserve(modes);
  for (std::size_t j = 0; j < modes; ++j) {
    const std::size_t stride = ipow(base, modes - 1 - j);
    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
      const auto n = static_cast<int>((idx / stride) % base);
      if (n == 0) continue;
      entries.emplace_back(static_cast<Eigen::Index>(idx - stride),
                           static_cast<Eigen::Index>(idx),
                           Complex(std::sqrt(static_cast<double>(n)), 0.0));
    }
    OperatorMatrix a(dim, dim);
    a.setFromTriplets(entries.begin(), entries.end());
    out.push_back({a, adjoint(a)});
  }
  return out;
}

Ladder projected_ladder(const FockSpace& space,
                        const std::vector<Ladder>& ladders,
                        const ModeVector& phi, int port) {
  const auto dim = static_cast<Eigen::Index>(space.dim());
  OperatorMatrix a(dim, dim);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Complex c = phi[i];
    if (std::abs(c) <= 1e-12) continue;
    const ModeIndex mu = phi.basis().mode(i);
    const auto j = space.find(port, mu);
    if (!j) {
      throw TruncationError("mode (" + std::to_string(mu.n) + ", " +
                            std::to_string(mu.m) + ") on port " +
                            std::to_string(port) +
                            " carries weight but is not in the Fock space");
    }
    a += std::conj(c) * ladders[*j].a;
  }
  return {a, adjoint(a)};
}

Ladder projected_ladder(const FockSpace& space, const ModeVector& phi,
                        int port) {
  return projected_ladder(space, ladder_matrices(space), phi, port);
}

OperatorMatrix number_operator(const FockSpace& space) {
  const auto dim = static_cast<Eigen::Index>(space.dim());
  std::vector<Triplet> entries;
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    int total = 0;
    for (int n : space.occupations(idx)) total += n;
    if (total != 0) {
      entries.emplace_back(static_cast<Eigen::Index>(idx),
                           static_cast<Eigen::Index>(idx),
                           Complex(total, 0.0));
    }
  }
  OperatorMatrix n(dim, dim);
  n.setFromTriplets(entries.begin(), entries.end());
  return n;
}

FockStateVector number_state(const FockSpace& space, const ModeVector& phi,
                             int port, int n) {
  if (n < 0) throw InvalidArgument("photon number must be >= 0");
  if (n > space.cutoff()) {
    throw TruncationError("number state with " + std::to_string(n) +
                          " photons does not fit cutoff " +
                          std::to_string(space.cutoff()));
  }
  const Ladder op = projected_ladder(space, phi, port);
  FockStateVector v = space.vacuum();
  for (int k = 1; k <= n; ++k) v = (op.a_dag * v) / std::sqrt(double(k));
  return v;
}

namespace {

// e^{-|alpha|^2/2} sum_{N<=C} alpha^N / N! (a^dagger)^N applied to state.
FockStateVector excite_coherent(const FockSpace& space,
                                const OperatorMatrix& a_dag, Complex alpha,
                                const FockStateVector& state) {
  FockStateVector term = state;
  FockStateVector total = state;
  for (int k = 1; k <= space.cutoff(); ++k) {
    term = (alpha / double(k)) * (a_dag * term);
    total += term;
  }
  return std::exp(-0.5 * std::norm(alpha)) * total;
}

void check_coherent_policy(const FockSpace& space, Complex alpha) {
  if (std::abs(alpha) > 0.5 || space.cutoff() < 6) {
    throw TruncationError(
        "coherent states need |alpha| <= 0.5 and cutoff >= 6 to keep the "
        "truncation error below 1e-8");
  }
}

}  // namespace

FockStateVector coherent_state(const FockSpace& space, const ModeVector& phi,
                               int port, Complex alpha) {
  check_coherent_policy(space, alpha);
  const Ladder op = projected_ladder(space, phi, port);
  return excite_coherent(space, op.a_dag, alpha, space.vacuum());
}

FockStateVector coherent_product_state(
    const FockSpace& space, const std::vector<CoherentComponent>& parts) {
  const auto ladders = ladder_matrices(space);
  FockStateVector v = space.vacuum();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (parts[i].port == parts[j].port) {
        throw InvalidArgument("coherent components must sit on distinct ports");
      }
    }
    check_coherent_policy(space, parts[i].alpha);
    const Ladder op =
        projected_ladder(space, ladders, parts[i].phi, parts[i].port);
    v = excite_coherent(space, op.a_dag, parts[i].alpha, v);
  }
  return v;
}

Eigen::Matrix2cd splitter_generator(const SplitterCoefficients& s,
                                    double parity) {
  Eigen::Matrix2cd u;
  u << s.tau(), s.rho() * parity, s.rho() * parity, s.tau();
  const Eigen::Matrix2cd log_u = u.log();
  Eigen::Matrix2cd k = Complex(0.0, -1.0) * log_u;
  return 0.5 * (k + k.adjoint());
}

namespace {

// Places a dense operator on the (C+1)^2 space of modes (first, second)
// into the full space, identity elsewhere.
OperatorMatrix embed_two_mode(const FockSpace& space, std::size_t first,
                              std::size_t second,
                              const Eigen::MatrixXcd& local) {
  const auto base = static_cast<std::size_t>(space.cutoff()) + 1;
  std::vector<Triplet> entries;
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    auto occ = space.occupations(idx);
    const auto col = static_cast<Eigen::Index>(occ[first] * base + occ[second]);
    for (Eigen::Index row = 0; row < local.rows(); ++row) {
      const Complex v = local(row, col);
      if (std::abs(v) <= kDropTolerance) continue;
      occ[first] = static_cast<int>(row / static_cast<Eigen::Index>(base));
      occ[second] = static_cast<int>(row % static_cast<Eigen::Index>(base));
      entries.emplace_back(static_cast<Eigen::Index>(space.index(occ)),
                           static_cast<Eigen::Index>(idx), v);
    }
  }
  const auto dim = static_cast<Eigen::Index>(space.dim());
  OperatorMatrix out(dim, dim);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

}  // namespace

OperatorMatrix bs_unitary(const FockSpace& space,
                          const SplitterCoefficients& s) {
  const FockSpace pair_space({{1, ModeIndex{}}, {2, ModeIndex{}}},
                             space.cutoff());
  const auto pair_ladders = ladder_matrices(pair_space);

  const auto dim = static_cast<Eigen::Index>(space.dim());
  OperatorMatrix total(dim, dim);
  total.setIdentity();
  for (std::size_t j = 0; j < space.num_modes(); ++j) {
    const auto p = space.partner(j);
    if (!p) {
      const ModeIndex mu = space.modes()[j].mu;
      throw InvalidArgument("mode (" + std::to_string(mu.n) + ", " +
                            std::to_string(mu.m) +
                            ") has no partner on the other port");
    }
    if (space.modes()[j].port != 1) continue;
    const Eigen::Matrix2cd k =
        splitter_generator(s, reflection_parity(space.modes()[j].mu));
    OperatorMatrix generator(pair_space.dim(), pair_space.dim());
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        generator += k(r, c) * (pair_ladders[r].a_dag * pair_ladders[c].a);
      }
    }
    const Eigen::MatrixXcd local =
        (Complex(0.0, 1.0) * Eigen::MatrixXcd(generator)).exp();
    total = embed_two_mode(space, j, *p, local) * total;
  }

  OperatorMatrix identity(dim, dim);
  identity.setIdentity();
  const OperatorMatrix defect = adjoint(total) * total - identity;
  double worst = 0.0;
  for (Eigen::Index c = 0; c < defect.outerSize(); ++c) {
    for (OperatorMatrix::InnerIterator it(defect, c); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  if (worst > 1e-10) {
    throw std::logic_error("lifted splitter is not unitary: max |S^+S - I| = " +
                           std::to_string(worst));
  }
  return total;
}

OperatorMatrix time_evolution(const FockSpace& space, double omega, double t) {
  const auto dim = static_cast<Eigen::Index>(space.dim());
  std::vector<Triplet> entries;
  entries.reserve(space.dim());
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    int total = 0;
    for (int n : space.occupations(idx)) total += n;
    entries.emplace_back(static_cast<Eigen::Index>(idx),
                         static_cast<Eigen::Index>(idx),
                         std::polar(1.0, -omega * total * t));
  }
  OperatorMatrix u(dim, dim);
  u.setFromTriplets(entries.begin(), entries.end());
  return u;
}

OperatorMatrix field_operator_matrix(const FockSpace& space,
                                     const std::vector<Ladder>& ladders,
                                     const BeamGeometry& geom, int port,
                                     double x, double y, double z, double t,
                                     double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("omega must be > 0");
  const auto dim = static_cast<Eigen::Index>(space.dim());
  OperatorMatrix a_field(dim, dim);
  const Complex phase = std::polar(1.0, -omega * t);
  for (std::size_t j = 0; j < space.num_modes(); ++j) {
    if (space.modes()[j].port != port) continue;
    a_field += (phase * mode_2d(space.modes()[j].mu, x, y, z, geom)) *
               ladders[j].a;
  }
  const OperatorMatrix field = a_field + adjoint(a_field);
  return field * Complex(1.0 / std::sqrt(2.0 * omega), 0.0);
}

double max_interior_deviation(const FockSpace& space,
                              const OperatorMatrix& lhs,
                              const OperatorMatrix& rhs) {
  const OperatorMatrix diff = lhs - rhs;
  double worst = 0.0;
  for (Eigen::Index c = 0; c < diff.outerSize(); ++c) {
    if (!space.is_interior(static_cast<std::size_t>(c))) continue;
    for (OperatorMatrix::InnerIterator it(diff, c); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

}  // namespace qfield::fock
