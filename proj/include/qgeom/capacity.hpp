// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qgeom/core.hpp"
#include "qgeom/qstate.hpp"
#include "qgeom/su_basis.hpp"

namespace qgeom {

enum class SystemKind { two_qubit, two_qutrit, three_qubit };

/// Canonical coupling strengths. For three qubits mu holds the blocks
/// AB, BC, AC in that order (9 values).
struct CouplingSpec {
  SystemKind kind = SystemKind::two_qubit;
  std::vector<double> mu;

  static CouplingSpec two_qubit(double mu1, double mu2, double mu3);
  static CouplingSpec two_qutrit(const std::vector<double>& mu);
  static CouplingSpec three_qubit(const std::array<double, 3>& ab, const std::array<double, 3>& bc,
                                  const std::array<double, 3>& ac);
  static CouplingSpec isotropic(SystemKind kind, double mu);

  // Throws InvalidInput if the size or ordering constraints fail.
  void validate() const;
  Dims dims() const;
};

// Gamma for a pure two-qubit state.
double rate_two_qubit(const BlochDecomposition& bd, const RVec& mu);

// sqrt(p)|01> + i sqrt(1-p)|10>
PureState psi_E(double p);

// Gamma(psi_E(p)) / (mu1 + mu2)
double f_rate(double p);
// f(p) rescaled to the von Neumann entropy rate.
double f_vn(double p);
// d||T||/dp and dE_vN/dp along psi_E(p).
double dE_dp(double p);
double dEvn_dp(double p);

struct P0Result {
  double p0 = 0.0;
  double gamma_max = 0.0;  // per unit mu1 + mu2
};
P0Result find_p0();

/// Two-qutrit Gamma from the full structure-constant sum.
double rate_qutrit(const BlochDecomposition& bd, const RVec& mu, const StructureConstants& sc);

struct Triplet {
  std::array<int, 3> s;  // zero-based generator indices
  double alpha;
};
// A fixed reference triplet list with its weights.
std::vector<Triplet> reference_triplets();
// Triplets i<j<k with f_ijk != 0, weighted by f_ijk.
std::vector<Triplet> structure_triplets(const StructureConstants& sc);
double rate_qutrit_triplet(const BlochDecomposition& bd, const RVec& mu, const std::vector<Triplet>& table);

double rate_three_qubit(const BlochDecomposition& bd, const CouplingSpec& coupling);

// Gamma by the analytic formula matching coupling.kind.
double rate(const PureState& psi, const CouplingSpec& coupling);

CMat coupling_hamiltonian(const CouplingSpec& coupling);

// Exponential of -i H t for Hermitian H.
CMat evolution_operator(const CMat& H, double t);

/// [E(e^{-iH dt} psi) - E(e^{iH dt} psi)] / (2 dt)
double rate_finite_difference(const PureState& psi, const CMat& H, const PartitionSpec& part, double dt = 1e-5);

struct OptimizationReport {
  SystemKind kind = SystemKind::two_qubit;
  double best_value = 0.0;
  PureState best_state;
  int restarts = 0;
  std::vector<double> values;
  std::uint64_t seed = 0;
  int iterations = 0;
  int converged_restarts = 0;
  bool converged = false;  // a restart meeting the gradient tolerance reached best_value

  // Filled for isotropic couplings.
  bool isotropic = false;
  double entanglement = 0.0;
  RVec schmidt;         // bipartite kinds
  double tangle = 0.0;  // three qubits
  RVec local_purities;  // Tr(rho_k^2) for each party
};

OptimizationReport maximize_rate(const CouplingSpec& coupling, int restarts, std::uint64_t seed);

// Amplitudes from the sphere chart (re_0..re_{D-1}, im_1..im_{D-1}).
CVec chart_to_amplitudes(const RVec& x);

}  // namespace qgeom
