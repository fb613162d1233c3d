// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qgeom/core.hpp"
#include "qgeom/qstate.hpp"

namespace qgeom {

// Geometric discord with the measurement on the first subsystem (A, dim m).

// 1/4 (|x|^2 + |T|^2 - lambda_max(x x^T + T T^T)), bare Pauli averages.
double geometric_discord_2q(const DensityMatrix& rho);

struct DiscordReport {
  double D_formula = 0.0;
  double D_lower_bound = 0.0;
  std::optional<double> D_bruteforce;
  RVec G_eigenvalues;  // ascending
  RMat G;
  std::vector<int> chosen_eigen_indices;  // one-based (l+1)^2 - 1, l = 1..m-1
};

/// D = 2/(m^2 n) [|x|^2 + (2/n)|T|^2 - sum_l eta_{(l+1)^2-1}], eta ascending
/// eigenvalues of G = x x^T + (2/n) T T^T.
DiscordReport geometric_discord_mn(const DensityMatrix& rho);

// C_ij = Tr(rho X_i x Y_j) over {I/sqrt m, l/sqrt 2} x {I/sqrt n, l/sqrt 2}.
RMat discord_c_matrix(const DensityMatrix& rho);

/// tr(C C^T) minus the m largest eigenvalues of C C^T.
double discord_lower_bound(const DensityMatrix& rho);

DensityMatrix werner_state(int m, double z);
double werner_discord(int m, double z);

/// tr(CC^T) - max over measurement bases of tr(A C C^T A^T). m = 2 uses a
/// sphere grid plus local refinement; m = 3 uses random restarts over bases.
double bruteforce_geometric_discord(const DensityMatrix& rho, int restarts = 200, std::uint64_t seed = 1);

struct WitnessResult {
  int rank_L = 0;
  bool rank_witness_fired = false;
  double commutators_max_norm = 0.0;
  bool is_zero_discord = false;
};

WitnessResult zero_discord_witness(const DensityMatrix& rho);

DensityMatrix classical_quantum_state(const std::vector<double>& probs, const std::vector<CVec>& basis,
                                      const std::vector<DensityMatrix>& states);

// Worked examples on two qutrits (standard basis |0>,|1>,|2>).
PureState discord_example2_state();       // (|00> + |11>)/2 + |22>/sqrt 2
PureState discord_example_e_state();      // (|11>+|22>+|10>+|01>+|02>+|20>)/sqrt 6
DensityMatrix discord_example3_state(double p);  // p|e><e| + (1-p) I/9
DensityMatrix discord_example4_state(double p);  // p|e1><e1| + (1-p)|e2><e2|

// Separable two-qubit state mixing four nonorthogonal product projectors.
DensityMatrix nonorthogonal_separable_state();

}  // namespace qgeom
