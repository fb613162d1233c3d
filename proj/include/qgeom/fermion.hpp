// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qgeom/core.hpp"
#include "qgeom/qstate.hpp"

namespace qgeom {

// Modes are zero-based. Mode 0 is the most significant bit of a basis index,
// so |1000> = a_0^dag |vac> for four modes.

struct FockBasisState {
  std::vector<int> occupations;
  int index = 0;
};

FockBasisState fock_state(int index, int modes);
FockBasisState fock_state(const std::vector<int>& occupations);

// prod_i (1 - 2 n_i)
int parity(const FockBasisState& s);

struct NumberSector {
  int modes = 0;
  int particles = 0;
  std::vector<FockBasisState> basis;  // ascending index

  std::vector<int> indices() const;
};

NumberSector number_sector(int modes, int particles);

enum class Ladder { create, annihilate };

/// a_i or a_i^dag on 2^modes qubits, with the string (-1)^{sum_{j>i} n_j}.
CMat jw_operator(Ladder kind, int mode, int modes);
CMat number_operator(int mode, int modes);

// Restrict an operator on the full space to a sector basis.
CMat project(const CMat& op, const NumberSector& sector);
// Sector amplitudes -> full 2^modes vector.
CVec embed(const CVec& amp, const NumberSector& sector);

// ---- Hubbard dimer, modes (A up, A dn, B up, B dn)

double dimer_alpha(double U, double t);  // x + sqrt(1 + x^2), x = U / 4t
CMat dimer_hamiltonian(double t, double U);
PureState hubbard_dimer_ground(double alpha);

struct DimerEntanglements {
  double E_g = 0.0;        // four singletons
  double E_s = 0.0;        // sites {A} {B}
  double E_vn = 0.0;       // von Neumann entropy of site A
  double E_unequal = 0.0;  // {A up} vs the other three modes
};

// Closed forms in alpha (E_unequal from the state).
DimerEntanglements dimer_entanglements(double alpha);
// Everything evaluated from the ground-state vector.
DimerEntanglements dimer_entanglements_generic(double alpha);

// ---- Hubbard trimer, modes (A up, A dn, B up, B dn, C up, C dn), periodic

CMat trimer_hamiltonian(double beta, double t = 1.0);

// Fermionic relabelling of modes: R c_m^dag R^dag = c_perm[m]^dag, R|vac> = |vac>.
CMat mode_permutation_operator(const std::vector<int>& perm);

struct TrimerGround {
  PureState state;                // 64 amplitudes, N = 3, S_z = +1/2
  double energy = 0.0;
  int degeneracy = 0;             // within the S_z = +1/2 block
  std::vector<double> spectrum;   // S_z = +1/2 block, ascending
  std::vector<double> n3_spectrum;  // whole N = 3 sector, ascending
};

/// Ground representative: odd under the B <-> C reflection, largest amplitude
/// (lowest index on ties) made real positive.
TrimerGround hubbard_trimer_ground(double beta);

struct TrimerEntanglements {
  double E_six = 0.0;
  double E_site3 = 0.0;
  double E_bi = 0.0;  // {A} vs {B, C}
  double E_vn = 0.0;  // entropy of site A
};

TrimerEntanglements trimer_entanglements(double beta);
TrimerEntanglements trimer_entanglements(const PureState& psi);

// ---- upper bounds

struct BoundReport {
  double best_value = 0.0;
  PureState best_state;
  int restarts = 0;
  std::vector<double> values;
  std::uint64_t seed = 0;
  int iterations = 0;
  int converged_restarts = 0;
  bool converged = false;
};

/// Maximize E under a partition of the modes over normalized states of one
/// number sector.
BoundReport maximize_partition_entanglement(const NumberSector& sector, const PartitionSpec& part, int restarts,
                                            std::uint64_t seed);

// ---- four-mode locality example

// (i a|1100> + |1001> + |0110> + |0011> + b|0101> + |1010>) / sqrt 6, a^2 + b^2 = 2
PureState four_mode_state(double a, double b);

struct FourModeParams {
  double f = 0.0;      // a_0^dag a_3 + h.c.
  double q = 0.0;      // n_0 n_1
  double Gamma = 0.0;  // n_0
  double gamma = 0.0;  // n_2
  double eta = 0.0;    // a_0^dag a_1 + h.c.
};

CMat four_mode_hamiltonian(const FourModeParams& p);
// (psi - i eps H psi), renormalized
PureState evolve_four_mode(const PureState& psi, const FourModeParams& p, double eps);

}  // namespace qgeom
