// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qgeom/core.hpp"
#include "qgeom/qstate.hpp"

namespace qgeom {

// H = J (sx sx + sy sy) / 2 - B1 sz_1 - B2 sz_2, k = 1.
struct XXParams {
  double J = 1.0;
  double B1 = 0.0;
  double B2 = 0.0;
  double T = 1.0;

  void validate() const;  // T > 0, J != 0, finite
  double D() const;       // sqrt((B1 - B2)^2 + J^2)
};

struct ThermalState {
  DensityMatrix rho;
  double Z = 0.0;  // may overflow to inf at very low T; rho is computed scaled
  double u1 = 0.0, u2 = 0.0, w1 = 0.0, w2 = 0.0, v = 0.0;
};

ThermalState thermal_state(const XXParams& p);
CMat xx_hamiltonian(const XXParams& p);
// exp(-H/T)/Z by eigendecomposition.
CMat thermal_state_oracle(const XXParams& p);

// 2 max(|rho_12| - sqrt(rho_00 rho_33), 0)
double thermal_concurrence(const XXParams& p);

struct QdCc {
  double QD = 0.0;
  double CC = 0.0;
  double I = 0.0;
};

enum class QdMethod { automatic, numeric, bell_diagonal };

/// Discord and classical correlations with projective measurements on
/// qubit B (conditional entropy of A). automatic uses the Bell-diagonal closed form when it applies.
QdCc qd_cc(const DensityMatrix& rho, QdMethod method = QdMethod::automatic);
bool is_bell_diagonal(const CMat& rho, double tol = 1e-12);

// rho = (I + sum c_i s_i s_i) / 4; throws if not positive.
DensityMatrix bell_diagonal_state(double c1, double c2, double c3);
QdCc qd_cc_bell_diagonal(double c1, double c2, double c3);

struct TheoremCheck {
  bool holds = false;
  double c = 0.0;        // the repeated value
  double I = 0.0;        // mutual information of the state
  double I_formula = 0.0;  // (1-c)log2(1-c) + (1+c)log2(1+c)
  double CC = 0.0;
  double QD = 0.0;
};

/// Pattern c_i = c_j = c, c_k = -c^2 under some permutation of (c1, c2, c3).
TheoremCheck theorem_qd_eq_cc(double c1, double c2, double c3, double tol = 1e-9);

struct Monogamy {
  double EN_AB = 0.0, QD_AB = 0.0, CC_AB = 0.0, S_A = 0.0;
  double EN_AE = 0.0, QD_AE = 0.0, CC_AE = 0.0;
  double I_AB = 0.0;
  double identity_residual = 0.0;
};

Monogamy monogamy(const XXParams& p);

/// T solving sinh(D/T) = D with D = sqrt(4 B1^2 + J^2) (B2 = -B1).
double critical_temperature(double B1, double J = 1.0);

/// Largest |B1| (B2 = -B1) with zero concurrence at temperature T; 0 when
/// the concurrence is positive for every field.
double zero_concurrence_half_width(double T, double J = 1.0);

}  // namespace qgeom
