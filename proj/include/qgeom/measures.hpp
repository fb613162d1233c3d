// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qgeom/core.hpp"
#include "qgeom/qstate.hpp"

namespace qgeom {

/// prod_k sqrt(d_k (d_k - 1) / 2): the top-tensor norm of any product state.
double sep_norm(const Dims& local_dims);
double sep_norm(const PartitionSpec& part);

/// ||T||^2 of the top correlation tensor for amplitudes already grouped by
/// local_dims. The amplitude vector need not be normalized; the value is that
/// of the normalized state. If grad is given it receives dF/d(conj amp).
///
/// Uses sum_a l_a (x) l_a = 2 SWAP - (2/d) I, so ||T||^2 is a signed sum of
/// subsystem purities.
double top_norm_sq(const CVec& amp, const Dims& local_dims, CVec* grad = nullptr);

/// E = ||T|| - sep_norm for a pure state under a partition. Not clamped.
double geometric_entanglement(const PureState& psi, const PartitionSpec& part);
double geometric_entanglement(const BlochDecomposition& bd);

// E and dE/d(conj amp) for grouped amplitudes.
double geometric_entanglement_grad(const CVec& amp, const Dims& local_dims, CVec* grad);

double concurrence(const DensityMatrix& rho);
double concurrence(const CMat& rho);

double binary_entropy(double x);
double eof_from_concurrence(double C);

/// Coffman-Kundu-Wootters three-tangle of a three-qubit pure state.
double three_tangle(const PureState& psi);

}  // namespace qgeom
