// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qgeom/core.hpp"

namespace qgeom {

// Objective to minimize; fills grad when it is non-null.
using Objective = std::function<double(const RVec& x, RVec* grad)>;

struct LocalResult {
  RVec x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// BFGS (GSL vector_bfgs2) from x0.
LocalResult bfgs_minimize(const Objective& f, const RVec& x0, double grad_tol = 1e-9, int max_iter = 2000);

/// Central-difference gradient with step h.
RVec numeric_gradient(const std::function<double(const RVec&)>& f, const RVec& x, double h = 1e-6);

struct MultiStartResult {
  RVec best_x;
  double best_value = 0.0;
  std::vector<double> values;  // per restart, in restart order
  int iterations = 0;          // summed over restarts
  int converged = 0;           // restarts meeting the gradient tolerance
  bool best_converged = false;  // a converged restart reached best_value
};

/// Maximize f over R^n from `restarts` standard-normal starting points.
/// Restarts run in parallel; the result is deterministic for a given seed
/// whatever the thread count. f must be safe to call concurrently.
MultiStartResult multistart_maximize(const Objective& f, int n, int restarts, std::uint64_t seed,
                                     double grad_tol = 1e-9, int max_iter = 2000);

// Worker count: QGEOM_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
int worker_threads();

// Complex amplitudes <-> real parameter vectors (re..., im...).
CVec to_complex(const RVec& x);
RVec to_real(const CVec& z);

}  // namespace qgeom
