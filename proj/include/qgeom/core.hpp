// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qgeom {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Dims = std::vector<int>;

// Bad user input: dimensions, ranges, malformed states. The CLI maps it to exit 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula hit a singular point or a root does not exist.
class NumericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline int product(const Dims& d) {
  int p = 1;
  for (int x : d) p *= x;
  return p;
}

}  // namespace qgeom
