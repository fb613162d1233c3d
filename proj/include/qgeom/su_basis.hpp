// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qgeom/core.hpp"

namespace qgeom {

struct GeneratorLabel {
  char kind;  // 'u', 'v' or 'w'
  int j;      // 1-based basis labels; for 'w' j = k = l
  int k;
};

/// Traceless Hermitian generators of SU(d) with Tr(l_i l_j) = 2 delta_ij.
///
/// Order is interleaved: for k = 2..d emit u_jk, v_jk (j < k) and then
/// w_{k-1}. The diagonal generator w_l therefore sits at 0-based index
/// (l+1)^2 - 2. For d = 3 this is the Gell-Mann order.
struct GeneratorBasis {
  int dim = 0;
  std::vector<CMat> generators;
  std::vector<GeneratorLabel> labels;
  std::string ordering_tag;

  int size() const { return static_cast<int>(generators.size()); }
  // 0-based position of w_l, 1 <= l <= d-1.
  static int diagonal_index(int l) { return (l + 1) * (l + 1) - 2; }
};

GeneratorBasis build_generators(int d);

// Cached basis shared across calls; thread-safe.
const GeneratorBasis& generators(int d);

class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(int dim, std::vector<double> f, std::vector<double> g);

  int dim() const { return dim_; }
  int n() const { return n_; }
  double f(int i, int j, int k) const { return f_[(i * n_ + j) * n_ + k]; }
  double g(int i, int j, int k) const { return g_[(i * n_ + j) * n_ + k]; }

 private:
  int dim_ = 0;
  int n_ = 0;
  std::vector<double> f_, g_;
};

/// f_ijk = Tr([l_i,l_j] l_k) / 4i and g_ijk = Tr({l_i,l_j} l_k) / 4.
StructureConstants structure_constants(const GeneratorBasis& basis);

const StructureConstants& structure_constants(int d);

/// (a*b)_k = sqrt(d(d-1)/2) / (d-2) * sum_ij g_ijk a_i b_j, d >= 3.
RVec star_product(const RVec& a, const RVec& b, const StructureConstants& sc);

}  // namespace qgeom
