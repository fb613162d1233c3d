// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qgeom {

double sep_norm(const Dims& local_dims) {
  double s = 1.0;
  for (int d : local_dims) s *= std::sqrt(d * (d - 1) / 2.0);
  return s;
}

double sep_norm(const PartitionSpec& part) { return sep_norm(part.local_dims); }

double top_norm_sq(const CVec& amp, const Dims& d, CVec* grad) {
  const int m = static_cast<int>(d.size());
  const int D = product(d);
  if (amp.size() != D) throw InvalidInput("top_norm_sq: amplitude length mismatch");
  const double n2 = amp.squaredNorm();
  if (n2 == 0.0) throw InvalidInput("top_norm_sq: zero vector");

  double pref2 = 1.0;
  for (int k = 0; k < m; ++k) pref2 *= d[k] * d[k] / 4.0;

  double q = 0.0;
  CVec gq;
  if (grad) gq = CVec::Zero(D);
  std::vector<int> order(m), inv(m);
  Dims nd(m);
  for (int mask = 0; mask < (1 << m); ++mask) {
    // subsystems in K first, the rest after; coefficient 2^|K| prod_{k not in K} (-2/d_k)
    double coeff = 1.0;
    int dk = 1, pos = 0;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) {
        coeff *= 2.0;
        dk *= d[k];
        order[pos++] = k;
      }
    for (int k = 0; k < m; ++k)
      if (!(mask >> k & 1)) {
        coeff *= -2.0 / d[k];
        order[pos++] = k;
      }
    const bool identity = std::is_sorted(order.begin(), order.end());
    const int dr = D / dk;
    const CVec p = identity ? amp : permute_factors(amp, d, order);
    // Column-major (dr x dk) view of the row-major (dk x dr) matrix M.
    Eigen::Map<const CMat> Mt(p.data(), dr, dk);
    const CMat M = Mt.transpose();
    CMat G;
    if (dk <= dr) {
      const CMat rk = M * M.adjoint();
      q += coeff * rk.squaredNorm();
      if (grad) G = 2.0 * rk * M;
    } else {
      const CMat rr = M.adjoint() * M;
      q += coeff * rr.squaredNorm();
      if (grad) G = 2.0 * M * rr;
    }
    if (grad) {
      CVec gp(D);
      Eigen::Map<CMat>(gp.data(), dr, dk) = G.transpose();
      if (identity) {
        gq += coeff * gp;
      } else {
        for (int k = 0; k < m; ++k) {
          nd[k] = d[order[k]];
          inv[order[k]] = k;
        }
        gq += coeff * permute_factors(gp, nd, inv);
      }
    }
  }
  const double n4 = n2 * n2;
  if (grad) *grad = pref2 * (gq / n4 - 2.0 * q * amp / (n4 * n2));
  return pref2 * q / n4;
}

double geometric_entanglement_grad(const CVec& amp, const Dims& local_dims, CVec* grad) {
  CVec g;
  const double t2 = top_norm_sq(amp, local_dims, grad ? &g : nullptr);
  const double t = std::sqrt(std::max(t2, 0.0));
  if (grad) *grad = g / (2.0 * t);
  return t - sep_norm(local_dims);
}

double geometric_entanglement(const PureState& psi, const PartitionSpec& part) {
  if (part.size() < 2) throw InvalidInput("geometric_entanglement: need at least two subsets");
  const PureState g = regroup(psi, part);
  return geometric_entanglement_grad(g.amp, g.dims, nullptr);
}

double geometric_entanglement(const BlochDecomposition& bd) {
  if (bd.partition.size() < 2) throw InvalidInput("geometric_entanglement: need at least two subsets");
  return bd.top().norm() - sep_norm(bd.partition);
}

double concurrence(const CMat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw InvalidInput("concurrence: two-qubit state required");
  CMat yy = CMat::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  // rho = W W^dag; the lambdas are the singular values of W^T (sy x sy) W.
  // Jacobi SVD keeps small eigenvalues accurate relative to their size.
  const CMat h = 0.5 * (rho + rho.adjoint());
  Eigen::JacobiSVD<CMat> es(h, Eigen::ComputeFullU);
  const CMat W = es.matrixU() * es.singularValues().cwiseSqrt().cast<cplx>().asDiagonal();
  const CMat tau = W.transpose() * yy * W;
  Eigen::JacobiSVD<CMat> st(tau);
  const RVec l = st.singularValues();  // descending
  return std::max(l(0) - l(1) - l(2) - l(3), 0.0);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dims != Dims{2, 2}) throw InvalidInput("concurrence: two-qubit state required");
  return concurrence(rho.data);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double C) {
  if (C < -1e-12 || C > 1.0 + 1e-12) throw InvalidInput("eof_from_concurrence: C must lie in [0,1]");
  C = std::clamp(C, 0.0, 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - C * C)) / 2.0);
}

double three_tangle(const PureState& psi) {
  if (psi.dims != Dims{2, 2, 2}) throw InvalidInput("three_tangle: three-qubit state required");
  auto a = [&](int i, int j, int k) { return psi.amp(4 * i + 2 * j + k); };
  const cplx d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                  a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const cplx d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const cplx d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

}  // namespace qgeom
