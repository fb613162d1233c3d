// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qgeom/optimize.hpp"

namespace qgeom {

namespace {

void check_bipartite(const DensityMatrix& rho) {
  if (rho.dims.size() != 2) throw InvalidInput("discord: bipartite state required");
  if (rho.dims[0] < 2 || rho.dims[1] < 2) throw InvalidInput("discord: local dimensions must be >= 2");
}

// {I/sqrt d, l_a/sqrt 2}
std::vector<CMat> orthonormal_basis(int d) {
  const auto& L = generators(d).generators;
  std::vector<CMat> out;
  out.push_back(CMat::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  for (const auto& l : L) out.push_back(l / std::sqrt(2.0));
  return out;
}

// A_ki = <k|X_i|k> for the orthonormal columns of Q
RMat a_matrix(const CMat& Q, const std::vector<CMat>& X) {
  const int m = static_cast<int>(Q.cols());
  RMat A(m, static_cast<int>(X.size()));
  for (int k = 0; k < m; ++k)
    for (size_t i = 0; i < X.size(); ++i) A(k, i) = (Q.col(k).adjoint() * X[i] * Q.col(k))(0).real();
  return A;
}

CMat qubit_basis(double theta, double phi) {
  CMat Q(2, 2);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cplx e = std::polar(1.0, phi);
  Q(0, 0) = c;
  Q(1, 0) = e * s;
  Q(0, 1) = -s;
  Q(1, 1) = e * c;
  return Q;
}

CMat unitary_from(const RVec& p, int m) {
  CMat M(m, m);
  for (int i = 0; i < m * m; ++i) M(i / m, i % m) = cplx(p(i), p(m * m + i));
  Eigen::HouseholderQR<CMat> qr(M);
  return qr.householderQ() * CMat::Identity(m, m);
}

}  // namespace

double geometric_discord_2q(const DensityMatrix& rho) {
  if (rho.dims != Dims{2, 2}) throw InvalidInput("geometric_discord_2q: two-qubit state required");
  const BlochDecomposition bd = bloch_decompose(rho, trivial_partition({2, 2}));
  const RVec& x = bd.coherence[0];
  const RMat T = bd.matrix(0, 1);
  const RMat K = x * x.transpose() + T * T.transpose();
  Eigen::SelfAdjointEigenSolver<RMat> es(K, Eigen::EigenvaluesOnly);
  return 0.25 * (x.squaredNorm() + T.squaredNorm() - es.eigenvalues().maxCoeff());
}

DiscordReport geometric_discord_mn(const DensityMatrix& rho) {
  check_bipartite(rho);
  const int m = rho.dims[0], n = rho.dims[1];
  const BlochDecomposition bd = bloch_decompose(rho, trivial_partition(rho.dims));
  const RVec& x = bd.coherence[0];
  const RMat T = bd.matrix(0, 1);
  DiscordReport r;
  r.G = x * x.transpose() + (2.0 / n) * T * T.transpose();
  Eigen::SelfAdjointEigenSolver<RMat> es(r.G, Eigen::EigenvaluesOnly);
  r.G_eigenvalues = es.eigenvalues();  // ascending
  double chosen = 0.0;
  for (int l = 1; l < m; ++l) {
    const int idx = (l + 1) * (l + 1) - 1;
    r.chosen_eigen_indices.push_back(idx);
    chosen += r.G_eigenvalues(idx - 1);
  }
  r.D_formula = 2.0 / (m * m * n) * (x.squaredNorm() + (2.0 / n) * T.squaredNorm() - chosen);
  r.D_lower_bound = discord_lower_bound(rho);
  return r;
}

RMat discord_c_matrix(const DensityMatrix& rho) {
  check_bipartite(rho);
  const auto X = orthonormal_basis(rho.dims[0]);
  const auto Y = orthonormal_basis(rho.dims[1]);
  RMat C(X.size(), Y.size());
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < Y.size(); ++j) C(i, j) = (rho.data * kron(X[i], Y[j])).trace().real();
  return C;
}

double discord_lower_bound(const DensityMatrix& rho) {
  const int m = rho.dims.at(0);
  const RMat C = discord_c_matrix(rho);
  const RMat CC = C * C.transpose();
  Eigen::SelfAdjointEigenSolver<RMat> es(CC, Eigen::EigenvaluesOnly);
  const RVec& ev = es.eigenvalues();
  double top = 0.0;
  for (int i = 0; i < m; ++i) top += ev(ev.size() - 1 - i);
  return CC.trace() - top;
}

DensityMatrix werner_state(int m, double z) {
  if (m < 2) throw InvalidInput("werner: m must be >= 2");
  if (!(z >= -1.0 && z <= 1.0)) throw InvalidInput("werner: z must lie in [-1, 1]");
  const int D = m * m;
  const double den = static_cast<double>(m) * m * m - m;
  CMat r = CMat::Identity(D, D) * ((m - z) / den);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) r(k * m + l, l * m + k) += (m * z - 1.0) / den;
  return {{m, m}, r};
}

double werner_discord(int m, double z) {
  if (m < 2) throw InvalidInput("werner: m must be >= 2");
  if (!(z >= -1.0 && z <= 1.0)) throw InvalidInput("werner: z must lie in [-1, 1]");
  const double a = m * z - 1.0;
  return a * a / (m * (m - 1.0) * (m + 1.0) * (m + 1.0));
}

double bruteforce_geometric_discord(const DensityMatrix& rho, int restarts, std::uint64_t seed) {
  check_bipartite(rho);
  const int m = rho.dims[0];
  if (m > 3) throw InvalidInput("bruteforce discord supports m = 2 or 3");
  if (restarts < 1) throw InvalidInput("restarts must be >= 1");
  const RMat C = discord_c_matrix(rho);
  const RMat CC = C * C.transpose();
  const auto X = orthonormal_basis(m);
  auto value = [&](const CMat& Q) {
    const RMat A = a_matrix(Q, X);
    return (A * CC * A.transpose()).trace();
  };

  double best = -1.0;
  if (m == 2) {
    const int N = 200;
    const double step = std::numbers::pi / N;
    RVec bx(2);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j < 2 * N; ++j) {
        const double v = value(qubit_basis(i * step, j * step));
        if (v > best) {
          best = v;
          bx << i * step, j * step;
        }
      }
    auto f = [&](const RVec& a) { return -value(qubit_basis(a(0), a(1))); };
    Objective obj = [&](const RVec& a, RVec* g) {
      if (g) *g = numeric_gradient(f, a, 1e-7);
      return f(a);
    };
    const LocalResult lr = bfgs_minimize(obj, bx, 1e-10, 500);
    best = std::max(best, -lr.value);
  } else {
    auto f = [&](const RVec& p) { return value(unitary_from(p, m)); };
    Objective obj = [&](const RVec& p, RVec* g) {
      if (g) *g = numeric_gradient(f, p, 1e-7);
      return f(p);
    };
    const MultiStartResult ms = multistart_maximize(obj, 2 * m * m, restarts, seed, 1e-8, 1000);
    best = ms.best_value;
  }
  return CC.trace() - best;
}

WitnessResult zero_discord_witness(const DensityMatrix& rho) {
  check_bipartite(rho);
  const int m = rho.dims[0], n = rho.dims[1];
  // un-normalized Hermitian bases {I, l_a}
  std::vector<CMat> A{CMat::Identity(m, m)}, B{CMat::Identity(n, n)};
  for (const auto& l : generators(m).generators) A.push_back(l);
  for (const auto& l : generators(n).generators) B.push_back(l);
  RMat R(A.size(), B.size());
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j) {
      const double na = (A[i] * A[i]).trace().real(), nb = (B[j] * B[j]).trace().real();
      R(i, j) = (rho.data * kron(A[i], B[j])).trace().real() / (na * nb);
    }
  Eigen::JacobiSVD<RMat> svd(R, Eigen::ComputeFullU);
  const RVec& sv = svd.singularValues();
  WitnessResult w;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++w.rank_L;
  w.rank_witness_fired = w.rank_L > m;
  std::vector<CMat> S;
  for (int k = 0; k < w.rank_L; ++k) {
    CMat s = CMat::Zero(m, m);
    for (size_t i = 0; i < A.size(); ++i) s += svd.matrixU()(i, k) * A[i];
    S.push_back(s);
  }
  for (size_t a = 0; a < S.size(); ++a)
    for (size_t b = a + 1; b < S.size(); ++b)
      w.commutators_max_norm = std::max(w.commutators_max_norm, (S[a] * S[b] - S[b] * S[a]).norm());
  w.is_zero_discord = !w.rank_witness_fired && w.commutators_max_norm < 1e-9;
  return w;
}

DensityMatrix classical_quantum_state(const std::vector<double>& probs, const std::vector<CVec>& basis,
                                      const std::vector<DensityMatrix>& states) {
  if (probs.empty() || probs.size() != basis.size() || probs.size() != states.size())
    throw InvalidInput("classical-quantum state: mismatched inputs");
  const int m = static_cast<int>(basis[0].size());
  const Dims db = states[0].dims;
  if (static_cast<int>(probs.size()) > m) throw InvalidInput("classical-quantum state: too many blocks");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw InvalidInput("classical-quantum state: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw InvalidInput("classical-quantum state: probabilities must sum to 1");
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != m) throw InvalidInput("classical-quantum state: basis size mismatch");
    if (states[i].dims != db) throw InvalidInput("classical-quantum state: state dims mismatch");
    for (size_t j = 0; j <= i; ++j) {
      const cplx ip = basis[i].dot(basis[j]);
      if (std::abs(ip - (i == j ? 1.0 : 0.0)) > 1e-10) throw InvalidInput("classical-quantum state: basis not orthonormal");
    }
  }
  const int n = product(db);
  CMat r = CMat::Zero(m * n, m * n);
  for (size_t k = 0; k < probs.size(); ++k) r += probs[k] * kron(CMat(basis[k] * basis[k].adjoint()), states[k].data);
  Dims dims{m};
  dims.push_back(n);
  return {dims, r};
}

PureState discord_example2_state() {
  CVec a = CVec::Zero(9);
  a(0) = 0.5;
  a(4) = 0.5;
  a(8) = 1.0 / std::sqrt(2.0);
  return {{3, 3}, a};
}

PureState discord_example_e_state() {
  CVec a = CVec::Zero(9);
  for (auto [i, j] : {std::pair{1, 1}, {2, 2}, {1, 0}, {0, 1}, {0, 2}, {2, 0}}) a(3 * i + j) = 1.0 / std::sqrt(6.0);
  return {{3, 3}, a};
}

DensityMatrix discord_example3_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0, 1]");
  const CVec e = discord_example_e_state().amp;
  return {{3, 3}, p * e * e.adjoint() + (1.0 - p) * CMat::Identity(9, 9) / 9.0};
}

DensityMatrix discord_example4_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0, 1]");
  const CVec e1 = discord_example2_state().amp;
  const CVec e2 = discord_example_e_state().amp;
  return {{3, 3}, p * e1 * e1.adjoint() + (1.0 - p) * e2 * e2.adjoint()};
}

DensityMatrix nonorthogonal_separable_state() {
  CVec k0(2), k1(2), kp(2), km(2);
  k0 << 1.0, 0.0;
  k1 << 0.0, 1.0;
  kp << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  km << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  auto P = [](const CVec& v) { return CMat(v * v.adjoint()); };
  const CMat r = 0.25 * (kron(P(k0), P(kp)) + kron(P(k1), P(km)) + kron(P(kp), P(k1)) + kron(P(km), P(k0)));
  return {{2, 2}, r};
}

}  // namespace qgeom
