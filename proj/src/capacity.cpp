// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/capacity.hpp"

#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "qgeom/measures.hpp"
#include "qgeom/optimize.hpp"

namespace qgeom {

namespace {

CMat pauli(int i) {
  CMat s = CMat::Zero(2, 2);
  const cplx I(0.0, 1.0);
  if (i == 0) {
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
  } else if (i == 1) {
    s(0, 1) = -I;
    s(1, 0) = I;
  } else {
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
  }
  return s;
}

void check_descending(const std::vector<double>& v, size_t from, size_t to, const char* what) {
  for (size_t i = from + 1; i < to; ++i)
    if (v[i] > v[i - 1]) throw InvalidInput(std::string(what) + ": coupling strengths must be non-increasing");
}

// (a x b)_q for 3-vectors
double cross(const double* a, const double* b, int q) {
  const int i = (q + 1) % 3, j = (q + 2) % 3;
  return a[i] * b[j] - a[j] * b[i];
}

}  // namespace

CouplingSpec CouplingSpec::two_qubit(double mu1, double mu2, double mu3) {
  CouplingSpec c{SystemKind::two_qubit, {mu1, mu2, mu3}};
  c.validate();
  return c;
}

CouplingSpec CouplingSpec::two_qutrit(const std::vector<double>& mu) {
  CouplingSpec c{SystemKind::two_qutrit, mu};
  c.validate();
  return c;
}

CouplingSpec CouplingSpec::three_qubit(const std::array<double, 3>& ab, const std::array<double, 3>& bc,
                                       const std::array<double, 3>& ac) {
  CouplingSpec c{SystemKind::three_qubit, {ab[0], ab[1], ab[2], bc[0], bc[1], bc[2], ac[0], ac[1], ac[2]}};
  c.validate();
  return c;
}

CouplingSpec CouplingSpec::isotropic(SystemKind kind, double mu) {
  switch (kind) {
    case SystemKind::two_qubit:
      return two_qubit(mu, mu, mu);
    case SystemKind::two_qutrit:
      return two_qutrit(std::vector<double>(8, mu));
    case SystemKind::three_qubit:
      return three_qubit({mu, mu, mu}, {mu, mu, mu}, {mu, mu, mu});
  }
  throw InvalidInput("unknown system kind");
}

void CouplingSpec::validate() const {
  for (double m : mu)
    if (!std::isfinite(m)) throw InvalidInput("coupling strengths must be finite");
  switch (kind) {
    case SystemKind::two_qubit:
      if (mu.size() != 3) throw InvalidInput("two-qubit coupling needs 3 strengths");
      if (mu[0] < mu[1] || mu[1] < std::abs(mu[2]))
        throw InvalidInput("two-qubit coupling must satisfy mu1 >= mu2 >= |mu3|");
      break;
    case SystemKind::two_qutrit:
      if (mu.size() != 8) throw InvalidInput("two-qutrit coupling needs 8 strengths");
      check_descending(mu, 0, 8, "two-qutrit");
      break;
    case SystemKind::three_qubit:
      if (mu.size() != 9) throw InvalidInput("three-qubit coupling needs 9 strengths");
      for (size_t b = 0; b < 3; ++b) check_descending(mu, 3 * b, 3 * b + 3, "three-qubit");
      break;
  }
}

Dims CouplingSpec::dims() const {
  switch (kind) {
    case SystemKind::two_qubit:
      return {2, 2};
    case SystemKind::two_qutrit:
      return {3, 3};
    case SystemKind::three_qubit:
      return {2, 2, 2};
  }
  return {};
}

double rate_two_qubit(const BlochDecomposition& bd, const RVec& mu) {
  if (bd.partition.local_dims != Dims{2, 2}) throw InvalidInput("rate_two_qubit: two-qubit state required");
  if (mu.size() != 3) throw InvalidInput("rate_two_qubit: mu must have 3 entries");
  const RVec& r = bd.coherence[0];
  const RVec& s = bd.coherence[1];
  const RMat T = bd.matrix(0, 1);
  const double norm = T.norm();
  if (norm == 0.0) throw NumericError("rate_two_qubit: ||T|| = 0");
  double sum = 0.0;
  for (int n = 0; n < 3; ++n) {
    const RVec col = T.col(n);
    const RVec row = T.row(n).transpose();
    sum += (cross(r.data(), col.data(), n) + cross(s.data(), row.data(), n)) * mu(n);
  }
  return 2.0 * sum / norm;
}

PureState psi_E(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("psi_E: p must lie in [0,1]");
  CVec a = CVec::Zero(4);
  a(1) = std::sqrt(p);
  a(2) = cplx(0.0, std::sqrt(1.0 - p));
  return {{2, 2}, a};
}

double f_rate(double p) {
  const double q = p * (1.0 - p);
  return 8.0 * (1.0 - 2.0 * p) * std::sqrt(q) / std::sqrt(1.0 + 8.0 * q);
}

double dE_dp(double p) {
  const double q = p * (1.0 - p);
  return 4.0 * (1.0 - 2.0 * p) / std::sqrt(1.0 + 8.0 * q);
}

double dEvn_dp(double p) { return std::log2((1.0 - p) / p); }

double f_vn(double p) {
  // f * dEvn/dE; the (1-2p) factors cancel analytically.
  const double q = p * (1.0 - p);
  return 2.0 * std::sqrt(q) * dEvn_dp(p);
}

P0Result find_p0() {
  auto neg = [](double p) { return -f_vn(p); };
  const auto r = boost::math::tools::brent_find_minima(neg, 1e-9, 0.5 - 1e-9, std::numeric_limits<double>::digits);
  return {r.first, -r.second};
}

double rate_qutrit(const BlochDecomposition& bd, const RVec& mu, const StructureConstants& sc) {
  if (bd.partition.local_dims != Dims{3, 3}) throw InvalidInput("rate_qutrit: two-qutrit state required");
  if (mu.size() != 8) throw InvalidInput("rate_qutrit: mu must have 8 entries");
  if (sc.dim() != 3) throw InvalidInput("rate_qutrit: SU(3) structure constants required");
  const RMat tau = bd.matrix(0, 1);
  const double norm = tau.norm();
  if (norm == 0.0) throw NumericError("rate_qutrit: ||T|| = 0");
  const RVec la = bd.coherence[0] * (2.0 / 3.0);
  const RVec lb = bd.coherence[1] * (2.0 / 3.0);
  double sum = 0.0;
  for (int k = 0; k < 8; ++k)
    for (int l = 0; l < 8; ++l)
      for (int p = 0; p < 8; ++p) {
        const double f = sc.f(k, l, p);
        if (f == 0.0) continue;
        sum += mu(p) * f * (tau(k, p) * la(l) + tau(p, k) * lb(l));
      }
  return -3.0 * sum / norm;
}

std::vector<Triplet> reference_triplets() {
  const double h = 0.5, r = std::sqrt(3.0) / 2.0;
  return {{{0, 3, 6}, 1.0}, {{1, 0, 5}, h}, {{2, 0, 4}, h}, {{2, 1, 3}, h}, {{1, 4, 6}, h},
          {{2, 6, 5}, h},   {{4, 3, 5}, h}, {{2, 5, 7}, r}, {{1, 4, 7}, r}};
}

std::vector<Triplet> structure_triplets(const StructureConstants& sc) {
  std::vector<Triplet> out;
  const int n = sc.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (std::abs(sc.f(i, j, k)) > 1e-12) out.push_back({{i, j, k}, sc.f(i, j, k)});
  return out;
}

double rate_qutrit_triplet(const BlochDecomposition& bd, const RVec& mu, const std::vector<Triplet>& table) {
  if (bd.partition.local_dims != Dims{3, 3}) throw InvalidInput("rate_qutrit_triplet: two-qutrit state required");
  if (mu.size() != 8) throw InvalidInput("rate_qutrit_triplet: mu must have 8 entries");
  const RMat tau = bd.matrix(0, 1);
  const double norm = tau.norm();
  if (norm == 0.0) throw NumericError("rate_qutrit_triplet: ||T|| = 0");
  const RVec la = bd.coherence[0] * (2.0 / 3.0);
  const RVec lb = bd.coherence[1] * (2.0 / 3.0);
  double sum = 0.0;
  for (const auto& t : table) {
    double a[3], b[3];
    for (int q = 0; q < 3; ++q) {
      const int p = t.s[q];
      double tc[3], tr[3];
      for (int r = 0; r < 3; ++r) {
        tc[r] = tau(t.s[r], p);
        tr[r] = tau(p, t.s[r]);
        a[r] = la(t.s[r]);
        b[r] = lb(t.s[r]);
      }
      sum += t.alpha * mu(p) * (cross(tc, a, q) + cross(tr, b, q));
    }
  }
  return -3.0 * sum / norm;
}

double rate_three_qubit(const BlochDecomposition& bd, const CouplingSpec& coupling) {
  if (bd.partition.local_dims != Dims{2, 2, 2}) throw InvalidInput("rate_three_qubit: three-qubit state required");
  if (coupling.kind != SystemKind::three_qubit) throw InvalidInput("rate_three_qubit: three-qubit coupling required");
  coupling.validate();
  const RVec& tf = bd.top();
  const double norm = tf.norm();
  if (norm == 0.0) throw NumericError("rate_three_qubit: ||tau|| = 0");
  auto tau = [&](int i, int j, int k) { return tf(9 * i + 3 * j + k); };
  const RMat AB = bd.matrix(0, 1), AC = bd.matrix(0, 2), BC = bd.matrix(1, 2);
  const double* mAB = coupling.mu.data();
  const double* mBC = coupling.mu.data() + 3;
  const double* mAC = coupling.mu.data() + 6;
  double v1[3], v2[3], w1[3], w2[3];
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int s = 0; s < 3; ++s) {
      // block AB: k = a
      for (int x = 0; x < 3; ++x) {
        v1[x] = tau(x, s, a);
        w1[x] = AC(x, a);
        v2[x] = tau(s, x, a);
        w2[x] = BC(x, a);
      }
      s1 += (cross(v1, w1, s) + cross(v2, w2, s)) * mAB[s];
      // block BC: i = a
      for (int x = 0; x < 3; ++x) {
        v1[x] = tau(a, x, s);
        w1[x] = AB(a, x);
        v2[x] = tau(a, s, x);
        w2[x] = AC(a, x);
      }
      s2 += (cross(v1, w1, s) + cross(v2, w2, s)) * mBC[s];
      // block AC: j = a
      for (int x = 0; x < 3; ++x) {
        v1[x] = tau(x, a, s);
        w1[x] = AB(x, a);
        v2[x] = tau(s, a, x);
        w2[x] = BC(a, x);
      }
      s3 += (cross(v1, w1, s) + cross(v2, w2, s)) * mAC[s];
    }
  return -2.0 * (s1 + s2 + s3) / norm;
}

double rate(const PureState& psi, const CouplingSpec& coupling) {
  const Dims dims = coupling.dims();
  if (psi.dims != dims) throw InvalidInput("rate: state dimensions do not match coupling");
  static const PartitionSpec p22 = trivial_partition({2, 2});
  static const PartitionSpec p33 = trivial_partition({3, 3});
  static const PartitionSpec p222 = trivial_partition({2, 2, 2});
  const RVec mu = Eigen::Map<const RVec>(coupling.mu.data(), static_cast<Eigen::Index>(coupling.mu.size()));
  switch (coupling.kind) {
    case SystemKind::two_qubit:
      return rate_two_qubit(bloch_decompose(psi, p22), mu);
    case SystemKind::two_qutrit:
      return rate_qutrit(bloch_decompose(psi, p33), mu, structure_constants(3));
    case SystemKind::three_qubit:
      return rate_three_qubit(bloch_decompose(psi, p222), coupling);
  }
  return 0.0;
}

CMat coupling_hamiltonian(const CouplingSpec& coupling) {
  coupling.validate();
  const auto& mu = coupling.mu;
  switch (coupling.kind) {
    case SystemKind::two_qubit: {
      CMat H = CMat::Zero(4, 4);
      for (int i = 0; i < 3; ++i) H += mu[i] * kron(pauli(i), pauli(i));
      return H;
    }
    case SystemKind::two_qutrit: {
      const auto& L = generators(3).generators;
      CMat H = CMat::Zero(9, 9);
      for (int p = 0; p < 8; ++p) H += mu[p] * kron(L[p], L[p]);
      return H;
    }
    case SystemKind::three_qubit: {
      const CMat I = CMat::Identity(2, 2);
      CMat H = CMat::Zero(8, 8);
      for (int s = 0; s < 3; ++s) {
        const CMat P = pauli(s);
        H += mu[s] * kron({P, P, I});
        H += mu[3 + s] * kron({I, P, P});
        H += mu[6 + s] * kron({P, I, P});
      }
      return H;
    }
  }
  return {};
}

CMat evolution_operator(const CMat& H, double t) {
  Eigen::SelfAdjointEigenSolver<CMat> es(H);
  const CVec ph = (es.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

double rate_finite_difference(const PureState& psi, const CMat& H, const PartitionSpec& part, double dt) {
  if (!(dt > 0.0)) throw InvalidInput("rate_finite_difference: dt must be positive");
  if (H.rows() != psi.amp.size() || H.cols() != psi.amp.size())
    throw InvalidInput("rate_finite_difference: Hamiltonian size mismatch");
  const CMat U = evolution_operator(H, dt);
  const PureState fwd{psi.dims, U * psi.amp};
  const PureState bwd{psi.dims, U.adjoint() * psi.amp};
  return (geometric_entanglement(fwd, part) - geometric_entanglement(bwd, part)) / (2.0 * dt);
}

CVec chart_to_amplitudes(const RVec& x) {
  const int D = static_cast<int>((x.size() + 1) / 2);
  CVec z(D);
  z(0) = x(0);
  for (int i = 1; i < D; ++i) z(i) = cplx(x(i), x(D + i - 1));
  const double n = z.norm();
  if (n == 0.0) throw NumericError("zero amplitude vector");
  return z / n;
}

OptimizationReport maximize_rate(const CouplingSpec& coupling, int restarts, std::uint64_t seed) {
  coupling.validate();
  if (restarts < 1) throw InvalidInput("restarts must be >= 1");
  const Dims dims = coupling.dims();
  const int D = product(dims);
  auto value = [&](const RVec& x) { return rate(PureState{dims, chart_to_amplitudes(x)}, coupling); };
  Objective obj = [&](const RVec& x, RVec* g) {
    if (g) *g = numeric_gradient(value, x, 1e-6);
    return value(x);
  };
  const MultiStartResult ms = multistart_maximize(obj, 2 * D - 1, restarts, seed, 1e-7, 3000);

  OptimizationReport rep;
  rep.kind = coupling.kind;
  rep.best_value = ms.best_value;
  rep.best_state = PureState{dims, chart_to_amplitudes(ms.best_x)};
  rep.restarts = restarts;
  rep.values = ms.values;
  rep.seed = seed;
  rep.iterations = ms.iterations;
  rep.converged_restarts = ms.converged;
  rep.converged = ms.best_converged;

  rep.isotropic = true;
  for (double m : coupling.mu)
    if (m != coupling.mu.front()) rep.isotropic = false;
  if (rep.isotropic) {
    const PartitionSpec part = trivial_partition(dims);
    rep.entanglement = geometric_entanglement(rep.best_state, part);
    const CMat rho = rep.best_state.amp * rep.best_state.amp.adjoint();
    rep.local_purities = RVec(static_cast<int>(dims.size()));
    for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
      const CMat r = reduce(rho, dims, {k});
      rep.local_purities(k) = (r * r).trace().real();
    }
    if (dims.size() == 2)
      rep.schmidt = schmidt_decompose(rep.best_state, part).coefficients;
    else
      rep.tangle = three_tangle(rep.best_state);
  }
  return rep;
}

}  // namespace qgeom
