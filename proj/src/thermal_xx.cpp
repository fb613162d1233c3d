// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/thermal_xx.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "qgeom/measures.hpp"

namespace qgeom {

namespace {

using Vec3 = std::array<double, 3>;

double h2(double x) { return binary_entropy(x); }

// Entropy of a qubit with Bloch vector length r.
double qubit_entropy(double r) { return h2((1.0 + std::min(r, 1.0)) / 2.0); }

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

struct TwoQubitBloch {
  Vec3 a{}, b{};
  double T[3][3]{};
};

TwoQubitBloch bloch_of(const CMat& rho) {
  static const std::array<CMat, 3> s = [] {
    std::array<CMat, 3> out;
    for (auto& m : out) m = CMat::Zero(2, 2);
    out[0](0, 1) = 1.0;
    out[0](1, 0) = 1.0;
    out[1](0, 1) = cplx(0.0, -1.0);
    out[1](1, 0) = cplx(0.0, 1.0);
    out[2](0, 0) = 1.0;
    out[2](1, 1) = -1.0;
    return out;
  }();
  const CMat I = CMat::Identity(2, 2);
  TwoQubitBloch q;
  for (int i = 0; i < 3; ++i) {
    q.a[i] = (rho * kron(s[i], I)).trace().real();
    q.b[i] = (rho * kron(I, s[i])).trace().real();
    for (int j = 0; j < 3; ++j) q.T[i][j] = (rho * kron(s[i], s[j])).trace().real();
  }
  return q;
}

// S(rho_B) - sum_k p_k S(rho_B|k) for the measurement along direction n on A.
double measured_info(const TwoQubitBloch& q, double theta, double phi, double SB) {
  const Vec3 n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  const double an = q.a[0] * n[0] + q.a[1] * n[1] + q.a[2] * n[2];
  Vec3 tn{};
  for (int j = 0; j < 3; ++j) tn[j] = q.T[0][j] * n[0] + q.T[1][j] * n[1] + q.T[2][j] * n[2];
  double cond = 0.0;
  for (int sgn : {1, -1}) {
    const double p = (1.0 + sgn * an) / 2.0;
    if (p <= 1e-15) continue;
    Vec3 bk;
    for (int j = 0; j < 3; ++j) bk[j] = (q.b[j] + sgn * tn[j]) / (2.0 * p);
    cond += p * qubit_entropy(norm3(bk));
  }
  return SB - cond;
}

double classical_correlation_numeric(const CMat& rho) {
  const TwoQubitBloch q = bloch_of(rho);
  const double SB = qubit_entropy(norm3(q.b));
  const double step = std::numbers::pi / 400.0;
  double best = -1.0, bt = 0.0, bp = 0.0;
  // n and -n give the same measurement, so phi in [0, pi) suffices.
  for (int i = 0; i <= 400; ++i)
    for (int j = 0; j < 400; ++j) {
      const double v = measured_info(q, i * step, j * step, SB);
      if (v > best) {
        best = v;
        bt = i * step;
        bp = j * step;
      }
    }
  const int bits = std::numeric_limits<double>::digits / 2;
  for (int round = 0; round < 4; ++round) {
    auto ft = [&](double t) { return -measured_info(q, t, bp, SB); };
    auto rt = boost::math::tools::brent_find_minima(ft, bt - step, bt + step, bits);
    if (-rt.second > best) {
      best = -rt.second;
      bt = rt.first;
    }
    auto fp = [&](double ph) { return -measured_info(q, bt, ph, SB); };
    auto rp = boost::math::tools::brent_find_minima(fp, bp - step, bp + step, bits);
    if (-rp.second > best) {
      best = -rp.second;
      bp = rp.first;
    }
  }
  return best;
}

void check_two_qubit(const DensityMatrix& rho) {
  if (rho.dims != Dims{2, 2}) throw InvalidInput("two-qubit state required");
}

}  // namespace

void XXParams::validate() const {
  if (!std::isfinite(J) || !std::isfinite(B1) || !std::isfinite(B2) || !std::isfinite(T))
    throw InvalidInput("XX parameters must be finite");
  if (J == 0.0) throw InvalidInput("XX coupling J must be nonzero");
  if (!(T > 0.0)) throw InvalidInput("temperature must be positive");
}

double XXParams::D() const { return std::sqrt((B1 - B2) * (B1 - B2) + J * J); }

CMat xx_hamiltonian(const XXParams& p) {
  // basis |00>, |01>, |10>, |11> with |0> the sz = +1 state
  CMat H = CMat::Zero(4, 4);
  H(0, 0) = -(p.B1 + p.B2);
  H(1, 1) = -(p.B1 - p.B2);
  H(2, 2) = p.B1 - p.B2;
  H(3, 3) = p.B1 + p.B2;
  H(1, 2) = p.J;
  H(2, 1) = p.J;
  return H;
}

ThermalState thermal_state(const XXParams& p) {
  p.validate();
  const double D = p.D(), T = p.T, s = p.B1 + p.B2, x = (p.B1 - p.B2) / D;
  ThermalState st;
  st.u1 = std::exp(s / T);
  st.u2 = std::exp(-s / T);
  st.w1 = std::cosh(D / T) + x * std::sinh(D / T);
  st.w2 = std::cosh(D / T) - x * std::sinh(D / T);
  st.v = -p.J * std::sinh(D / T) / D;
  st.Z = st.u1 + st.u2 + st.w1 + st.w2;
  // the same entries scaled by exp(-M/T)
  const double M = std::max(std::abs(s), D);
  const double ep = std::exp((D - M) / T), em = std::exp((-D - M) / T);
  const double u1 = std::exp((s - M) / T), u2 = std::exp((-s - M) / T);
  const double w1 = 0.5 * (ep * (1.0 + x) + em * (1.0 - x));
  const double w2 = 0.5 * (ep * (1.0 - x) + em * (1.0 + x));
  const double v = -p.J / (2.0 * D) * (ep - em);
  const double z = u1 + u2 + w1 + w2;
  CMat r = CMat::Zero(4, 4);
  r(0, 0) = u1 / z;
  r(1, 1) = w1 / z;
  r(2, 2) = w2 / z;
  r(3, 3) = u2 / z;
  r(1, 2) = v / z;
  r(2, 1) = v / z;
  st.rho = {{2, 2}, r};
  return st;
}

CMat thermal_state_oracle(const XXParams& p) {
  p.validate();
  Eigen::SelfAdjointEigenSolver<CMat> es(xx_hamiltonian(p));
  const RVec& e = es.eigenvalues();
  const double e0 = e.minCoeff();
  const RVec w = ((-(e.array() - e0)) / p.T).exp();
  CMat r = es.eigenvectors() * w.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  return r / r.trace().real();
}

double thermal_concurrence(const XXParams& p) {
  const CMat& r = thermal_state(p).rho.data;
  return 2.0 * std::max(std::abs(r(1, 2)) - std::sqrt(r(0, 0).real() * r(3, 3).real()), 0.0);
}

bool is_bell_diagonal(const CMat& rho, double tol) {
  if (rho.rows() != 4) return false;
  const TwoQubitBloch q = bloch_of(rho);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(q.a[i]) > tol || std::abs(q.b[i]) > tol) return false;
    for (int j = 0; j < 3; ++j)
      if (i != j && std::abs(q.T[i][j]) > tol) return false;
  }
  return true;
}

DensityMatrix bell_diagonal_state(double c1, double c2, double c3) {
  const double l[4] = {(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4, (1 + c1 - c2 + c3) / 4, (1 + c1 + c2 - c3) / 4};
  for (double x : l)
    if (x < -1e-12) throw InvalidInput("Bell-diagonal parameters do not give a positive state");
  CMat r = CMat::Zero(4, 4);
  r(0, 0) = r(3, 3) = (1.0 + c3) / 4.0;
  r(1, 1) = r(2, 2) = (1.0 - c3) / 4.0;
  r(0, 3) = r(3, 0) = (c1 - c2) / 4.0;
  r(1, 2) = r(2, 1) = (c1 + c2) / 4.0;
  return {{2, 2}, r};
}

QdCc qd_cc_bell_diagonal(double c1, double c2, double c3) {
  const double l[4] = {(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4, (1 + c1 - c2 + c3) / 4, (1 + c1 + c2 - c3) / 4};
  double I = 2.0;
  for (double x : l) {
    if (x < -1e-12) throw InvalidInput("Bell-diagonal parameters do not give a positive state");
    if (x > 0.0) I += x * std::log2(x);
  }
  const double c = std::min(std::max({std::abs(c1), std::abs(c2), std::abs(c3)}), 1.0);
  double CC = 0.0;
  if (c > 0.0) CC = (1.0 - c) / 2.0 * (c < 1.0 ? std::log2(1.0 - c) : 0.0) + (1.0 + c) / 2.0 * std::log2(1.0 + c);
  return {I - CC, CC, I};
}

QdCc qd_cc(const DensityMatrix& rho, QdMethod method) {
  check_two_qubit(rho);
  const bool bell = is_bell_diagonal(rho.data);
  if (method == QdMethod::bell_diagonal && !bell) throw InvalidInput("state is not Bell-diagonal");
  if (method == QdMethod::bell_diagonal || (method == QdMethod::automatic && bell)) {
    const TwoQubitBloch q = bloch_of(rho.data);
    return qd_cc_bell_diagonal(q.T[0][0], q.T[1][1], q.T[2][2]);
  }
  const double I = mutual_information(rho, trivial_partition({2, 2}));
  // measurement on B: swap the qubits and measure the first
  const double CC = classical_correlation_numeric(permute_factors(rho.data, {2, 2}, {1, 0}));
  return {I - CC, CC, I};
}

TheoremCheck theorem_qd_eq_cc(double c1, double c2, double c3, double tol) {
  bell_diagonal_state(c1, c2, c3);  // validates
  const double c[3] = {c1, c2, c3};
  TheoremCheck out;
  for (int k = 0; k < 3 && !out.holds; ++k) {
    const double ci = c[(k + 1) % 3], cj = c[(k + 2) % 3];
    if (std::abs(ci - cj) <= tol && std::abs(c[k] + ci * ci) <= tol) {
      out.holds = true;
      out.c = ci;
    }
  }
  const QdCc q = qd_cc_bell_diagonal(c1, c2, c3);
  out.I = q.I;
  out.CC = q.CC;
  out.QD = q.QD;
  if (out.holds) {
    const double x = std::abs(out.c);
    out.I_formula = (x < 1.0 ? (1.0 - x) * std::log2(1.0 - x) : 0.0) + (1.0 + x) * std::log2(1.0 + x);
  }
  return out;
}

Monogamy monogamy(const XXParams& p) {
  const ThermalState st = thermal_state(p);
  Monogamy m;
  const QdCc q = qd_cc(st.rho);
  m.QD_AB = q.QD;
  m.CC_AB = q.CC;
  m.I_AB = q.I;
  m.EN_AB = eof_from_concurrence(std::min(concurrence(st.rho), 1.0));
  m.S_A = von_neumann_entropy(reduce(st.rho.data, st.rho.dims, {0}));
  m.EN_AE = m.S_A - m.CC_AB;
  m.CC_AE = m.S_A - m.EN_AB;
  m.QD_AE = m.EN_AB + m.EN_AE - m.QD_AB;
  m.identity_residual = std::abs(0.5 * m.I_AB - (m.EN_AE + m.EN_AB - m.QD_AE));
  return m;
}

double critical_temperature(double B1, double J) {
  if (!std::isfinite(B1) || !std::isfinite(J)) throw InvalidInput("parameters must be finite");
  if (J == 0.0) throw InvalidInput("XX coupling J must be nonzero");
  const double D = std::sqrt(4.0 * B1 * B1 + J * J);
  const double a = std::asinh(D);
  auto f = [D](double T) { return std::sinh(D / T) - D; };
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, D / (2.0 * a), 2.0 * D / a,
                                                   boost::math::tools::eps_tolerance<double>(40), iters);
  return 0.5 * (r.first + r.second);
}

double zero_concurrence_half_width(double T, double J) {
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidInput("temperature must be positive");
  if (J == 0.0 || !std::isfinite(J)) throw InvalidInput("XX coupling J must be nonzero");
  // C = 0 iff sinh(D/T) <= D; that needs T > 1 and D below the positive root.
  if (T <= 1.0) return 0.0;
  auto f = [T](double D) { return std::sinh(D / T) - D; };
  const double lo = T * std::acosh(T);  // minimum of f, negative
  double hi = 2.0 * lo;
  while (f(hi) < 0.0) hi *= 2.0;
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(40), iters);
  const double Dstar = 0.5 * (r.first + r.second);
  if (Dstar <= std::abs(J)) return 0.0;
  return std::sqrt(Dstar * Dstar - J * J) / 2.0;
}

}  // namespace qgeom
