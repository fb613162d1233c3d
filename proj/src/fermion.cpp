// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qgeom/measures.hpp"
#include "qgeom/optimize.hpp"

namespace qgeom {

namespace {

void check_modes(int modes) {
  if (modes < 1 || modes > 12) throw InvalidInput("mode count must lie in [1, 12]");
}

int bit_of(int mode, int modes) { return 1 << (modes - 1 - mode); }

PartitionSpec mode_partition(std::vector<std::vector<int>> groups, int modes) {
  return make_partition(std::move(groups), Dims(modes, 2));
}

}  // namespace

FockBasisState fock_state(int index, int modes) {
  check_modes(modes);
  if (index < 0 || index >= (1 << modes)) throw InvalidInput("fock state index out of range");
  FockBasisState s;
  s.index = index;
  s.occupations.resize(modes);
  for (int i = 0; i < modes; ++i) s.occupations[i] = (index & bit_of(i, modes)) ? 1 : 0;
  return s;
}

FockBasisState fock_state(const std::vector<int>& occ) {
  const int modes = static_cast<int>(occ.size());
  check_modes(modes);
  int index = 0;
  for (int i = 0; i < modes; ++i) {
    if (occ[i] != 0 && occ[i] != 1) throw InvalidInput("occupations must be 0 or 1");
    if (occ[i]) index |= bit_of(i, modes);
  }
  return {occ, index};
}

int parity(const FockBasisState& s) {
  int p = 1;
  for (int n : s.occupations) p *= 1 - 2 * n;
  return p;
}

std::vector<int> NumberSector::indices() const {
  std::vector<int> out;
  for (const auto& b : basis) out.push_back(b.index);
  return out;
}

NumberSector number_sector(int modes, int particles) {
  check_modes(modes);
  if (particles < 0 || particles > modes) throw InvalidInput("particle number out of range");
  NumberSector s{modes, particles, {}};
  for (int k = 0; k < (1 << modes); ++k)
    if (std::popcount(static_cast<unsigned>(k)) == particles) s.basis.push_back(fock_state(k, modes));
  return s;
}

CMat jw_operator(Ladder kind, int mode, int modes) {
  check_modes(modes);
  if (mode < 0 || mode >= modes) throw InvalidInput("jw_operator: mode index out of range");
  const int D = 1 << modes;
  const int bit = bit_of(mode, modes);
  CMat op = CMat::Zero(D, D);
  for (int k = 0; k < D; ++k) {
    const bool occupied = k & bit;
    if ((kind == Ladder::create) == occupied) continue;
    // string over the modes to the right, i.e. the lower bits
    const int sign = std::popcount(static_cast<unsigned>(k & (bit - 1))) % 2 ? -1 : 1;
    op(k ^ bit, k) = static_cast<double>(sign);
  }
  return op;
}

CMat number_operator(int mode, int modes) {
  return jw_operator(Ladder::create, mode, modes) * jw_operator(Ladder::annihilate, mode, modes);
}

CMat project(const CMat& op, const NumberSector& sector) {
  const auto idx = sector.indices();
  const int n = static_cast<int>(idx.size());
  CMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = op(idx[i], idx[j]);
  return out;
}

CVec embed(const CVec& amp, const NumberSector& sector) {
  if (amp.size() != static_cast<int>(sector.basis.size())) throw InvalidInput("embed: amplitude length mismatch");
  CVec full = CVec::Zero(1 << sector.modes);
  for (int i = 0; i < amp.size(); ++i) full(sector.basis[i].index) = amp(i);
  return full;
}

double dimer_alpha(double U, double t) {
  if (!(t > 0.0)) throw InvalidInput("hopping t must be positive");
  const double x = U / (4.0 * t);
  return x + std::sqrt(1.0 + x * x);
}

CMat dimer_hamiltonian(double t, double U) {
  if (!(t > 0.0)) throw InvalidInput("hopping t must be positive");
  const int L = 4;
  CMat H = CMat::Zero(16, 16);
  for (int s = 0; s < 2; ++s) {
    const CMat hop = jw_operator(Ladder::create, s, L) * jw_operator(Ladder::annihilate, 2 + s, L);
    H -= t * (hop + hop.adjoint());
  }
  for (int site = 0; site < 2; ++site) H += U * number_operator(2 * site, L) * number_operator(2 * site + 1, L);
  return H;
}

PureState hubbard_dimer_ground(double alpha) {
  if (!(alpha >= 1.0)) throw InvalidInput("alpha must be >= 1");
  CVec a = CVec::Zero(16);
  const double n = -1.0 / std::sqrt(2.0 * (1.0 + alpha * alpha));
  a(0b1100) = n;
  a(0b0011) = n;
  a(0b1001) = n * alpha;
  a(0b0110) = -n * alpha;
  return {Dims(4, 2), a};
}

DimerEntanglements dimer_entanglements(double alpha) {
  if (!(alpha >= 1.0)) throw InvalidInput("alpha must be >= 1");
  const double a2 = alpha * alpha, a4 = a2 * a2;
  DimerEntanglements e;
  e.E_g = 3.0 / (1.0 + a2) * std::sqrt(1.0 + 2.0 / 9.0 * a2 + a4) - 1.0;
  e.E_s = 2.0 / (1.0 + a2) * std::sqrt(13.0 * a4 + 34.0 * a2 + 13.0) - 6.0;
  e.E_vn = (std::log2(2.0 * (1.0 + a2)) - a2 * std::log2(a2 / (2.0 * (1.0 + a2)))) / (1.0 + a2);
  e.E_unequal = geometric_entanglement(hubbard_dimer_ground(alpha), mode_partition({{0}, {1, 2, 3}}, 4));
  return e;
}

DimerEntanglements dimer_entanglements_generic(double alpha) {
  const PureState psi = hubbard_dimer_ground(alpha);
  DimerEntanglements e;
  e.E_g = geometric_entanglement(psi, mode_partition({{0}, {1}, {2}, {3}}, 4));
  const PartitionSpec sites = mode_partition({{0, 1}, {2, 3}}, 4);
  e.E_s = geometric_entanglement(psi, sites);
  const PureState g = regroup(psi, sites);
  e.E_vn = von_neumann_entropy(reduce(g.amp * g.amp.adjoint(), g.dims, {0}));
  e.E_unequal = geometric_entanglement(psi, mode_partition({{0}, {1, 2, 3}}, 4));
  return e;
}

CMat trimer_hamiltonian(double beta, double t) {
  if (!(t > 0.0)) throw InvalidInput("hopping t must be positive");
  if (!(beta >= 0.0)) throw InvalidInput("beta must be >= 0");
  const int L = 6;
  CMat H = CMat::Zero(64, 64);
  for (int s = 0; s < 2; ++s)
    for (int j = 0; j < 3; ++j) {
      const int p = 2 * j + s, q = 2 * ((j + 1) % 3) + s;
      const CMat hop = jw_operator(Ladder::create, p, L) * jw_operator(Ladder::annihilate, q, L);
      H -= t * (hop + hop.adjoint());
    }
  for (int j = 0; j < 3; ++j) H += beta * t * number_operator(2 * j, L) * number_operator(2 * j + 1, L);
  return H;
}

CMat mode_permutation_operator(const std::vector<int>& perm) {
  const int modes = static_cast<int>(perm.size());
  check_modes(modes);
  std::vector<int> seen(modes, 0);
  for (int p : perm) {
    if (p < 0 || p >= modes || seen[p]) throw InvalidInput("mode permutation is not a permutation");
    seen[p] = 1;
  }
  std::vector<CMat> cd;
  for (int m = 0; m < modes; ++m) cd.push_back(jw_operator(Ladder::create, m, modes));
  const int D = 1 << modes;
  CMat R = CMat::Zero(D, D);
  for (int k = 0; k < D; ++k) {
    // |k> = s_k c^dag_{m1} ... c^dag_{mr} |vac>, modes ascending
    CVec v = CVec::Zero(D), w = CVec::Zero(D);
    v(0) = 1.0;
    w(0) = 1.0;
    for (int m = modes - 1; m >= 0; --m)
      if (k & bit_of(m, modes)) {
        v = cd[m] * v;
        w = cd[perm[m]] * w;
      }
    R.col(k) = v(k) * w;
  }
  return R;
}

TrimerGround hubbard_trimer_ground(double beta) {
  const CMat H = trimer_hamiltonian(beta);
  // S_z = +1/2: two up electrons (modes 0, 2, 4) and one down
  const int up_mask = bit_of(0, 6) | bit_of(2, 6) | bit_of(4, 6);
  NumberSector sz{6, 3, {}};
  for (const auto& b : number_sector(6, 3).basis)
    if (std::popcount(static_cast<unsigned>(b.index & up_mask)) == 2) sz.basis.push_back(b);

  Eigen::SelfAdjointEigenSolver<CMat> es(project(H, sz));
  const RVec& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  int deg = 1;
  while (deg < ev.size() && ev(deg) - ev(0) < 1e-9 * scale) ++deg;

  const CMat V = es.eigenvectors().leftCols(deg);
  const CMat R = project(mode_permutation_operator({0, 1, 4, 5, 2, 3}), sz);
  CMat m = V.adjoint() * R * V;
  m = 0.5 * (m + m.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMat> er(m);
  CVec v = V * er.eigenvectors().col(0);  // most negative reflection eigenvalue
  v.normalize();
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(best)) + 1e-12) best = i;
  v *= std::conj(v(best)) / std::abs(v(best));

  TrimerGround g;
  g.state = {Dims(6, 2), embed(v, sz)};
  g.energy = ev(0);
  g.degeneracy = deg;
  g.spectrum.assign(ev.data(), ev.data() + ev.size());
  Eigen::SelfAdjointEigenSolver<CMat> all(project(H, number_sector(6, 3)), Eigen::EigenvaluesOnly);
  g.n3_spectrum.assign(all.eigenvalues().data(), all.eigenvalues().data() + all.eigenvalues().size());
  return g;
}

TrimerEntanglements trimer_entanglements(const PureState& psi) {
  if (psi.dims != Dims(6, 2)) throw InvalidInput("trimer state must have six modes");
  TrimerEntanglements e;
  e.E_six = geometric_entanglement(psi, trivial_partition(Dims(6, 2)));
  e.E_site3 = geometric_entanglement(psi, mode_partition({{0, 1}, {2, 3}, {4, 5}}, 6));
  const PartitionSpec bi = mode_partition({{0, 1}, {2, 3, 4, 5}}, 6);
  e.E_bi = geometric_entanglement(psi, bi);
  const PureState g = regroup(psi, bi);
  e.E_vn = von_neumann_entropy(reduce(g.amp * g.amp.adjoint(), g.dims, {0}));
  return e;
}

TrimerEntanglements trimer_entanglements(double beta) { return trimer_entanglements(hubbard_trimer_ground(beta).state); }

BoundReport maximize_partition_entanglement(const NumberSector& sector, const PartitionSpec& part, int restarts,
                                            std::uint64_t seed) {
  if (part.factor_dims != Dims(sector.modes, 2)) throw InvalidInput("partition does not match the mode count");
  if (part.size() < 2) throw InvalidInput("partition needs at least two subsets");
  if (restarts < 1) throw InvalidInput("restarts must be >= 1");
  const int n = static_cast<int>(sector.basis.size());
  if (n < 1) throw InvalidInput("empty number sector");
  const Dims qubits(sector.modes, 2);
  std::vector<int> order, inverse(sector.modes);
  for (const auto& s : part.subsets) order.insert(order.end(), s.begin(), s.end());
  for (int k = 0; k < sector.modes; ++k) inverse[order[k]] = k;

  auto amplitudes = [n](const RVec& x) {
    CVec z(n);
    z(0) = x(0);
    for (int i = 1; i < n; ++i) z(i) = cplx(x(i), x(n + i - 1));
    return z;
  };
  // E is scale invariant, so the chart needs no explicit normalization.
  Objective obj = [&](const RVec& x, RVec* grad) {
    const CVec z = amplitudes(x);
    const CVec grouped = permute_factors(embed(z, sector), qubits, order);
    CVec g;
    const double E = geometric_entanglement_grad(grouped, part.local_dims, grad ? &g : nullptr);
    if (grad) {
      const CVec gf = permute_factors(g, qubits, inverse);
      grad->resize(x.size());
      for (int i = 0; i < n; ++i) {
        const cplx gi = gf(sector.basis[i].index);
        (*grad)(i) = 2.0 * gi.real();
        if (i > 0) (*grad)(n + i - 1) = 2.0 * gi.imag();
      }
    }
    return E;
  };
  const MultiStartResult ms = multistart_maximize(obj, 2 * n - 1, restarts, seed, 1e-7, 5000);
  BoundReport r;
  r.best_value = ms.best_value;
  CVec z = amplitudes(ms.best_x);
  z.normalize();
  r.best_state = {qubits, embed(z, sector)};
  r.restarts = restarts;
  r.values = ms.values;
  r.seed = seed;
  r.iterations = ms.iterations;
  r.converged_restarts = ms.converged;
  r.converged = ms.best_converged;
  return r;
}

PureState four_mode_state(double a, double b) {
  if (std::abs(a * a + b * b - 2.0) > 1e-9) throw InvalidInput("four-mode state needs a^2 + b^2 = 2");
  CVec v = CVec::Zero(16);
  v(0b1100) = cplx(0.0, a);
  v(0b1001) = 1.0;
  v(0b0110) = 1.0;
  v(0b0011) = 1.0;
  v(0b0101) = b;
  v(0b1010) = 1.0;
  return {Dims(4, 2), v / std::sqrt(6.0)};
}

CMat four_mode_hamiltonian(const FourModeParams& p) {
  const int L = 4;
  auto hop = [&](int i, int j) {
    const CMat h = jw_operator(Ladder::create, i, L) * jw_operator(Ladder::annihilate, j, L);
    return CMat(h + h.adjoint());
  };
  return p.f * hop(0, 3) + p.q * number_operator(0, L) * number_operator(1, L) + p.Gamma * number_operator(0, L) +
         p.gamma * number_operator(2, L) + p.eta * hop(0, 1);
}

PureState evolve_four_mode(const PureState& psi, const FourModeParams& p, double eps) {
  if (psi.dims != Dims(4, 2)) throw InvalidInput("four-mode state required");
  CVec v = psi.amp - cplx(0.0, eps) * (four_mode_hamiltonian(p) * psi.amp);
  return {psi.dims, v / v.norm()};
}

}  // namespace qgeom
