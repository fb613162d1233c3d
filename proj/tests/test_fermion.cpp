// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qgeom/fermion.hpp"
#include "qgeom/measures.hpp"

using namespace qgeom;

namespace {

CVec basis_vec(int index, int modes) {
  CVec v = CVec::Zero(1 << modes);
  v(index) = 1.0;
  return v;
}

CMat total_number(int modes) {
  CMat n = CMat::Zero(1 << modes, 1 << modes);
  for (int i = 0; i < modes; ++i) n += number_operator(i, modes);
  return n;
}

}  // namespace

TEST_CASE("Fock basis states and parity") {
  const FockBasisState s = fock_state(0b1000, 4);
  CHECK(s.occupations == std::vector<int>{1, 0, 0, 0});
  CHECK(fock_state({0, 1, 1, 0}).index == 0b0110);
  CHECK(parity(fock_state(0, 4)) == 1);
  CHECK(parity(fock_state(0b1100, 4)) == 1);
  CHECK(parity(fock_state(0b1000, 4)) == -1);
  CHECK_THROWS_AS(fock_state(16, 4), InvalidInput);
  CHECK_THROWS_AS(fock_state({0, 2}), InvalidInput);
}

TEST_CASE("number sectors") {
  CHECK(number_sector(6, 3).basis.size() == 20);
  CHECK(number_sector(4, 2).basis.size() == 6);
  const NumberSector s = number_sector(4, 2);
  for (size_t i = 1; i < s.basis.size(); ++i) CHECK(s.basis[i - 1].index < s.basis[i].index);
}

TEST_CASE("Jordan-Wigner operators") {
  const CMat c0 = jw_operator(Ladder::create, 0, 4);
  CHECK((c0 * basis_vec(0, 4) - basis_vec(0b1000, 4)).norm() < 1e-15);
  const CMat c1 = jw_operator(Ladder::create, 1, 4);
  CHECK((c0 * c1 * basis_vec(0, 4) + c1 * c0 * basis_vec(0, 4)).norm() < 1e-15);
  CHECK((c0 * c1 * basis_vec(0, 4)).norm() > 0.5);
  CHECK_THROWS_AS(jw_operator(Ladder::create, 4, 4), InvalidInput);
  for (int modes : {4, 6}) {
    const int D = 1 << modes;
    for (int i = 0; i < modes; ++i)
      for (int j = 0; j < modes; ++j) {
        const CMat a = jw_operator(Ladder::annihilate, i, modes), ad = jw_operator(Ladder::create, j, modes);
        const CMat b = jw_operator(Ladder::annihilate, j, modes);
        const CMat anti = a * ad + ad * a;
        CHECK((anti - (i == j ? CMat(CMat::Identity(D, D)) : CMat(CMat::Zero(D, D)))).norm() < 1e-12);
        CHECK((a * b + b * a).norm() < 1e-12);
      }
  }
}

TEST_CASE("dimer ground state") {
  for (double U : {0.0, 4.0, 40.0}) {
    const double alpha = dimer_alpha(U, 1.0);
    const PureState psi = hubbard_dimer_ground(alpha);
    const CMat H = dimer_hamiltonian(1.0, U);
    const NumberSector s = number_sector(4, 2);
    Eigen::SelfAdjointEigenSolver<CMat> es(project(H, s));
    const double e0 = es.eigenvalues()(0);
    CHECK((H * psi.amp - e0 * psi.amp).norm() < 1e-10);
    const CVec v = embed(es.eigenvectors().col(0), s);
    CHECK(std::abs(v.dot(psi.amp)) > 1.0 - 1e-10);
    CHECK((H * total_number(4) - total_number(4) * H).norm() < 1e-12);
  }
  CHECK(std::abs(dimer_alpha(0.0, 1.0) - 1.0) < 1e-15);
  CHECK_THROWS_AS(hubbard_dimer_ground(0.5), InvalidInput);
  // large alpha: spin singlet across the sites
  const PureState hl = hubbard_dimer_ground(1e6);
  CHECK(std::abs(std::abs(hl.amp(0b1001)) - 1.0 / std::sqrt(2.0)) < 1e-6);
  CHECK(std::abs(std::abs(hl.amp(0b0110)) - 1.0 / std::sqrt(2.0)) < 1e-6);
}

TEST_CASE("dimer entanglement closed forms") {
  for (int i = 0; i <= 99; ++i) {
    const double a = 1.0 + i;
    const DimerEntanglements c = dimer_entanglements(a), g = dimer_entanglements_generic(a);
    CHECK(std::abs(c.E_g - g.E_g) < 1e-10);
    CHECK(std::abs(c.E_s - g.E_s) < 1e-10);
    CHECK(std::abs(c.E_vn - g.E_vn) < 1e-10);
    CHECK(std::abs(c.E_unequal - 1.63670060815) < 1e-10);
  }
  const DimerEntanglements one = dimer_entanglements(1.0);
  CHECK(std::abs(one.E_g - (std::sqrt(5.0) - 1.0)) < 1e-12);
  CHECK(std::abs(one.E_s - (std::sqrt(60.0) - 6.0)) < 1e-12);
  CHECK(std::abs(dimer_entanglements(1e6).E_g - 2.0) < 1e-5);
}

TEST_CASE("trimer ground state") {
  const TrimerGround g0 = hubbard_trimer_ground(0.0);
  CHECK(std::abs(g0.energy + 3.0) < 1e-12);
  for (double b : {0.0, 1.0, 5.0}) {
    const TrimerGround g = hubbard_trimer_ground(b);
    CHECK(g.degeneracy == 2);
    CHECK(std::abs(g.spectrum[1] - g.spectrum[0]) < 1e-10);
    // fixed S_z = +1/2: two up electrons (modes 0, 2, 4), one down
    CMat nup = number_operator(0, 6) + number_operator(2, 6) + number_operator(4, 6);
    CHECK((nup * g.state.amp - 2.0 * g.state.amp).norm() < 1e-12);
    const CMat H = trimer_hamiltonian(b);
    CHECK((H * g.state.amp - g.energy * g.state.amp).norm() < 1e-10);
    CHECK((H * total_number(6) - total_number(6) * H).norm() < 1e-12);
  }
}

TEST_CASE("trimer entanglement anchors and shape") {
  const TrimerEntanglements e0 = trimer_entanglements(0.0), e1 = trimer_entanglements(1.0),
                            e5 = trimer_entanglements(5.0), e50 = trimer_entanglements(50.0);
  CHECK(std::abs(e0.E_six - 1.728450923957) < 1e-9);
  CHECK(std::abs(e0.E_site3 - 5.236283393602) < 1e-9);
  CHECK(std::abs(e0.E_bi - 3.846730679642) < 1e-9);
  CHECK(std::abs(e1.E_six - 1.697551427766) < 1e-9);
  CHECK(std::abs(e1.E_site3 - 5.108864109380) < 1e-9);
  CHECK(std::abs(e1.E_bi - 3.962780692075) < 1e-9);
  CHECK(std::abs(e5.E_six - 1.797263432003) < 1e-9);
  CHECK(std::abs(e5.E_site3 - 3.925137014192) < 1e-9);
  CHECK(std::abs(e5.E_bi - 3.365677105010) < 1e-9);
  CHECK(e0.E_site3 > e1.E_site3);
  CHECK(e1.E_site3 > e5.E_site3);
  CHECK(e5.E_site3 > e50.E_site3);
  CHECK(e1.E_bi > e0.E_bi);
  CHECK(e50.E_bi < e1.E_bi);
  CHECK(e50.E_six > e0.E_six);
}

TEST_CASE("four-mode evolution") {
  const PureState psi = four_mode_state(1.0, 1.0);
  CHECK(std::abs(psi.amp.norm() - 1.0) < 1e-14);
  FourModeParams p;
  p.f = 0.3;
  p.Gamma = 1.2;
  CHECK((evolve_four_mode(psi, p, 0.0).amp - psi.amp).norm() < 1e-15);
  CHECK_THROWS_AS(four_mode_state(1.0, 2.0), InvalidInput);

  // first-order amplitudes -i H psi at a = b = 1, one parameter at a time (unnormalized psi)
  const CVec raw = psi.amp * std::sqrt(6.0);
  auto first_order = [&](FourModeParams q) { return CVec(-cplx(0, 1) * four_mode_hamiltonian(q) * raw); };
  const cplx I(0, 1);
  FourModeParams q;
  q.f = 1.0;
  CVec d = first_order(q);
  CHECK(std::abs(d(0b0011) - I) < 1e-14);
  CHECK(std::abs(d(0b0101) + 1.0) < 1e-14);
  CHECK(std::abs(d(0b1010) - I) < 1e-14);
  CHECK(std::abs(d(0b1100) - I) < 1e-14);
  q = {};
  q.q = 1.0;
  d = first_order(q);
  CHECK(std::abs(d(0b1100) - 1.0) < 1e-14);
  CHECK(std::abs(d.norm() - 1.0) < 1e-14);
  q = {};
  q.Gamma = 1.0;
  d = first_order(q);
  CHECK(std::abs(d(0b1001) + I) < 1e-14);
  CHECK(std::abs(d(0b1010) + I) < 1e-14);
  CHECK(std::abs(d(0b1100) - 1.0) < 1e-14);
  q = {};
  q.gamma = 1.0;
  d = first_order(q);
  CHECK(std::abs(d(0b0011) + I) < 1e-14);
  CHECK(std::abs(d(0b0110) + I) < 1e-14);
  CHECK(std::abs(d(0b1010) + I) < 1e-14);
  q = {};
  q.eta = 1.0;
  d = first_order(q);
  for (int k : {0b0101, 0b0110, 0b1001, 0b1010}) CHECK(std::abs(d(k) + I) < 1e-14);
}

TEST_CASE("partition upper bounds, four modes") {
  const NumberSector s4 = number_sector(4, 2);
  const BoundReport site = maximize_partition_entanglement(s4, parse_partition("0,1;2,3", Dims(4, 2)), 20, 1);
  CHECK(std::abs(site.best_value - 1.74596669241) < 1e-8);
  CHECK(std::abs(site.best_value - 1.74593) < 1e-3);
  const BoundReport single = maximize_partition_entanglement(s4, trivial_partition(Dims(4, 2)), 20, 1);
  CHECK(std::abs(single.best_value - 2.0) < 1e-8);
  CHECK(site.converged);
  CHECK(single.converged);
  // maximizer stays in the sector
  for (int i = 0; i < 16; ++i)
    if (__builtin_popcount(i) != 2) CHECK(std::abs(site.best_state.amp(i)) < 1e-15);
}

TEST_CASE("partition upper bounds, six modes (site and bipartite)") {
  const NumberSector s6 = number_sector(6, 3);
  const BoundReport site3 = maximize_partition_entanglement(s6, parse_partition("0,1;2,3;4,5", Dims(6, 2)), 20, 1);
  CHECK(std::abs(site3.best_value - 6.08767123413) < 1e-7);
  const BoundReport bi = maximize_partition_entanglement(s6, parse_partition("0,1;2,3,4,5", Dims(6, 2)), 20, 1);
  CHECK(std::abs(bi.best_value - 4.15105103966) < 1e-7);
}
