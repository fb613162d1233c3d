// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qgeom/qstate.hpp"
#include "qgeom/su_basis.hpp"

using namespace qgeom;

namespace {

// Coherence vector of the computational basis state |k> at dimension d.
RVec basis_coherence(int d, int k) {
  CMat r = CMat::Zero(d, d);
  r(k, k) = 1.0;
  const auto& L = generators(d).generators;
  RVec s(L.size());
  for (size_t i = 0; i < L.size(); ++i) s(i) = 0.5 * d * (r * L[i]).trace().real();
  return s;
}

}  // namespace

TEST_CASE("generator count, hermiticity and orthogonality") {
  for (int d : {2, 3, 4, 5}) {
    const GeneratorBasis& b = generators(d);
    REQUIRE(b.size() == d * d - 1);
    for (int i = 0; i < b.size(); ++i) {
      CHECK((b.generators[i] - b.generators[i].adjoint()).norm() < 1e-14);
      CHECK(std::abs(b.generators[i].trace()) < 1e-14);
      for (int j = 0; j < b.size(); ++j) {
        const double ip = (b.generators[i] * b.generators[j]).trace().real();
        CHECK(std::abs(ip - (i == j ? 2.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("d = 2 gives the Pauli matrices") {
  const auto& L = generators(2).generators;
  CMat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  sz << 1, 0, 0, -1;
  CHECK((L[0] - sx).norm() < 1e-15);
  CHECK((L[1] - sy).norm() < 1e-15);
  CHECK((L[2] - sz).norm() < 1e-15);
}

TEST_CASE("d = 3 gives the Gell-Mann matrices in standard order") {
  const auto& L = generators(3).generators;
  CHECK(L[0](0, 1) == cplx(1, 0));
  CHECK(L[1](0, 1) == cplx(0, -1));
  CHECK(std::abs(L[2](0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(L[2](1, 1) + 1.0) < 1e-15);
  CHECK(L[3](0, 2) == cplx(1, 0));
  CHECK(L[4](0, 2) == cplx(0, -1));
  CHECK(L[5](1, 2) == cplx(1, 0));
  CHECK(L[6](1, 2) == cplx(0, -1));
  CHECK(std::abs(L[7](2, 2).real() + 2.0 / std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("diagonal generators sit at (l+1)^2 - 2") {
  for (int d : {2, 3, 4, 6}) {
    const GeneratorBasis& b = generators(d);
    for (int l = 1; l < d; ++l) {
      const CMat& w = b.generators[GeneratorBasis::diagonal_index(l)];
      CHECK((w - CMat(w.diagonal().asDiagonal())).norm() < 1e-15);
      CHECK(b.labels[GeneratorBasis::diagonal_index(l)].kind == 'w');
    }
  }
}

TEST_CASE("invalid dimension") { CHECK_THROWS_AS(build_generators(1), InvalidInput); }

TEST_CASE("structure constants at d = 2 and 3") {
  const StructureConstants& s2 = structure_constants(2);
  CHECK(std::abs(s2.f(0, 1, 2) - 1.0) < 1e-14);
  CHECK(std::abs(s2.f(1, 0, 2) + 1.0) < 1e-14);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(std::abs(s2.g(i, j, k)) < 1e-14);
  const StructureConstants& s3 = structure_constants(3);
  CHECK(std::abs(s3.f(0, 1, 2) - 1.0) < 1e-14);
  CHECK(std::abs(s3.f(3, 4, 7) - std::sqrt(3.0) / 2) < 1e-14);
  CHECK(std::abs(s3.f(5, 6, 7) - std::sqrt(3.0) / 2) < 1e-14);
  CHECK(std::abs(s3.f(0, 3, 6) - 0.5) < 1e-14);
  CHECK(std::abs(s3.g(0, 0, 7) - 1.0 / std::sqrt(3.0)) < 1e-14);
}

TEST_CASE("f antisymmetric, g symmetric at d = 4") {
  const StructureConstants& s = structure_constants(4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, s.n() - 1);
  for (int t = 0; t < 500; ++t) {
    const int i = pick(rng), j = pick(rng), k = pick(rng);
    CHECK(std::abs(s.f(i, j, k) + s.f(j, i, k)) < 1e-13);
    CHECK(std::abs(s.f(i, j, k) + s.f(i, k, j)) < 1e-13);
    CHECK(std::abs(s.g(i, j, k) - s.g(j, i, k)) < 1e-13);
    CHECK(std::abs(s.g(i, j, k) - s.g(k, j, i)) < 1e-13);
  }
}

TEST_CASE("product reconstruction l_i l_j = (2/d) d_ij I + (i f + g) l_k") {
  for (int d : {2, 3, 4}) {
    const auto& L = generators(d).generators;
    const StructureConstants& s = structure_constants(d);
    const int n = s.n();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CMat rhs = (i == j ? 2.0 / d : 0.0) * CMat::Identity(d, d);
        for (int k = 0; k < n; ++k) rhs += cplx(s.g(i, j, k), s.f(i, j, k)) * L[k];
        CHECK((L[i] * L[j] - rhs).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
}

TEST_CASE("star product") {
  const StructureConstants& s3 = structure_constants(3);
  // idempotence holds for the unit coherence vector
  const RVec e = basis_coherence(3, 0).normalized();
  CHECK((star_product(e, e, s3) - e).norm() < 1e-12);
  CHECK(star_product(RVec::Zero(8), e, s3).norm() < 1e-15);
  CHECK(star_product(RVec::Zero(8), RVec::Zero(8), s3).norm() < 1e-15);
  for (int d : {3, 4})
    for (int k = 0; k < d; ++k) {
      const RVec v = basis_coherence(d, k).normalized();
      CHECK((star_product(v, v, structure_constants(d)) - v).norm() < 1e-10);
    }
  CHECK_THROWS_AS(star_product(RVec::Zero(3), RVec::Zero(3), structure_constants(2)), InvalidInput);
}
