// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/su_basis.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace qgeom {

GeneratorBasis build_generators(int d) {
  if (d < 2) throw InvalidInput("build_generators: dimension must be >= 2");
  GeneratorBasis b;
  b.dim = d;
  b.ordering_tag = "interleaved:u_jk,v_jk(j<k),w_{k-1};w_l@(l+1)^2-1";
  const cplx I(0.0, 1.0);
  for (int k = 1; k < d; ++k) {
    for (int j = 0; j < k; ++j) {
      CMat u = CMat::Zero(d, d);
      u(j, k) = 1.0;
      u(k, j) = 1.0;
      b.generators.push_back(u);
      b.labels.push_back({'u', j + 1, k + 1});
      CMat v = CMat::Zero(d, d);
      v(j, k) = -I;
      v(k, j) = I;
      b.generators.push_back(v);
      b.labels.push_back({'v', j + 1, k + 1});
    }
    const int l = k;
    CMat w = CMat::Zero(d, d);
    for (int j = 0; j < l; ++j) w(j, j) = 1.0;
    w(l, l) = -static_cast<double>(l);
    w *= std::sqrt(2.0 / (l * (l + 1.0)));
    b.generators.push_back(w);
    b.labels.push_back({'w', l, l});
  }
  return b;
}

namespace {

std::mutex cache_mutex;
std::map<int, std::unique_ptr<GeneratorBasis>> basis_cache;
std::map<int, std::unique_ptr<StructureConstants>> sc_cache;

}  // namespace

const GeneratorBasis& generators(int d) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = basis_cache.find(d);
  if (it == basis_cache.end())
    it = basis_cache.emplace(d, std::make_unique<GeneratorBasis>(build_generators(d))).first;
  return *it->second;
}

StructureConstants::StructureConstants(int dim, std::vector<double> f, std::vector<double> g)
    : dim_(dim), n_(dim * dim - 1), f_(std::move(f)), g_(std::move(g)) {}

StructureConstants structure_constants(const GeneratorBasis& basis) {
  const int n = basis.size();
  if (n != basis.dim * basis.dim - 1) throw InvalidInput("structure_constants: malformed basis");
  std::vector<double> f(static_cast<size_t>(n) * n * n), g(f.size());
  const auto& L = basis.generators;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CMat prod = L[i] * L[j];
      CMat rprod = L[j] * L[i];
      CMat comm = prod - rprod;
      CMat anti = prod + rprod;
      for (int k = 0; k < n; ++k) {
        // Tr(A B) for Hermitian B as a sum over elementwise products.
        cplx tc = (comm.transpose().cwiseProduct(L[k])).sum();
        cplx ta = (anti.transpose().cwiseProduct(L[k])).sum();
        size_t idx = (static_cast<size_t>(i) * n + j) * n + k;
        f[idx] = (tc / cplx(0.0, 4.0)).real();
        g[idx] = ta.real() / 4.0;
      }
    }
  }
  return StructureConstants(basis.dim, std::move(f), std::move(g));
}

const StructureConstants& structure_constants(int d) {
  const GeneratorBasis& b = generators(d);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = sc_cache.find(d);
  if (it == sc_cache.end())
    it = sc_cache.emplace(d, std::make_unique<StructureConstants>(structure_constants(b))).first;
  return *it->second;
}

RVec star_product(const RVec& a, const RVec& b, const StructureConstants& sc) {
  const int d = sc.dim();
  if (d < 3) throw InvalidInput("star_product: requires d >= 3");
  const int n = sc.n();
  if (a.size() != n || b.size() != n) throw InvalidInput("star_product: vector length must be d^2-1");
  const double pref = std::sqrt(d * (d - 1) / 2.0) / (d - 2);
  RVec out = RVec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double ab = a(i) * b(j);
      if (ab == 0.0) continue;
      for (int k = 0; k < n; ++k) out(k) += sc.g(i, j, k) * ab;
    }
  }
  return pref * out;
}

}  // namespace qgeom
