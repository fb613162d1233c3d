// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace qgeom {

namespace {

Dims strides_of(const Dims& dims) {
  Dims s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) s[k] = s[k + 1] * dims[k + 1];
  return s;
}

// new index of every old index under a factor permutation
std::vector<int> permutation_map(const Dims& dims, const std::vector<int>& order) {
  const int m = static_cast<int>(dims.size());
  if (static_cast<int>(order.size()) != m) throw InvalidInput("permute_factors: order size mismatch");
  std::vector<int> seen(m, 0);
  for (int o : order) {
    if (o < 0 || o >= m || seen[o]) throw InvalidInput("permute_factors: order is not a permutation");
    seen[o] = 1;
  }
  Dims nd(m);
  for (int k = 0; k < m; ++k) nd[k] = dims[order[k]];
  const Dims os = strides_of(dims), ns = strides_of(nd);
  Dims pos(m);  // new stride of each old factor
  for (int k = 0; k < m; ++k) pos[order[k]] = ns[k];
  const int D = product(dims);
  std::vector<int> map(D);
  for (int i = 0; i < D; ++i) {
    int rem = i, j = 0;
    for (int k = 0; k < m; ++k) {
      const int digit = rem / os[k];
      rem -= digit * os[k];
      j += digit * pos[k];
    }
    map[i] = j;
  }
  return map;
}

void check_dims(const Dims& dims) {
  if (dims.empty()) throw InvalidInput("empty dimension list");
  for (int d : dims)
    if (d < 1) throw InvalidInput("dimensions must be positive");
  if (product(dims) > 4096) throw InvalidInput("total dimension too large");
}

}  // namespace

PartitionSpec make_partition(std::vector<std::vector<int>> subsets, const Dims& factor_dims) {
  check_dims(factor_dims);
  const int m = static_cast<int>(factor_dims.size());
  std::vector<int> used(m, 0);
  PartitionSpec p;
  p.factor_dims = factor_dims;
  for (auto& s : subsets) {
    if (s.empty()) throw InvalidInput("partition: empty subset");
    int d = 1;
    for (int f : s) {
      if (f < 0 || f >= m) throw InvalidInput("partition: factor index out of range");
      if (used[f]++) throw InvalidInput("partition: subsets overlap");
      d *= factor_dims[f];
    }
    if (d < 2) throw InvalidInput("partition: local dimension must be >= 2");
    p.local_dims.push_back(d);
  }
  for (int f = 0; f < m; ++f)
    if (!used[f]) throw InvalidInput("partition: subsets do not cover all factors");
  p.subsets = std::move(subsets);
  return p;
}

PartitionSpec trivial_partition(const Dims& factor_dims) {
  std::vector<std::vector<int>> s;
  for (int k = 0; k < static_cast<int>(factor_dims.size()); ++k) s.push_back({k});
  return make_partition(s, factor_dims);
}

PartitionSpec parse_partition(const std::string& spec, const Dims& factor_dims) {
  std::vector<std::vector<int>> subsets;
  std::stringstream groups(spec);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> s;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        s.push_back(v);
      } catch (const std::exception&) {
        throw InvalidInput("partition: cannot parse '" + item + "'");
      }
    }
    subsets.push_back(s);
  }
  return make_partition(subsets, factor_dims);
}

PureState make_pure(const Dims& dims, const CVec& amp, bool normalize) {
  check_dims(dims);
  if (amp.size() != product(dims)) throw InvalidInput("pure state: amplitude length mismatch");
  const double n = amp.norm();
  if (normalize) {
    if (n == 0.0) throw InvalidInput("pure state: zero vector");
    return {dims, amp / n};
  }
  if (std::abs(n - 1.0) > 1e-8) throw InvalidInput("pure state: not normalized");
  return {dims, amp};
}

DensityMatrix make_density(const Dims& dims, const CMat& data) {
  check_dims(dims);
  const int D = product(dims);
  if (data.rows() != D || data.cols() != D) throw InvalidInput("density matrix: size mismatch");
  if ((data - data.adjoint()).cwiseAbs().maxCoeff() > 1e-8) throw InvalidInput("density matrix: not Hermitian");
  if (std::abs(data.trace() - 1.0) > 1e-8) throw InvalidInput("density matrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMat> es(data, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8) throw InvalidInput("density matrix: not positive");
  return {dims, data};
}

DensityMatrix from_pure(const PureState& psi) {
  const PureState p = make_pure(psi.dims, psi.amp, false);
  return {p.dims, p.amp * p.amp.adjoint()};
}

CVec permute_factors(const CVec& amp, const Dims& dims, const std::vector<int>& order) {
  const auto map = permutation_map(dims, order);
  CVec out(amp.size());
  for (int i = 0; i < amp.size(); ++i) out(map[i]) = amp(i);
  return out;
}

CMat permute_factors(const CMat& m, const Dims& dims, const std::vector<int>& order) {
  const auto map = permutation_map(dims, order);
  CMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(map[i], map[j]) = m(i, j);
  return out;
}

namespace {
std::vector<int> flat_order(const PartitionSpec& part) {
  std::vector<int> order;
  for (const auto& s : part.subsets) order.insert(order.end(), s.begin(), s.end());
  return order;
}
}  // namespace

PureState regroup(const PureState& psi, const PartitionSpec& part) {
  if (psi.dims != part.factor_dims) throw InvalidInput("regroup: dims do not match partition");
  return {part.local_dims, permute_factors(psi.amp, psi.dims, flat_order(part))};
}

DensityMatrix regroup(const DensityMatrix& rho, const PartitionSpec& part) {
  if (rho.dims != part.factor_dims) throw InvalidInput("regroup: dims do not match partition");
  return {part.local_dims, permute_factors(rho.data, rho.dims, flat_order(part))};
}

CMat reduce(const CMat& rho, const Dims& dims, const std::vector<int>& keep_in) {
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const int m = static_cast<int>(dims.size());
  std::vector<int> order = keep;
  for (int k = 0; k < m; ++k)
    if (!std::binary_search(keep.begin(), keep.end(), k)) order.push_back(k);
  for (int k : keep)
    if (k < 0 || k >= m) throw InvalidInput("partial trace: index out of range");
  int dk = 1;
  for (int k : keep) dk *= dims[k];
  const int dt = product(dims) / dk;
  const CMat p = permute_factors(rho, dims, order);
  CMat out = CMat::Zero(dk, dk);
  for (int a = 0; a < dk; ++a)
    for (int b = 0; b < dk; ++b) {
      cplx s = 0.0;
      for (int t = 0; t < dt; ++t) s += p(a * dt + t, b * dt + t);
      out(a, b) = s;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const PartitionSpec& part,
                            const std::vector<int>& keep) {
  if (keep.empty()) throw InvalidInput("partial trace: keep set is empty");
  for (int k : keep)
    if (k < 0 || k >= part.size()) throw InvalidInput("partial trace: invalid subset index");
  const DensityMatrix g = regroup(rho, part);
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  Dims d;
  for (int k : ks) d.push_back(part.local_dims[k]);
  return {d, reduce(g.data, g.dims, ks)};
}

// ---------------------------------------------------------------------------
// Bloch decomposition through mode products on the (d_k^2)-slot tensor.

namespace {

using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// M[a, r*d+c] = Tr-pairing of basis element a with |r><c|, i.e. B_a(c, r).
CMat analysis_map_uncached(int d) {
  const auto& L = generators(d).generators;
  CMat M = CMat::Zero(d * d, d * d);
  for (int r = 0; r < d; ++r) M(0, r * d + r) = 1.0;
  for (int a = 0; a < d * d - 1; ++a)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) M(a + 1, r * d + c) = L[a](c, r);
  return M;
}

// N[r*d+c, a] = B_a(r, c)
CMat synthesis_map_uncached(int d) {
  const auto& L = generators(d).generators;
  CMat N = CMat::Zero(d * d, d * d);
  for (int r = 0; r < d; ++r) N(r * d + r, 0) = 1.0;
  for (int a = 0; a < d * d - 1; ++a)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) N(r * d + c, a + 1) = L[a](r, c);
  return N;
}

void mode_product(std::vector<cplx>& data, const Dims& n, int k, const CMat& M) {
  int left = 1, right = 1;
  for (int j = 0; j < k; ++j) left *= n[j];
  for (int j = k + 1; j < static_cast<int>(n.size()); ++j) right *= n[j];
  const int nk = n[k];
  const int mk = static_cast<int>(M.rows());
  std::vector<cplx> out(static_cast<size_t>(left) * mk * right);
  for (int l = 0; l < left; ++l) {
    Eigen::Map<const RowMat> in(data.data() + static_cast<size_t>(l) * nk * right, nk, right);
    Eigen::Map<RowMat> o(out.data() + static_cast<size_t>(l) * mk * right, mk, right);
    o.noalias() = M * in;
  }
  data.swap(out);
}

// W[(a*d + r), c] = B_a(r, c)
CMat basis_action_uncached(int d) {
  const auto& L = generators(d).generators;
  CMat W = CMat::Zero(d * d * d, d);
  for (int r = 0; r < d; ++r) W(r, r) = 1.0;
  for (int a = 0; a < d * d - 1; ++a)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) W((a + 1) * d + r, c) = L[a](r, c);
  return W;
}

std::mutex map_mutex;

template <CMat (*Build)(int)>
const CMat& cached(int d) {
  static std::map<int, CMat> cache;
  std::lock_guard<std::mutex> lock(map_mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, Build(d)).first;
  return it->second;
}

const CMat& analysis_map(int d) { return cached<analysis_map_uncached>(d); }
const CMat& synthesis_map(int d) { return cached<synthesis_map_uncached>(d); }
const CMat& basis_action(int d) { return cached<basis_action_uncached>(d); }

// Coefficients Tr(rho B_a1 x ... x B_am) on the (d_k^2)-slot grid -> decomposition.
BlochDecomposition assemble(const std::vector<cplx>& data, const PartitionSpec& part, const Dims& d) {
  const int m = static_cast<int>(d.size());
  Dims n(m);
  for (int k = 0; k < m; ++k) n[k] = d[k] * d[k];
  const Dims ns = strides_of(n);
  BlochDecomposition bd;
  bd.partition = part;
  bd.coherence.resize(m);
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> S;
    double pref = 1.0;
    int size = 1;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) {
        S.push_back(k);
        pref *= d[k] / 2.0;
        size *= n[k] - 1;
      }
    RVec t(size);
    for (int flat = 0; flat < size; ++flat) {
      int rem = flat, pos = 0;
      for (int idx = static_cast<int>(S.size()) - 1; idx >= 0; --idx) {
        const int k = S[idx];
        const int a = rem % (n[k] - 1);
        rem /= n[k] - 1;
        pos += (a + 1) * ns[k];
      }
      t(flat) = pref * data[pos].real();
    }
    if (S.size() == 1)
      bd.coherence[S[0]] = std::move(t);
    else
      bd.correlations.emplace(S, std::move(t));
  }
  return bd;
}

}  // namespace

const RVec& BlochDecomposition::tensor(const std::vector<int>& key) const {
  auto it = correlations.find(key);
  if (it == correlations.end()) throw InvalidInput("bloch: no correlation tensor for that subset combination");
  return it->second;
}

RMat BlochDecomposition::matrix(int a, int b) const {
  const bool swap = a > b;
  const RVec& t = tensor(swap ? std::vector<int>{b, a} : std::vector<int>{a, b});
  const int na = partition.local_dims[swap ? b : a] * partition.local_dims[swap ? b : a] - 1;
  const int nb = partition.local_dims[swap ? a : b] * partition.local_dims[swap ? a : b] - 1;
  RMat m(na, nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) m(i, j) = t(i * nb + j);
  return swap ? RMat(m.transpose()) : m;
}

const RVec& BlochDecomposition::top() const {
  std::vector<int> all(partition.size());
  std::iota(all.begin(), all.end(), 0);
  return tensor(all);
}

BlochDecomposition bloch_decompose(const DensityMatrix& rho_in, const PartitionSpec& part) {
  const DensityMatrix rho = regroup(rho_in, part);
  const Dims& d = rho.dims;
  const int m = static_cast<int>(d.size());
  const int D = product(d);
  Dims n(m);
  for (int k = 0; k < m; ++k) n[k] = d[k] * d[k];
  const Dims ds = strides_of(d), ns = strides_of(n);

  std::vector<cplx> data(static_cast<size_t>(product(n)));
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c) {
      int rr = r, cc = c, pos = 0;
      for (int k = 0; k < m; ++k) {
        const int rk = rr / ds[k], ck = cc / ds[k];
        rr -= rk * ds[k];
        cc -= ck * ds[k];
        pos += (rk * d[k] + ck) * ns[k];
      }
      data[pos] = rho.data(r, c);
    }
  for (int k = 0; k < m; ++k) mode_product(data, n, k, analysis_map(d[k]));

  return assemble(data, part, d);
}

BlochDecomposition bloch_decompose(const PureState& psi_in, const PartitionSpec& part) {
  // Apply W_k[(a,r), c] = B_a(r, c) on every factor, then contract with conj(psi).
  const PureState psi = regroup(psi_in, part);
  const Dims& d = psi.dims;
  const int m = static_cast<int>(d.size());
  Dims n(m), w(m);
  for (int k = 0; k < m; ++k) {
    n[k] = d[k] * d[k];
    w[k] = n[k] * d[k];
  }
  std::vector<cplx> data(psi.amp.data(), psi.amp.data() + psi.amp.size());
  Dims shape = d;
  for (int k = 0; k < m; ++k) {
    mode_product(data, shape, k, basis_action(d[k]));
    shape[k] = w[k];
  }
  const Dims ws = strides_of(w), ds = strides_of(d), ns = strides_of(n);
  const int D = product(d);
  const int N = product(n);
  std::vector<cplx> coef(N, 0.0);
  for (int a = 0; a < N; ++a) {
    int pos_a = 0, rem = a;
    for (int k = 0; k < m; ++k) {
      const int ak = rem / ns[k];
      rem -= ak * ns[k];
      pos_a += ak * d[k] * ws[k];
    }
    cplx acc = 0.0;
    for (int r = 0; r < D; ++r) {
      int pos = pos_a, rr = r;
      for (int k = 0; k < m; ++k) {
        const int rk = rr / ds[k];
        rr -= rk * ds[k];
        pos += rk * ws[k];
      }
      acc += std::conj(psi.amp(r)) * data[pos];
    }
    coef[a] = acc;
  }
  return assemble(coef, part, d);
}

CMat reconstruct(const BlochDecomposition& bd) {
  const Dims& d = bd.partition.local_dims;
  const int m = static_cast<int>(d.size());
  Dims n(m);
  for (int k = 0; k < m; ++k) n[k] = d[k] * d[k];
  const Dims ds = strides_of(d), ns = strides_of(n);
  std::vector<cplx> data(static_cast<size_t>(product(n)), 0.0);
  data[0] = 1.0;
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> S;
    int size = 1;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) {
        S.push_back(k);
        size *= n[k] - 1;
      }
    const RVec& t = S.size() == 1 ? bd.coherence[S[0]] : bd.tensor(S);
    for (int flat = 0; flat < size; ++flat) {
      int rem = flat, pos = 0;
      for (int idx = static_cast<int>(S.size()) - 1; idx >= 0; --idx) {
        const int k = S[idx];
        const int a = rem % (n[k] - 1);
        rem /= n[k] - 1;
        pos += (a + 1) * ns[k];
      }
      data[pos] = t(flat);
    }
  }
  for (int k = 0; k < m; ++k) mode_product(data, n, k, synthesis_map(d[k]));
  const int D = product(d);
  CMat rho(D, D);
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c) {
      int rr = r, cc = c, pos = 0;
      for (int k = 0; k < m; ++k) {
        const int rk = rr / ds[k], ck = cc / ds[k];
        rr -= rk * ds[k];
        cc -= ck * ds[k];
        pos += (rk * d[k] + ck) * ns[k];
      }
      rho(r, c) = data[pos] / static_cast<double>(D);
    }
  // back to the factor order of the partition's source
  std::vector<int> order;
  for (const auto& s : bd.partition.subsets) order.insert(order.end(), s.begin(), s.end());
  std::vector<int> inverse(order.size());
  for (size_t k = 0; k < order.size(); ++k) inverse[order[k]] = static_cast<int>(k);
  Dims grouped_factors;
  for (int f : order) grouped_factors.push_back(bd.partition.factor_dims[f]);
  return permute_factors(rho, grouped_factors, inverse);
}

bool coherence_is_pure(const RVec& s, int d, const StructureConstants& sc) {
  const int n = d * d - 1;
  if (s.size() != n || sc.dim() != d) return false;
  const double target = std::sqrt(d * (d - 1) / 2.0);
  if (std::abs(s.norm() - target) > 1e-8) return false;
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += s(i) * s(j) * sc.g(i, j, k);
    if (std::abs(acc - (d - 2) * s(k)) > 1e-8) return false;
  }
  return true;
}

double von_neumann_entropy(const CMat& rho) {
  Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double e = es.eigenvalues()(i);
    if (e < -1e-10) throw InvalidInput("entropy: density matrix is not positive");
    if (e > 0.0) s -= e * std::log2(e);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.data); }

SchmidtDecomposition schmidt_decompose(const PureState& psi, const PartitionSpec& part) {
  if (part.size() != 2) throw InvalidInput("schmidt: partition must be bipartite");
  const PureState g = regroup(psi, part);
  const int da = g.dims[0], db = g.dims[1];
  CMat M(da, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) M(i, j) = g.amp(i * db + j);
  Eigen::JacobiSVD<CMat> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVec sv = svd.singularValues();
  int r = 0;
  while (r < sv.size() && sv(r) > 1e-12 * std::max(1.0, sv(0))) ++r;
  SchmidtDecomposition out;
  out.coefficients = sv.head(r);
  out.left = svd.matrixU().leftCols(r);
  out.right = svd.matrixV().leftCols(r).conjugate();
  for (int k = 0; k < r; ++k) {
    int i = 0;
    while (i < da && std::abs(out.left(i, k)) < 1e-12) ++i;
    if (i == da) continue;
    const cplx ph = out.left(i, k) / std::abs(out.left(i, k));
    out.left.col(k) *= std::conj(ph);
    out.right.col(k) *= ph;
  }
  return out;
}

double mutual_information(const DensityMatrix& rho, const PartitionSpec& part) {
  if (part.size() != 2) throw InvalidInput("mutual information: partition must be bipartite");
  const DensityMatrix g = regroup(rho, part);
  const double sa = von_neumann_entropy(reduce(g.data, g.dims, {0}));
  const double sb = von_neumann_entropy(reduce(g.data, g.dims, {1}));
  return sa + sb - von_neumann_entropy(g.data);
}

PureState random_pure(const Dims& dims, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  CVec v(product(dims));
  for (int i = 0; i < v.size(); ++i) v(i) = cplx(nd(rng), nd(rng));
  return {dims, v / v.norm()};
}

DensityMatrix random_density(const Dims& dims, std::mt19937_64& rng, int rank) {
  std::normal_distribution<double> nd;
  const int D = product(dims);
  const int r = rank > 0 ? rank : D;
  CMat G(D, r);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < r; ++j) G(i, j) = cplx(nd(rng), nd(rng));
  CMat rho = G * G.adjoint();
  rho /= rho.trace().real();
  return {dims, rho};
}

CMat random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  CMat G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = cplx(nd(rng), nd(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMat> qr(G);
  CMat Q = qr.householderQ();
  CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const cplx r = R(i, i);
    if (std::abs(r) > 0) Q.col(i) *= r / std::abs(r);
  }
  return Q;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat kron(const std::vector<CMat>& ops) {
  CMat out = CMat::Identity(1, 1);
  for (const auto& o : ops) out = kron(out, o);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

cplx parse_complex(std::string tok) {
  auto fail = [&]() { return InvalidInput("density file: bad complex entry '" + tok + "'"); };
  if (tok.empty()) throw fail();
  std::string t = tok;
  const bool imag = t.back() == 'j' || t.back() == 'i';
  try {
    if (!imag) {
      size_t used = 0;
      double re = std::stod(t, &used);
      if (used != t.size()) throw fail();
      return {re, 0.0};
    }
    t.pop_back();
    size_t split = std::string::npos;
    for (size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    auto num = [&](const std::string& s) {
      if (s == "+" || s.empty()) return 1.0;
      if (s == "-") return -1.0;
      size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw fail();
      return v;
    };
    if (split == std::string::npos) return {0.0, num(t)};
    size_t used = 0;
    const std::string rs = t.substr(0, split);
    double re = std::stod(rs, &used);
    if (used != rs.size()) throw fail();
    return {re, num(t.substr(split))};
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw fail();
  }
}

}  // namespace

DensityMatrix read_density(std::istream& in) {
  std::string line;
  Dims dims;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::stringstream ss(line);
    std::string kw;
    ss >> kw;
    if (kw != "dims") throw InvalidInput("density file: first line must start with 'dims'");
    int d;
    while (ss >> d) dims.push_back(d);
    if (!ss.eof()) throw InvalidInput("density file: bad dims line");
    break;
  }
  if (dims.empty()) throw InvalidInput("density file: missing dims");
  for (int d : dims)
    if (d < 2) throw InvalidInput("density file: each dimension must be >= 2");
  check_dims(dims);
  const int D = product(dims);
  if (D > 256) throw InvalidInput("density file: total dimension exceeds 256");
  CMat rho(D, D);
  int row = 0;
  while (row < D && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string tok;
    int col = 0;
    while (ss >> tok) {
      if (col >= D) throw InvalidInput("density file: too many entries in a row");
      rho(row, col++) = parse_complex(tok);
    }
    if (col != D) throw InvalidInput("density file: too few entries in a row");
    ++row;
  }
  if (row != D) throw InvalidInput("density file: too few rows");
  return make_density(dims, rho);
}

DensityMatrix read_density_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open state file: " + path);
  return read_density(f);
}

void write_density(std::ostream& out, const DensityMatrix& rho) {
  out << "dims";
  for (int d : rho.dims) out << ' ' << d;
  out << '\n' << std::setprecision(17);
  for (int i = 0; i < rho.data.rows(); ++i) {
    for (int j = 0; j < rho.data.cols(); ++j) {
      const cplx z = rho.data(i, j);
      if (j) out << ' ';
      out << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << 'j';
    }
    out << '\n';
  }
}

}  // namespace qgeom
