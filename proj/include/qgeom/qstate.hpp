// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qgeom/core.hpp"
#include "qgeom/su_basis.hpp"

namespace qgeom {

/// Grouping of tensor factors (modes or qudits) into subsystems.
/// local_dims[k] is the product of the factor dims in subsets[k].
struct PartitionSpec {
  std::vector<std::vector<int>> subsets;
  Dims factor_dims;
  Dims local_dims;

  int size() const { return static_cast<int>(subsets.size()); }
};

PartitionSpec make_partition(std::vector<std::vector<int>> subsets, const Dims& factor_dims);
// One subset per factor.
PartitionSpec trivial_partition(const Dims& factor_dims);
// "0,1;2,3" with zero-based factor indices.
PartitionSpec parse_partition(const std::string& spec, const Dims& factor_dims);

struct PureState {
  Dims dims;
  CVec amp;
};

struct DensityMatrix {
  Dims dims;
  CMat data;
};

PureState make_pure(const Dims& dims, const CVec& amp, bool normalize = false);
DensityMatrix make_density(const Dims& dims, const CMat& data);

DensityMatrix from_pure(const PureState& psi);

// Reorder factors so that each subset is contiguous; result dims are local_dims.
PureState regroup(const PureState& psi, const PartitionSpec& part);
DensityMatrix regroup(const DensityMatrix& rho, const PartitionSpec& part);

// Permute tensor factors: factor order[k] of the input becomes factor k.
CVec permute_factors(const CVec& amp, const Dims& dims, const std::vector<int>& order);
CMat permute_factors(const CMat& m, const Dims& dims, const std::vector<int>& order);

DensityMatrix partial_trace(const DensityMatrix& rho, const PartitionSpec& part,
                            const std::vector<int>& keep);
// Trace over factors not in keep; dims taken as given.
CMat reduce(const CMat& rho, const Dims& dims, const std::vector<int>& keep);

/// Coherence vectors and correlation tensors with s = (d/2) Tr(rho l) and
/// t = prod_k (d_k/2) Tr(rho l x ... x l).
struct BlochDecomposition {
  PartitionSpec partition;
  std::vector<RVec> coherence;
  // Keyed by ascending subset indices (size >= 2); flattened row-major,
  // first listed subset slowest.
  std::map<std::vector<int>, RVec> correlations;

  const RVec& tensor(const std::vector<int>& key) const;
  RMat matrix(int a, int b) const;  // two-subset tensor as (d_a^2-1) x (d_b^2-1)
  const RVec& top() const;
};

BlochDecomposition bloch_decompose(const DensityMatrix& rho, const PartitionSpec& part);
BlochDecomposition bloch_decompose(const PureState& psi, const PartitionSpec& part);
CMat reconstruct(const BlochDecomposition& bd);

bool coherence_is_pure(const RVec& s, int d, const StructureConstants& sc);

double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const CMat& rho);

struct SchmidtDecomposition {
  RVec coefficients;  // descending, sum of squares = 1
  CMat left;          // columns
  CMat right;
};
SchmidtDecomposition schmidt_decompose(const PureState& psi, const PartitionSpec& part);

double mutual_information(const DensityMatrix& rho, const PartitionSpec& part);

// Random sampling helpers used by tests and optimizers.
PureState random_pure(const Dims& dims, std::mt19937_64& rng);
DensityMatrix random_density(const Dims& dims, std::mt19937_64& rng, int rank = 0);
CMat random_unitary(int d, std::mt19937_64& rng);

CMat kron(const CMat& a, const CMat& b);
CMat kron(const std::vector<CMat>& ops);

// Text format: "dims d1 ... dm" then rows of entries "re+imj".
DensityMatrix read_density(std::istream& in);
DensityMatrix read_density_file(const std::string& path);
void write_density(std::ostream& out, const DensityMatrix& rho);

}  // namespace qgeom
