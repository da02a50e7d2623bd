#pragma once

#include <set>
#include <string>
#include <vector>

#include "qtensor/decompose.hpp"
#include "qtensor/quiver.hpp"

namespace qtensor {

/// A partitioning morphism Delta on the path algebra, determined by a
/// partition {E_k | k in Q_0} of Q_0 x Q_0 with (k, k) in E_k. Only the
/// morphisms sending every positive-length path mu to mu (x) mu are modeled.
struct PartitioningMorphismSpec {
  int n_vertices = 0;
  std::vector<std::vector<std::pair<int, int>>> blocks;  // blocks[k] = E_k, sorted
};

/// The canonical choice E_k = {(k, i) | i in Q_0}; always coassociative.
PartitioningMorphismSpec canonical_partitioning_morphism(int n_vertices);

struct ValidationReport {
  bool disjoint = true;
  bool covers = true;
  bool diagonal = true;
  std::vector<std::pair<int, int>> duplicated_pairs;
  std::vector<std::pair<int, int>> missing_pairs;
  std::vector<int> bad_diagonal_blocks;  // k with (k,k) not in E_k

  bool valid() const { return disjoint && covers && diagonal; }
};

/// Checks disjointness, coverage of Q_0 x Q_0, and (k, k) in E_k.
ValidationReport validate_spec(const PartitioningMorphismSpec& p);

/// block(i, j) = the unique k with (i, j) in E_k. Requires a valid spec.
Eigen::MatrixXi block_table(const PartitioningMorphismSpec& p);

/// The chain sets L_{n,k} and R_{n,k} of n-tuples over Q_0, materialized.
struct ChainSets {
  int n = 0;
  std::vector<std::set<std::vector<int>>> L;
  std::vector<std::set<std::vector<int>>> R;
};

/// Materializes both chain-set families for n >= 2. Membership is decided by
/// folding block() over the tuple (left fold for L, right fold for R), which
/// is the chain recursion with the intermediate vertices resolved; the
/// |Q_0|^n tuples are enumerated only up to max_tuples.
ChainSets chain_sets(const PartitioningMorphismSpec& p, int n,
                     std::size_t max_tuples = 1000000);

/// Coassociativity of Delta, equivalently L_{3,k} = R_{3,k} for all k,
/// equivalently associativity of block() as a binary operation on Q_0.
bool is_coassociative(const PartitioningMorphismSpec& p);

/// All partitioning morphisms with the diagonal property on n_vertices <= 4
/// vertices: each off-diagonal pair is assigned to one of the blocks, in
/// row-major pair order with block indices counting up (deterministic).
std::vector<PartitioningMorphismSpec> enumerate_partitioning_morphisms(int n_vertices,
                                                                       bool coassociative_only);

/// Number of pointwise-simple summands added at each vertex by the n-th
/// Delta-power: c_k = sum over non-constant tuples in L_{n,k} of the product
/// of vertex dimensions. Computed by the prefix dynamic program, O(n |Q_0|^3).
std::vector<Integer> simple_correction_coeffs(const PartitioningMorphismSpec& p,
                                              const std::vector<Integer>& vertex_dims, int n);

/// Decomposition of M (x)^Delta N: the pointwise part plus per-vertex simple
/// corrections d_k = sum over (k,k) != (i,j) in E_k of dim M_i dim N_j.
Decomposition delta_tensor(const FusionTable& t, const Decomposition& a, const Decomposition& b,
                           const PartitioningMorphismSpec& p);

/// Decomposition of the n-th Delta-tensor power, n >= 1.
Decomposition delta_power(const FusionTable& t, const Decomposition& a, int n,
                          const PartitioningMorphismSpec& p);

/// (dim M)^n - sum_k (dim M_k)^n; b_n^Delta = b_n + delta_correction, for
/// every coassociative Delta.
Integer delta_correction(const RootSystem& rs, const Decomposition& a, int n);

/// b_n^Delta(M) via the closed form; independent of the choice of Delta.
Integer b_n_delta(const FusionTable& t, const Decomposition& a, int n);

}  // namespace qtensor
