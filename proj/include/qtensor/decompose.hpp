#pragma once

#include <Eigen/Dense>

#include <vector>

#include "qtensor/linalg.hpp"
#include "qtensor/representation.hpp"
#include "qtensor/roots.hpp"

namespace qtensor {

/// Multiplicity vector over the positive roots of a RootSystem, in the
/// root-list (lexicographic) order. Entries are big integers: tensor-power
/// multiplicities grow like (max_i dim M_i)^n.
using Decomposition = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using BigVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// The positive roots of a Dynkin quiver together with fixed indecomposable
/// representatives, the Hom matrix hom(i, j) = dim Hom(M(root_i), M(root_j)),
/// and a topological order in which the Hom matrix is unitriangular.
struct RootSystem {
  Quiver quiver;
  ShapeInfo shape;
  std::vector<Root> roots;              // lexicographic order; positions are root ids
  std::vector<Representation> reps;     // reps[i] = M(roots[i])
  Eigen::MatrixXi hom;                  // hom(i, j) = dim Hom(reps[i], reps[j])
  std::vector<int> topo;                // root ids; hom(u, v) = 0 when v precedes u

  int root_count() const { return static_cast<int>(roots.size()); }
  /// Root id of a dimension vector, or -1.
  int index_of(const DimVector& v) const;
  int simple_index(int vertex) const;
  int twin_index(int i, int j) const;
  /// The unit object 1 = M(1_{Q_0}).
  int unit_index() const;
};

/// Builds the root system; l is capped (Hom matrices and fusion tables are
/// desk-scale objects).
RootSystem root_system(const Quiver& q, const ShapeInfo& shape, int max_l = 8);
RootSystem root_system(const Quiver& q, int max_l = 8);

Decomposition zero_decomposition(const RootSystem& rs);

/// Sum of multiplicities (the number of indecomposable summands).
Integer total_multiplicity(const Decomposition& a);

/// Dimension vector described by a decomposition: sum_d a_d * vec(d).
BigVector decomposition_dims(const RootSystem& rs, const Decomposition& a);

/// Krull-Schmidt decomposition of an explicit representation: solves
/// hom * a = h by back-substitution along the topological order, where
/// h_d = dim Hom(M(d), M). Throws InternalConsistencyError if the solution
/// is not a decomposition of M (negative entries or dimension mismatch).
Decomposition decompose(const RootSystem& rs, const Representation& m);

/// Pairwise tensor product decompositions of all indecomposable
/// representatives; the multiplication table of the fusion semiring.
struct FusionTable {
  RootSystem basis;
  std::vector<Decomposition> pairs;  // unordered pairs, index via pair_index

  static std::size_t pair_index(int i, int j) {
    if (i < j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
  }
  const Decomposition& product(int i, int j) const { return pairs[pair_index(i, j)]; }
};

FusionTable fusion_table(RootSystem rs);
FusionTable fusion_table(const Quiver& q, int max_l = 8);

/// Product of two decompositions in the fusion semiring.
Decomposition fuse(const FusionTable& t, const Decomposition& a, const Decomposition& b);

enum class PowerStrategy { Iterative, Squaring };

/// Decomposition of M^(tensor n), n >= 1, by iterated fusion products.
Decomposition tensor_power(const FusionTable& t, const Decomposition& a, int n,
                           PowerStrategy strategy = PowerStrategy::Iterative);

/// b_n(M): number of indecomposable summands of M^(tensor n).
Integer b_n(const FusionTable& t, const Decomposition& a, int n,
            PowerStrategy strategy = PowerStrategy::Iterative);

/// The sequence b_n^(1/n) for 1 <= n <= n_max as exact decimal roots.
std::vector<DecimalRoot> beta_estimate(const FusionTable& t, const Decomposition& a, int n_max,
                                       int significant_digits = 30);

}  // namespace qtensor
