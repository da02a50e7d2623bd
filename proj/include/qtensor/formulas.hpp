#pragma once

#include <vector>

#include "qtensor/decompose.hpp"

namespace qtensor {

/// S(d): the roots d' such that some pairwise product M(d') (x) M(d'')
/// contains M(d) as a summand. Read off the fusion table exactly.
std::vector<int> s_set(const FusionTable& t, int root);

/// m(d' * d) by the type D classification: 2 iff one of the pair is a twin
/// root x_{i,j} and the other is a thin root supported inside {c_1..c_i},
/// else 1. Agrees with m_value(pointwise_product(...)); rejects pairs with
/// zero product.
int m_pair(const RootSystem& rs, int d1, int d2);

/// The two readings of the twin-coefficient closed form. The per-index
/// lemma statements and the aggregated proposition display attach the
/// n * (sum) * (...)^(n-1) form to opposite P-membership cases; the oracle
/// suite shows the per-index reading is the correct one, and it is the
/// default everywhere.
enum class TwinBranch { LemmaPerIndex, PropositionDisplay };

/// Closed form for sum_{j>i} a^(n)_{x_{i,j}} at a fixed 1 <= i <= l-3.
Integer twin_sum_at(const RootSystem& rs, const Decomposition& a, int n, int i,
                    TwinBranch branch = TwinBranch::LemmaPerIndex);

/// sum over all twin roots of a_d^(n), type D only.
Integer twin_sum(const RootSystem& rs, const Decomposition& a, int n,
                 TwinBranch branch = TwinBranch::LemmaPerIndex);

/// b_n(M) = sum_i (dim M_i)^n - sum_{l(d)=2} (sum_{d' >= d} a_{d'})^n.
Integer b_n_formula_type_A(const RootSystem& rs, const Decomposition& a, int n);

/// b_n(M) = sum_i (dim M_i)^n
///        - sum_{l(d)=2} (sum_{d' >= d} m(d' * d) a_{d'})^n
///        - sum over twin roots of a_d^(n).
Integer b_n_formula_type_D(const RootSystem& rs, const Decomposition& a, int n,
                           TwinBranch branch = TwinBranch::LemmaPerIndex);

/// Dispatches on the shape family.
Integer b_n_formula(const RootSystem& rs, const Decomposition& a, int n,
                    TwinBranch branch = TwinBranch::LemmaPerIndex);

/// Checks (sum_{d' in S(d)} m(d'*d) a_{d'})^n == sum_{d' in S(d)} m(d'*d) a_{d'}^(n)
/// exactly, with the right side read from the n-th fusion power.
bool verify_power_identity(const FusionTable& t, const Decomposition& a, int thin_root, int n);

/// A full-subquiver embedding Q' -> Q: vertex_map[i] is the target index of
/// source vertex i. Arrows between mapped vertices must correspond
/// bijectively, with directions preserved.
struct EmbeddingMap {
  Quiver source;
  Quiver target;
  std::vector<int> vertex_map;
};

void validate_embedding(const EmbeddingMap& e);

DimVector embed_vector(const EmbeddingMap& e, const DimVector& d);

/// Pushes a decomposition through the embedding functor; every source root
/// lands on a target root.
Decomposition embed_decomposition(const RootSystem& src, const RootSystem& dst,
                                  const EmbeddingMap& e, const Decomposition& a);

}  // namespace qtensor
