#pragma once

#include <cstdint>

#include "qtensor/formulas.hpp"
#include "qtensor/io.hpp"

namespace qtensor {

struct VerifyOptions {
  int trials = 50;
  std::uint64_t seed = 1;
  int n_min = 1;
  int n_max = 4;
  int max_mult = 3;
  int random_modules = 10;  // delta suite
  TwinBranch branch = TwinBranch::LemmaPerIndex;
  std::size_t max_tuples = 1000000;
};

/// Arrow directions as "name:src->tgt;...", used in reports.
std::string orientation_string(const Quiver& q);

/// Closed-form b_n vs the fusion-semiring oracle on random decompositions.
/// Type A rows additionally carry the value obtained through the embedding
/// into a type D over-quiver.
Json run_formula_suite(const Quiver& q, const VerifyOptions& opt);

/// Corollary-style Delta law: the total multiplicity of every Delta power
/// equals b_n + (dim M)^n - sum_k (dim M_k)^n for every enumerated
/// coassociative partitioning morphism, and n = 2 agrees with the binary
/// Delta tensor product.
Json run_delta_suite(const Quiver& q, const VerifyOptions& opt);

/// The power identity over all thin roots; lengths > 2 are reported but do
/// not fail the suite.
Json run_power_identity_suite(const Quiver& q, const VerifyOptions& opt);

/// Chain-set laws over every enumerated partitioning morphism: the fold
/// computation matches the raw existential definition, {L_{n,k}} partitions
/// Q_0^n, and L_3 = R_3 iff L_4 = R_4.
Json run_chains_suite(const Quiver& q, const VerifyOptions& opt);

/// Per-index twin-coefficient oracle: which branch reading of the twin sum
/// matches brute force.
Json run_twin_branch_suite(const Quiver& q, const VerifyOptions& opt);

bool report_ok(const Json& report);

/// Type A quiver embedded as a full subquiver of a type D over-quiver
/// (spur b added next to the second path vertex; all roots push forward).
struct OverQuiver {
  Quiver quiver;
  EmbeddingMap embedding;
};
OverQuiver type_a_over_quiver(const Quiver& a_quiver, const ShapeInfo& a_shape);

}  // namespace qtensor
