#pragma once

#include <string>
#include <vector>

#include "qtensor/quiver.hpp"

namespace qtensor {

enum class DynkinFamily { A, D, General };

/// Canonical labeling of a Dynkin shape over the input vertex order.
///
/// For D(l) the underlying graph is fixed as
///
///     a                          spurs a, b attached to the branch vertex
///      \                         c_1, followed by the tail c_2 .. c_{l-2};
///       c_1 -- c_2 -- ... -- c_{l-2}
///      /                        arrows alpha (a, c_1), beta (b, c_1) and
///     b                         gamma_k (c_k, c_{k+1}).
///
/// sigma(delta) = 1 iff the arrow delta points toward c_1, and
/// P = { 1 <= k <= l-3 | sigma(gamma_k) != sigma(alpha) }.
struct ShapeInfo {
  DynkinFamily family = DynkinFamily::General;
  int l = 0;

  // A(l): vertex indices in path order.
  std::vector<int> path;

  // D(l): canonical vertices and arrows.
  int spur_a = -1;
  int spur_b = -1;
  std::vector<int> tail;  // tail[k-1] = vertex c_k, 1 <= k <= l-2
  int alpha_arrow = -1;
  int beta_arrow = -1;
  std::vector<int> gamma_arrows;  // gamma_arrows[k-1] = arrow gamma_k

  std::vector<int> sigma;  // per arrow index, D only
  std::vector<int> P;      // ascending, 1-based

  bool is_dynkin() const { return family != DynkinFamily::General; }
  bool spurs_aligned() const { return sigma[alpha_arrow] == sigma[beta_arrow]; }
  std::string family_name() const;
};

/// Classifies the underlying graph as A(l), D(l) or general and, for D,
/// fixes the canonical labeling. Interchangeable vertices are resolved by
/// input order: the spur with the smaller input index is named a.
ShapeInfo detect_shape(const Quiver& q);

}  // namespace qtensor
