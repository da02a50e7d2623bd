#pragma once

#include <vector>

#include "qtensor/quiver.hpp"
#include "qtensor/shape.hpp"

namespace qtensor {

enum class RootKind { Thin, Twin };

/// A positive root of the quiver, recorded as a dimension vector. Twin roots
/// (type D only) carry their (i, j) indices, 1 <= i < j <= l-2.
struct Root {
  DimVector vec;
  RootKind kind = RootKind::Thin;
  int twin_i = 0;
  int twin_j = 0;
  int length = 0;

  bool is_twin() const { return kind == RootKind::Twin; }
};

/// All positive roots of an A(l) or D(l) shape, sorted lexicographically by
/// dimension vector. Thin roots are the indicator vectors of connected full
/// subquivers; type D adds the twin roots x_{i,j}. Rejects general shapes.
std::vector<Root> positive_roots(const Quiver& q, const ShapeInfo& shape);

}  // namespace qtensor
