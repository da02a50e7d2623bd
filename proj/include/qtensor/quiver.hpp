#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "qtensor/errors.hpp"
#include "qtensor/numeric.hpp"

namespace qtensor {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

/// A finite quiver Q = (Q_0, Q_1, s, t). Vertex order is the input order and
/// is the canonical order for every vector and report derived from it.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  /// Index of a vertex label, or -1.
  int vertex_index(const std::string& label) const;
  /// Index of an arrow name, or -1.
  int arrow_index(const std::string& name) const;
  /// Structural validation: unique labels/names, endpoint indices in range.
  void validate() const;
};

/// Stable content hash of the quiver (labels, arrow names, endpoints).
std::string quiver_hash(const Quiver& q);

/// Dimension vectors, one entry per vertex in quiver order.
using DimVector = Eigen::VectorXi;

bool lex_less(const DimVector& a, const DimVector& b);

/// Entrywise product d * d'.
DimVector pointwise_product(const DimVector& a, const DimVector& b);

/// Entrywise a >= b.
bool dominates(const DimVector& a, const DimVector& b);

/// m(d) = min positive entry; rejects the zero vector.
int m_value(const DimVector& d);

/// l(d) = sum of entries.
int vector_length(const DimVector& d);

std::vector<int> support(const DimVector& d);

/// Canonical identifier used in all I/O, e.g. "1,1,2,1".
std::string root_id(const DimVector& d);

DimVector parse_root_id(const std::string& id, int expected_size);

}  // namespace qtensor
