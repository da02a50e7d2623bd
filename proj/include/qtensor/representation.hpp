#pragma once

#include <Eigen/Dense>

#include <vector>

#include "qtensor/numeric.hpp"
#include "qtensor/quiver.hpp"
#include "qtensor/roots.hpp"
#include "qtensor/shape.hpp"

namespace qtensor {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// A finite-dimensional representation M = (M_i, M_alpha) over the rationals.
/// maps[alpha] has shape dims[target(alpha)] x dims[source(alpha)].
struct Representation {
  DimVector dims;
  std::vector<RatMatrix> maps;

  /// Checks every matrix shape against dims; throws on mismatch.
  void validate(const Quiver& q) const;
};

const DimVector& dim_vector(const Representation& m);

Representation zero_representation(const Quiver& q);

/// The indecomposable representative M(r). Thin roots get identity 1x1 maps
/// on arrows inside the support; twin roots get the standard representative
/// with k^2 at c_1..c_i and the (0 1)/(1 0)/(1 1) spur and tail maps, picked
/// by arrow orientation.
Representation indecomposable_rep(const Quiver& q, const ShapeInfo& shape, const Root& r);

Representation direct_sum(const Quiver& q, const Representation& m, const Representation& n);

/// Pointwise tensor product: dims multiply entrywise, arrow maps are
/// Kronecker products with row-major index pairing (first factor major).
Representation pointwise_tensor(const Quiver& q, const Representation& m, const Representation& n);

/// Base change M_alpha -> f_t M_alpha f_s^{-1} with per-vertex invertible f.
Representation conjugate(const Quiver& q, const Representation& m,
                         const std::vector<RatMatrix>& f, const std::vector<RatMatrix>& f_inv);

}  // namespace qtensor
