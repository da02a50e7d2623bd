#include "qtensor/representation.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qtensor {

void Representation::validate(const Quiver& q) const {
  if (dims.size() != q.num_vertices())
    throw DimensionMismatchError("representation dims do not match the quiver");
  if (static_cast<int>(maps.size()) != q.num_arrows())
    throw DimensionMismatchError("representation is missing arrow maps");
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows[i];
    if (maps[i].rows() != dims[a.target] || maps[i].cols() != dims[a.source])
      throw DimensionMismatchError("map for arrow '" + a.name + "' has the wrong shape");
  }
  if ((dims.array() < 0).any()) throw DimensionMismatchError("negative dimension");
}

const DimVector& dim_vector(const Representation& m) { return m.dims; }

Representation zero_representation(const Quiver& q) {
  Representation m;
  m.dims = DimVector::Zero(q.num_vertices());
  m.maps.assign(q.num_arrows(), RatMatrix(0, 0));
  return m;
}

Representation indecomposable_rep(const Quiver& q, const ShapeInfo& shape, const Root& r) {
  Representation m;
  m.dims = r.vec;
  m.maps.resize(q.num_arrows());

  if (!r.is_twin()) {
    for (int i = 0; i < q.num_arrows(); ++i) {
      const Arrow& a = q.arrows[i];
      m.maps[i] = RatMatrix(r.vec[a.target], r.vec[a.source]);
      if (r.vec[a.source] == 1 && r.vec[a.target] == 1) m.maps[i](0, 0) = 1;
    }
    return m;
  }

  if (shape.family != DynkinFamily::D)
    throw UnsupportedShapeError("twin roots exist only in type D");
  const int branch = shape.tail[0];
  auto spur_map = [&](int arrow, int hot_row) {
    // Incoming spur maps embed k as a coordinate line of k^2; outgoing ones
    // project onto the complementary coordinate.
    RatMatrix f;
    if (q.arrows[arrow].target == branch) {
      f = RatMatrix::Zero(2, 1);
      f(hot_row, 0) = 1;
    } else {
      f = RatMatrix::Zero(1, 2);
      f(0, 1 - hot_row) = 1;
    }
    return f;
  };
  m.maps[shape.alpha_arrow] = spur_map(shape.alpha_arrow, 0);
  m.maps[shape.beta_arrow] = spur_map(shape.beta_arrow, 1);
  for (int k = 1; k <= shape.l - 3; ++k) {
    const int id = shape.gamma_arrows[k - 1];
    const Arrow& a = q.arrows[id];
    RatMatrix f(r.vec[a.target], r.vec[a.source]);
    if (k < r.twin_i || (k > r.twin_i && k < r.twin_j)) {
      f.setIdentity();
    } else if (k == r.twin_i) {
      // Diagonal line of k^2 against the coordinate lines of the spurs.
      f.setOnes();
    } else {
      f.setZero();
    }
    m.maps[id] = f;
  }
  return m;
}

Representation direct_sum(const Quiver& q, const Representation& m, const Representation& n) {
  m.validate(q);
  n.validate(q);
  Representation s;
  s.dims = m.dims + n.dims;
  s.maps.resize(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows[i];
    RatMatrix block = RatMatrix::Zero(s.dims[a.target], s.dims[a.source]);
    block.topLeftCorner(m.dims[a.target], m.dims[a.source]) = m.maps[i];
    block.bottomRightCorner(n.dims[a.target], n.dims[a.source]) = n.maps[i];
    s.maps[i] = std::move(block);
  }
  return s;
}

Representation pointwise_tensor(const Quiver& q, const Representation& m, const Representation& n) {
  m.validate(q);
  n.validate(q);
  Representation t;
  t.dims = m.dims.cwiseProduct(n.dims);
  t.maps.resize(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i)
    t.maps[i] = Eigen::kroneckerProduct(m.maps[i], n.maps[i]);
  return t;
}

Representation conjugate(const Quiver& q, const Representation& m,
                         const std::vector<RatMatrix>& f, const std::vector<RatMatrix>& f_inv) {
  Representation c;
  c.dims = m.dims;
  c.maps.resize(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows[i];
    c.maps[i] = f[a.target] * m.maps[i] * f_inv[a.source];
  }
  return c;
}

}  // namespace qtensor
