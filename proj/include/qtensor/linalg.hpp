#pragma once

#include <Eigen/Dense>

#include "qtensor/numeric.hpp"
#include "qtensor/quiver.hpp"
#include "qtensor/representation.hpp"

namespace qtensor {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact rank by one-step fraction-free (Bareiss) elimination, pivoting on
/// the first nonzero entry of each column.
inline Eigen::Index fraction_free_rank(IntMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  Integer prev(1);
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        // Exact by the Bareiss determinant identity.
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev;
      }
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

/// Rank of a rational matrix: rows are scaled to integers first.
inline Eigen::Index fraction_free_rank(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Integer scale(1);
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m(r, c)));
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      z(r, c) = boost::multiprecision::numerator(m(r, c)) *
                (scale / boost::multiprecision::denominator(m(r, c)));
  }
  return fraction_free_rank(std::move(z));
}

/// Coefficient matrix of the commuting-square system
/// f_{t(alpha)} M_alpha = N_alpha f_{s(alpha)} over all arrows. Unknowns are
/// the entries of the f_i, dim N_i x dim M_i each, vectorized row-major.
RatMatrix hom_system(const Quiver& q, const Representation& m, const Representation& n);

/// dim Hom_Q(M, N), by exact rank of the hom system.
int hom_dimension(const Quiver& q, const Representation& m, const Representation& n);

}  // namespace qtensor
