#include "qtensor/linalg.hpp"

#include <numeric>

namespace qtensor {

RatMatrix hom_system(const Quiver& q, const Representation& m, const Representation& n) {
  m.validate(q);
  n.validate(q);
  const int nv = q.num_vertices();
  std::vector<int> offset(nv + 1, 0);
  for (int i = 0; i < nv; ++i) offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
  const int unknowns = offset[nv];
  // f_i entry (r, c) -> unknown offset[i] + r * dim M_i + c.
  auto idx = [&](int vertex, int r, int c) { return offset[vertex] + r * m.dims[vertex] + c; };

  int rows = 0;
  for (const Arrow& a : q.arrows) rows += n.dims[a.target] * m.dims[a.source];
  RatMatrix sys = RatMatrix::Zero(rows, unknowns);

  int eq = 0;
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];
    const RatMatrix& ma = m.maps[ai];
    const RatMatrix& na = n.maps[ai];
    for (int r = 0; r < n.dims[a.target]; ++r) {
      for (int c = 0; c < m.dims[a.source]; ++c) {
        // (f_t M_alpha)(r, c) - (N_alpha f_s)(r, c) = 0
        for (int k = 0; k < m.dims[a.target]; ++k)
          if (ma(k, c) != 0) sys(eq, idx(a.target, r, k)) += ma(k, c);
        for (int k = 0; k < n.dims[a.source]; ++k)
          if (na(r, k) != 0) sys(eq, idx(a.source, k, c)) -= na(r, k);
        ++eq;
      }
    }
  }
  return sys;
}

int hom_dimension(const Quiver& q, const Representation& m, const Representation& n) {
  const RatMatrix sys = hom_system(q, m, n);
  if (sys.cols() == 0) return 0;
  if (sys.rows() == 0) return static_cast<int>(sys.cols());
  return static_cast<int>(sys.cols() - fraction_free_rank(sys));
}

}  // namespace qtensor
