#include "qtensor/roots.hpp"

#include <algorithm>

namespace qtensor {

std::vector<Root> positive_roots(const Quiver& q, const ShapeInfo& shape) {
  if (!shape.is_dynkin())
    throw UnsupportedShapeError("positive roots are enumerated for types A and D only");
  const int n = q.num_vertices();
  if (n > 22) throw BoundExceededError("root enumeration limited to 22 vertices");

  std::vector<Root> roots;

  // Thin roots <-> connected full subquivers, via the support bijection.
  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (const Arrow& a : q.arrows) {
    nbr_mask[a.source] |= 1u << a.target;
    nbr_mask[a.target] |= 1u << a.source;
  }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int first = std::countr_zero(mask);
    std::uint32_t seen = 1u << first;
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= nbr_mask[v] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    if (seen != mask) continue;
    Root r;
    r.vec = DimVector::Zero(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) r.vec[v] = 1;
    r.length = vector_length(r.vec);
    roots.push_back(std::move(r));
  }

  if (shape.family == DynkinFamily::D) {
    for (int i = 1; i <= shape.l - 2; ++i) {
      for (int j = i + 1; j <= shape.l - 2; ++j) {
        Root r;
        r.kind = RootKind::Twin;
        r.twin_i = i;
        r.twin_j = j;
        r.vec = DimVector::Zero(n);
        r.vec[shape.spur_a] = 1;
        r.vec[shape.spur_b] = 1;
        for (int k = 1; k <= j; ++k) r.vec[shape.tail[k - 1]] = k <= i ? 2 : 1;
        r.length = vector_length(r.vec);
        roots.push_back(std::move(r));
      }
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const Root& x, const Root& y) { return lex_less(x.vec, y.vec); });
  return roots;
}

}  // namespace qtensor
