#include "qtensor/decompose.hpp"

#include <algorithm>

namespace qtensor {

int RootSystem::index_of(const DimVector& v) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), v,
                             [](const Root& r, const DimVector& w) { return lex_less(r.vec, w); });
  if (it != roots.end() && it->vec == v) return static_cast<int>(it - roots.begin());
  return -1;
}

int RootSystem::simple_index(int vertex) const {
  DimVector v = DimVector::Zero(quiver.num_vertices());
  v[vertex] = 1;
  return index_of(v);
}

int RootSystem::twin_index(int i, int j) const {
  for (int k = 0; k < root_count(); ++k)
    if (roots[k].is_twin() && roots[k].twin_i == i && roots[k].twin_j == j) return k;
  return -1;
}

int RootSystem::unit_index() const { return index_of(DimVector::Ones(quiver.num_vertices())); }

RootSystem root_system(const Quiver& q, const ShapeInfo& shape, int max_l) {
  if (!shape.is_dynkin())
    throw UnsupportedShapeError("root system requires an A or D shape");
  if (shape.l > max_l)
    throw BoundExceededError("quiver has " + std::to_string(shape.l) +
                             " vertices, configured bound is " + std::to_string(max_l));
  RootSystem rs;
  rs.quiver = q;
  rs.shape = shape;
  rs.roots = positive_roots(q, shape);
  const int r = rs.root_count();
  rs.reps.reserve(r);
  for (const Root& root : rs.roots) rs.reps.push_back(indecomposable_rep(q, shape, root));

  rs.hom.resize(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.hom(i, j) = hom_dimension(q, rs.reps[i], rs.reps[j]);

  // Kahn's algorithm on the relation hom(i, j) > 0, i != j; Dynkin quivers
  // are representation-directed, so this graph is acyclic. Ties broken by
  // lexicographically smallest dimension vector, i.e. smallest root id.
  std::vector<int> indegree(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && rs.hom(i, j) > 0) ++indegree[j];
  std::vector<char> placed(r, 0);
  while (static_cast<int>(rs.topo.size()) < r) {
    int pick = -1;
    for (int i = 0; i < r; ++i)
      if (!placed[i] && indegree[i] == 0) {
        pick = i;
        break;
      }
    if (pick < 0)
      throw InternalConsistencyError("Hom relation between indecomposables has a cycle");
    placed[pick] = 1;
    rs.topo.push_back(pick);
    for (int j = 0; j < r; ++j)
      if (j != pick && rs.hom(pick, j) > 0) --indegree[j];
  }
  for (int i = 0; i < r; ++i)
    if (rs.hom(i, i) != 1)
      throw InternalConsistencyError("representative " + root_id(rs.roots[i].vec) +
                                     " does not have a one-dimensional endomorphism space");
  return rs;
}

RootSystem root_system(const Quiver& q, int max_l) { return root_system(q, detect_shape(q), max_l); }

Decomposition zero_decomposition(const RootSystem& rs) {
  return Decomposition::Zero(rs.root_count());
}

Integer total_multiplicity(const Decomposition& a) {
  Integer s(0);
  for (const Integer& x : a) s += x;
  return s;
}

BigVector decomposition_dims(const RootSystem& rs, const Decomposition& a) {
  BigVector dims = BigVector::Zero(rs.quiver.num_vertices());
  for (int d = 0; d < rs.root_count(); ++d) {
    if (a[d] == 0) continue;
    for (int i = 0; i < dims.size(); ++i) dims[i] += a[d] * rs.roots[d].vec[i];
  }
  return dims;
}

Decomposition decompose(const RootSystem& rs, const Representation& m) {
  m.validate(rs.quiver);
  const int r = rs.root_count();
  std::vector<Integer> h(r);
  for (int i = 0; i < r; ++i) h[i] = hom_dimension(rs.quiver, rs.reps[i], m);

  Decomposition a = zero_decomposition(rs);
  for (int pos = r - 1; pos >= 0; --pos) {
    const int d = rs.topo[pos];
    Integer acc = h[d];
    for (int later = pos + 1; later < r; ++later) {
      const int e = rs.topo[later];
      if (rs.hom(d, e) != 0 && a[e] != 0) acc -= rs.hom(d, e) * a[e];
    }
    if (acc < 0)
      throw InternalConsistencyError("negative multiplicity for root " +
                                     root_id(rs.roots[d].vec));
    a[d] = acc;
  }

  const BigVector dims = decomposition_dims(rs, a);
  for (int i = 0; i < dims.size(); ++i)
    if (dims[i] != m.dims[i])
      throw InternalConsistencyError("decomposition does not add up to the input dimensions");
  return a;
}

FusionTable fusion_table(RootSystem rs) {
  FusionTable t;
  t.basis = std::move(rs);
  const int r = t.basis.root_count();
  t.pairs.resize(FusionTable::pair_index(r - 1, r - 1) + 1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j <= i; ++j) {
      const Representation prod =
          pointwise_tensor(t.basis.quiver, t.basis.reps[i], t.basis.reps[j]);
      t.pairs[FusionTable::pair_index(i, j)] = decompose(t.basis, prod);
    }
  }
  return t;
}

FusionTable fusion_table(const Quiver& q, int max_l) { return fusion_table(root_system(q, max_l)); }

Decomposition fuse(const FusionTable& t, const Decomposition& a, const Decomposition& b) {
  const int r = t.basis.root_count();
  if (a.size() != r || b.size() != r)
    throw DimensionMismatchError("decomposition does not match the fusion table");
  Decomposition out = zero_decomposition(t.basis);
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      const Integer coeff = a[i] * b[j];
      const Decomposition& entry = t.product(i, j);
      for (int e = 0; e < r; ++e)
        if (entry[e] != 0) out[e] += coeff * entry[e];
    }
  }
  return out;
}

Decomposition tensor_power(const FusionTable& t, const Decomposition& a, int n,
                           PowerStrategy strategy) {
  if (n < 1) throw InvalidArgumentError("tensor_power: n must be >= 1");
  if (strategy == PowerStrategy::Iterative) {
    Decomposition acc = a;
    for (int k = 2; k <= n; ++k) acc = fuse(t, acc, a);
    return acc;
  }
  // Binary powering; the fusion semiring is commutative and associative, so
  // the association order does not change the result.
  Decomposition base = a;
  Decomposition acc;
  bool have_acc = false;
  int e = n;
  while (e > 0) {
    if (e & 1) {
      acc = have_acc ? fuse(t, acc, base) : base;
      have_acc = true;
    }
    e >>= 1;
    if (e > 0) base = fuse(t, base, base);
  }
  return acc;
}

Integer b_n(const FusionTable& t, const Decomposition& a, int n, PowerStrategy strategy) {
  return total_multiplicity(tensor_power(t, a, n, strategy));
}

std::vector<DecimalRoot> beta_estimate(const FusionTable& t, const Decomposition& a, int n_max,
                                       int significant_digits) {
  if (n_max < 1) throw InvalidArgumentError("beta_estimate: n_max must be >= 1");
  std::vector<DecimalRoot> out;
  out.reserve(n_max);
  Decomposition acc = a;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) acc = fuse(t, acc, a);
    out.push_back(nth_root_decimal(total_multiplicity(acc), static_cast<unsigned>(n),
                                   significant_digits));
  }
  return out;
}

}  // namespace qtensor
