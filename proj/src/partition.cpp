#include "qtensor/partition.hpp"

#include <algorithm>
#include <map>

namespace qtensor {

PartitioningMorphismSpec canonical_partitioning_morphism(int n_vertices) {
  PartitioningMorphismSpec p;
  p.n_vertices = n_vertices;
  p.blocks.resize(n_vertices);
  for (int k = 0; k < n_vertices; ++k)
    for (int i = 0; i < n_vertices; ++i) p.blocks[k].push_back({k, i});
  return p;
}

ValidationReport validate_spec(const PartitioningMorphismSpec& p) {
  ValidationReport rep;
  const int n = p.n_vertices;
  std::map<std::pair<int, int>, int> count;
  for (int k = 0; k < static_cast<int>(p.blocks.size()); ++k)
    for (const auto& pr : p.blocks[k]) ++count[pr];
  for (const auto& [pr, c] : count)
    if (c > 1) {
      rep.disjoint = false;
      rep.duplicated_pairs.push_back(pr);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!count.count({i, j})) {
        rep.covers = false;
        rep.missing_pairs.push_back({i, j});
      }
  for (int k = 0; k < n; ++k) {
    const auto& blk = k < static_cast<int>(p.blocks.size())
                          ? p.blocks[k]
                          : std::vector<std::pair<int, int>>{};
    if (std::find(blk.begin(), blk.end(), std::make_pair(k, k)) == blk.end()) {
      rep.diagonal = false;
      rep.bad_diagonal_blocks.push_back(k);
    }
  }
  return rep;
}

Eigen::MatrixXi block_table(const PartitioningMorphismSpec& p) {
  if (!validate_spec(p).valid())
    throw InvalidArgumentError("not a valid partitioning morphism");
  Eigen::MatrixXi b(p.n_vertices, p.n_vertices);
  for (int k = 0; k < p.n_vertices; ++k)
    for (const auto& [i, j] : p.blocks[k]) b(i, j) = k;
  return b;
}

ChainSets chain_sets(const PartitioningMorphismSpec& p, int n, std::size_t max_tuples) {
  if (n < 2) throw InvalidArgumentError("chain sets are defined for n >= 2");
  const int nv = p.n_vertices;
  std::size_t total = 1;
  for (int t = 0; t < n; ++t) {
    total *= static_cast<std::size_t>(nv);
    if (total > max_tuples)
      throw BoundExceededError("chain-set materialization exceeds the configured bound");
  }
  const Eigen::MatrixXi blk = block_table(p);

  ChainSets cs;
  cs.n = n;
  cs.L.resize(nv);
  cs.R.resize(nv);
  std::vector<int> tuple(n, 0);
  for (std::size_t it = 0; it < total; ++it) {
    std::size_t x = it;
    for (int t = 0; t < n; ++t) {
      tuple[t] = static_cast<int>(x % nv);
      x /= nv;
    }
    int left = blk(tuple[0], tuple[1]);
    for (int t = 2; t < n; ++t) left = blk(left, tuple[t]);
    int right = blk(tuple[n - 2], tuple[n - 1]);
    for (int t = n - 3; t >= 0; --t) right = blk(tuple[t], right);
    cs.L[left].insert(tuple);
    cs.R[right].insert(tuple);
  }
  return cs;
}

bool is_coassociative(const PartitioningMorphismSpec& p) {
  const Eigen::MatrixXi blk = block_table(p);
  const int n = p.n_vertices;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (blk(blk(a, b), c) != blk(a, blk(b, c))) return false;
  return true;
}

std::vector<PartitioningMorphismSpec> enumerate_partitioning_morphisms(int n_vertices,
                                                                       bool coassociative_only) {
  if (n_vertices < 1 || n_vertices > 4)
    throw BoundExceededError("partitioning-morphism enumeration supports 1..4 vertices");
  std::vector<std::pair<int, int>> off_diag;
  for (int i = 0; i < n_vertices; ++i)
    for (int j = 0; j < n_vertices; ++j)
      if (i != j) off_diag.push_back({i, j});

  std::vector<PartitioningMorphismSpec> out;
  std::vector<int> assign(off_diag.size(), 0);
  while (true) {
    PartitioningMorphismSpec p;
    p.n_vertices = n_vertices;
    p.blocks.resize(n_vertices);
    for (int k = 0; k < n_vertices; ++k) p.blocks[k].push_back({k, k});
    for (std::size_t t = 0; t < off_diag.size(); ++t)
      p.blocks[assign[t]].push_back(off_diag[t]);
    for (auto& blk : p.blocks) std::sort(blk.begin(), blk.end());
    if (!coassociative_only || is_coassociative(p)) out.push_back(std::move(p));

    int pos = static_cast<int>(assign.size()) - 1;
    while (pos >= 0 && assign[pos] == n_vertices - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  return out;
}

std::vector<Integer> simple_correction_coeffs(const PartitioningMorphismSpec& p,
                                              const std::vector<Integer>& vertex_dims, int n) {
  const int nv = p.n_vertices;
  if (static_cast<int>(vertex_dims.size()) != nv)
    throw DimensionMismatchError("vertex dimension count does not match the partition");
  if (n < 1) throw InvalidArgumentError("n must be >= 1");
  std::vector<Integer> c(nv, Integer(0));
  if (n == 1) return c;

  const Eigen::MatrixXi blk = block_table(p);
  // f[s] = sum over tuples (a_1..a_t) with left fold s of prod dim M_{a_i}.
  std::vector<Integer> f(nv, Integer(0));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) f[blk(i, j)] += vertex_dims[i] * vertex_dims[j];
  for (int t = 3; t <= n; ++t) {
    std::vector<Integer> g(nv, Integer(0));
    for (int s = 0; s < nv; ++s) {
      if (f[s] == 0) continue;
      for (int a = 0; a < nv; ++a) g[blk(s, a)] += f[s] * vertex_dims[a];
    }
    f = std::move(g);
  }
  // Drop the constant tuple (k, ..., k), which lies in L_{n,k}.
  for (int k = 0; k < nv; ++k) c[k] = f[k] - int_pow(vertex_dims[k], static_cast<unsigned>(n));
  return c;
}

static void require_coassociative(const PartitioningMorphismSpec& p) {
  if (!validate_spec(p).valid())
    throw InvalidArgumentError("not a valid partitioning morphism");
  if (!is_coassociative(p))
    throw InvalidArgumentError("partitioning morphism is not coassociative");
}

Decomposition delta_tensor(const FusionTable& t, const Decomposition& a, const Decomposition& b,
                           const PartitioningMorphismSpec& p) {
  require_coassociative(p);
  const RootSystem& rs = t.basis;
  if (p.n_vertices != rs.quiver.num_vertices())
    throw DimensionMismatchError("partition and quiver vertex counts differ");
  Decomposition out = fuse(t, a, b);
  const BigVector dm = decomposition_dims(rs, a);
  const BigVector dn = decomposition_dims(rs, b);
  for (int k = 0; k < p.n_vertices; ++k) {
    Integer dk(0);
    for (const auto& [i, j] : p.blocks[k]) {
      if (i == k && j == k) continue;
      dk += dm[i] * dn[j];
    }
    out[rs.simple_index(k)] += dk;
  }
  return out;
}

Decomposition delta_power(const FusionTable& t, const Decomposition& a, int n,
                          const PartitioningMorphismSpec& p) {
  if (n < 1) throw InvalidArgumentError("delta_power: n must be >= 1");
  require_coassociative(p);
  const RootSystem& rs = t.basis;
  if (n == 1) return a;
  Decomposition out = tensor_power(t, a, n);
  const BigVector dm = decomposition_dims(rs, a);
  const std::vector<Integer> dims(dm.begin(), dm.end());
  const std::vector<Integer> c = simple_correction_coeffs(p, dims, n);
  for (int k = 0; k < p.n_vertices; ++k) out[rs.simple_index(k)] += c[k];
  return out;
}

Integer delta_correction(const RootSystem& rs, const Decomposition& a, int n) {
  if (n < 1) throw InvalidArgumentError("n must be >= 1");
  const BigVector dims = decomposition_dims(rs, a);
  Integer total(0);
  for (const Integer& d : dims) total += d;
  Integer corr = int_pow(total, static_cast<unsigned>(n));
  for (const Integer& d : dims) corr -= int_pow(d, static_cast<unsigned>(n));
  return corr;
}

Integer b_n_delta(const FusionTable& t, const Decomposition& a, int n) {
  return b_n(t, a, n) + delta_correction(t.basis, a, n);
}

}  // namespace qtensor
