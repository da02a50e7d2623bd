#include "qtensor/formulas.hpp"

#include <algorithm>

namespace qtensor {

std::vector<int> s_set(const FusionTable& t, int root) {
  const int r = t.basis.root_count();
  std::vector<char> in(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= i; ++j)
      if (t.product(i, j)[root] > 0) in[i] = in[j] = 1;
  std::vector<int> out;
  for (int i = 0; i < r; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

int m_pair(const RootSystem& rs, int d1, int d2) {
  const Root& r1 = rs.roots[d1];
  const Root& r2 = rs.roots[d2];
  const DimVector prod = pointwise_product(r1.vec, r2.vec);
  if (prod.isZero()) throw InvalidArgumentError("m_pair: pointwise product is zero");
  if (r1.is_twin() == r2.is_twin()) return 1;
  const Root& twin = r1.is_twin() ? r1 : r2;
  const Root& thin = r1.is_twin() ? r2 : r1;
  // Support inside {c_1 .. c_i}, the tail stretch where the twin has entry 2.
  std::vector<char> doubled(rs.quiver.num_vertices(), 0);
  for (int k = 1; k <= twin.twin_i; ++k) doubled[rs.shape.tail[k - 1]] = 1;
  for (int v : support(thin.vec))
    if (!doubled[v]) return 1;
  return 2;
}

namespace {

DimVector d_subquiver_vec(const RootSystem& rs, int i) {
  DimVector v = DimVector::Zero(rs.quiver.num_vertices());
  v[rs.shape.spur_a] = 1;
  v[rs.shape.spur_b] = 1;
  for (int k = 1; k <= i; ++k) v[rs.shape.tail[k - 1]] = 1;
  return v;
}

// sum of a_d over thin roots d strictly dominating 1_{D^i}.
Integer thin_above_d(const RootSystem& rs, const Decomposition& a, int i) {
  const DimVector di = d_subquiver_vec(rs, i);
  Integer s(0);
  for (int d = 0; d < rs.root_count(); ++d) {
    const Root& r = rs.roots[d];
    if (!r.is_twin() && r.vec != di && dominates(r.vec, di)) s += a[d];
  }
  return s;
}

bool in_P(const RootSystem& rs, int k) {
  const auto& P = rs.shape.P;
  return std::find(P.begin(), P.end(), k) != P.end();
}

}  // namespace

Integer twin_sum_at(const RootSystem& rs, const Decomposition& a, int n, int i,
                    TwinBranch branch) {
  if (rs.shape.family != DynkinFamily::D)
    throw UnsupportedShapeError("twin sums exist only in type D");
  const int l = rs.shape.l;
  if (i < 1 || i > l - 3) throw InvalidArgumentError("twin_sum_at: i out of range");
  const unsigned un = static_cast<unsigned>(n);

  Integer row(0);  // sum_{j>i} a_{x_{i,j}}
  for (int d = 0; d < rs.root_count(); ++d) {
    const Root& r = rs.roots[d];
    if (r.is_twin() && r.twin_i == i) row += a[d];
  }

  if (rs.shape.spurs_aligned()) {
    // below = sum_{p in P, p < i, j > i} a_{x_{p,j}}; at adds p = i when i in P.
    Integer below(0), at(0);
    for (int d = 0; d < rs.root_count(); ++d) {
      const Root& r = rs.roots[d];
      if (!r.is_twin() || r.twin_j <= i) continue;
      if (!in_P(rs, r.twin_i)) continue;
      if (r.twin_i < i) below += a[d];
      if (r.twin_i <= i) at += a[d];
    }
    const Integer thin = thin_above_d(rs, a, i);
    const Integer lower = below + thin;
    const Integer upper = at + thin;
    const bool product_form =
        branch == TwinBranch::LemmaPerIndex ? !in_P(rs, i) : in_P(rs, i);
    if (product_form) return n * row * int_pow(lower, un - 1);
    return int_pow(upper, un) - int_pow(lower, un);
  }

  // sigma(alpha) != sigma(beta): difference of n-th powers, both readings.
  Integer ge(0), gt(0);
  for (int d = 0; d < rs.root_count(); ++d) {
    const Root& r = rs.roots[d];
    if (!r.is_twin()) continue;
    if (r.twin_i >= i) ge += a[d];
    if (r.twin_i > i) gt += a[d];
  }
  const Integer thin = thin_above_d(rs, a, i);
  return int_pow(ge + thin, un) - int_pow(gt + thin, un);
}

Integer twin_sum(const RootSystem& rs, const Decomposition& a, int n, TwinBranch branch) {
  if (rs.shape.family != DynkinFamily::D)
    throw UnsupportedShapeError("twin sums exist only in type D");
  Integer s(0);
  for (int i = 1; i <= rs.shape.l - 3; ++i) s += twin_sum_at(rs, a, n, i, branch);
  return s;
}

namespace {

Integer vertex_power_sum(const RootSystem& rs, const Decomposition& a, unsigned n) {
  const BigVector dims = decomposition_dims(rs, a);
  Integer s(0);
  for (const Integer& d : dims) s += int_pow(d, n);
  return s;
}

}  // namespace

Integer b_n_formula_type_A(const RootSystem& rs, const Decomposition& a, int n) {
  if (rs.shape.family != DynkinFamily::A)
    throw UnsupportedShapeError("type A formula requires an A shape");
  if (n < 1) throw InvalidArgumentError("n must be >= 1");
  const unsigned un = static_cast<unsigned>(n);
  Integer out = vertex_power_sum(rs, a, un);
  for (int d = 0; d < rs.root_count(); ++d) {
    if (rs.roots[d].length != 2) continue;
    Integer s(0);
    for (int e = 0; e < rs.root_count(); ++e)
      if (dominates(rs.roots[e].vec, rs.roots[d].vec)) s += a[e];
    out -= int_pow(s, un);
  }
  return out;
}

Integer b_n_formula_type_D(const RootSystem& rs, const Decomposition& a, int n,
                           TwinBranch branch) {
  if (rs.shape.family != DynkinFamily::D)
    throw UnsupportedShapeError("type D formula requires a D shape");
  if (n < 1) throw InvalidArgumentError("n must be >= 1");
  const unsigned un = static_cast<unsigned>(n);
  Integer out = vertex_power_sum(rs, a, un);
  for (int d = 0; d < rs.root_count(); ++d) {
    if (rs.roots[d].length != 2) continue;
    Integer s(0);
    for (int e = 0; e < rs.root_count(); ++e)
      if (dominates(rs.roots[e].vec, rs.roots[d].vec)) s += Integer(m_pair(rs, e, d)) * a[e];
    out -= int_pow(s, un);
  }
  return out - twin_sum(rs, a, n, branch);
}

Integer b_n_formula(const RootSystem& rs, const Decomposition& a, int n, TwinBranch branch) {
  if (rs.shape.family == DynkinFamily::A) return b_n_formula_type_A(rs, a, n);
  return b_n_formula_type_D(rs, a, n, branch);
}

bool verify_power_identity(const FusionTable& t, const Decomposition& a, int thin_root, int n) {
  const RootSystem& rs = t.basis;
  if (rs.roots[thin_root].is_twin())
    throw InvalidArgumentError("the power identity is stated for thin roots");
  const std::vector<int> s = s_set(t, thin_root);
  const Decomposition power = tensor_power(t, a, n);
  Integer lhs_base(0), rhs(0);
  for (int d : s) {
    const int m = m_value(pointwise_product(rs.roots[d].vec, rs.roots[thin_root].vec));
    lhs_base += m * a[d];
    rhs += m * power[d];
  }
  return int_pow(lhs_base, static_cast<unsigned>(n)) == rhs;
}

void validate_embedding(const EmbeddingMap& e) {
  const int ns = e.source.num_vertices();
  std::vector<char> used(e.target.num_vertices(), 0);
  if (static_cast<int>(e.vertex_map.size()) != ns)
    throw DimensionMismatchError("vertex map size does not match the source quiver");
  for (int v : e.vertex_map) {
    if (v < 0 || v >= e.target.num_vertices() || used[v])
      throw InvalidArgumentError("vertex map is not an injection into the target");
    used[v] = 1;
  }
  // Full subquiver: arrows between image vertices match the source arrows.
  auto count_arrows = [](const Quiver& q, int s, int t) {
    int c = 0;
    for (const Arrow& a : q.arrows)
      if (a.source == s && a.target == t) ++c;
    return c;
  };
  for (int u = 0; u < ns; ++u)
    for (int v = 0; v < ns; ++v)
      if (count_arrows(e.source, u, v) !=
          count_arrows(e.target, e.vertex_map[u], e.vertex_map[v]))
        throw InvalidArgumentError("vertex map is not a full-subquiver embedding");
}

DimVector embed_vector(const EmbeddingMap& e, const DimVector& d) {
  DimVector out = DimVector::Zero(e.target.num_vertices());
  for (int v = 0; v < d.size(); ++v) out[e.vertex_map[v]] = d[v];
  return out;
}

Decomposition embed_decomposition(const RootSystem& src, const RootSystem& dst,
                                  const EmbeddingMap& e, const Decomposition& a) {
  validate_embedding(e);
  Decomposition out = zero_decomposition(dst);
  for (int d = 0; d < src.root_count(); ++d) {
    if (a[d] == 0) continue;
    const int idx = dst.index_of(embed_vector(e, src.roots[d].vec));
    if (idx < 0)
      throw InternalConsistencyError("embedded root " + root_id(src.roots[d].vec) +
                                     " is not a root of the target");
    out[idx] += a[d];
  }
  return out;
}

}  // namespace qtensor
