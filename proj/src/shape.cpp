#include "qtensor/shape.hpp"

#include <algorithm>
#include <set>

namespace qtensor {

std::string ShapeInfo::family_name() const {
  switch (family) {
    case DynkinFamily::A:
      return "A(" + std::to_string(l) + ")";
    case DynkinFamily::D:
      return "D(" + std::to_string(l) + ")";
    default:
      return "general";
  }
}

namespace {

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // neighbor vertex per incident arrow
  std::vector<std::vector<int>> inc;  // incident arrow indices, parallel to adj
};

bool connected(const Graph& g) {
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

// Arrow between u and v in a simple graph; -1 if absent.
int arrow_between(const Quiver& q, int u, int v) {
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows[i];
    if ((a.source == u && a.target == v) || (a.source == v && a.target == u)) return i;
  }
  return -1;
}

}  // namespace

ShapeInfo detect_shape(const Quiver& q) {
  q.validate();
  ShapeInfo info;
  const int n = q.num_vertices();

  Graph g;
  g.n = n;
  g.adj.resize(n);
  g.inc.resize(n);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows[i];
    if (a.source == a.target) return info;  // loop
    auto key = std::minmax(a.source, a.target);
    if (!edges.insert({key.first, key.second}).second) return info;  // parallel pair
    g.adj[a.source].push_back(a.target);
    g.inc[a.source].push_back(i);
    g.adj[a.target].push_back(a.source);
    g.inc[a.target].push_back(i);
  }

  // Dynkin underlying graphs are trees: #Q_0 - #Q_1 = 1 and connected.
  if (q.num_arrows() != n - 1 || !connected(g)) return info;

  std::vector<int> degree(n);
  int max_degree = 0;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(g.adj[v].size());
    max_degree = std::max(max_degree, degree[v]);
  }

  if (max_degree <= 2) {
    // Simple path: order vertices starting from the smaller-index endpoint.
    info.family = DynkinFamily::A;
    info.l = n;
    if (n == 1) {
      info.path = {0};
      return info;
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) {
        start = v;
        break;
      }
    info.path.push_back(start);
    int prev = -1, cur = start;
    while (static_cast<int>(info.path.size()) < n) {
      int next = -1;
      for (int w : g.adj[cur])
        if (w != prev) next = w;
      info.path.push_back(next);
      prev = cur;
      cur = next;
    }
    return info;
  }

  if (max_degree != 3 || n < 4) return info;
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 3) {
      if (branch != -1) return info;  // two branch points
      branch = v;
    }
  }

  std::vector<int> leaf_nbrs, inner_nbrs;
  for (int w : g.adj[branch]) (degree[w] == 1 ? leaf_nbrs : inner_nbrs).push_back(w);
  std::sort(leaf_nbrs.begin(), leaf_nbrs.end());

  std::vector<int> tail{branch};
  if (n == 4) {
    if (leaf_nbrs.size() != 3) return info;
    tail.push_back(leaf_nbrs[2]);  // a, b take the two smaller indices
    leaf_nbrs.pop_back();
  } else {
    if (leaf_nbrs.size() != 2 || inner_nbrs.size() != 1) return info;
    int prev = branch, cur = inner_nbrs[0];
    tail.push_back(cur);
    while (degree[cur] == 2) {
      int next = -1;
      for (int w : g.adj[cur])
        if (w != prev) next = w;
      prev = cur;
      cur = next;
      tail.push_back(cur);
    }
    if (degree[cur] != 1) return info;
  }
  if (static_cast<int>(tail.size()) + 2 != n) return info;

  info.family = DynkinFamily::D;
  info.l = n;
  info.spur_a = leaf_nbrs[0];
  info.spur_b = leaf_nbrs[1];
  info.tail = tail;
  info.alpha_arrow = arrow_between(q, info.spur_a, branch);
  info.beta_arrow = arrow_between(q, info.spur_b, branch);
  for (std::size_t k = 0; k + 1 < tail.size(); ++k)
    info.gamma_arrows.push_back(arrow_between(q, tail[k], tail[k + 1]));

  // sigma(delta) = 1 iff delta points toward c_1.
  info.sigma.assign(q.num_arrows(), 0);
  info.sigma[info.alpha_arrow] = q.arrows[info.alpha_arrow].target == branch ? 1 : 0;
  info.sigma[info.beta_arrow] = q.arrows[info.beta_arrow].target == branch ? 1 : 0;
  for (std::size_t k = 0; k < info.gamma_arrows.size(); ++k) {
    const int id = info.gamma_arrows[k];
    info.sigma[id] = q.arrows[id].target == tail[k] ? 1 : 0;
  }
  for (int k = 1; k <= info.l - 3; ++k)
    if (info.sigma[info.gamma_arrows[k - 1]] != info.sigma[info.alpha_arrow]) info.P.push_back(k);
  return info;
}

}  // namespace qtensor
