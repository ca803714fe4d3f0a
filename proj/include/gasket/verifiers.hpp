#ifndef GASKET_VERIFIERS_HPP
#define GASKET_VERIFIERS_HPP

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "gasket/cell_structure.hpp"
#include "gasket/errors.hpp"
#include "gasket/matrix.hpp"
#include "gasket/scalar.hpp"

namespace gasket {

/// Ordered sequence of distinct vertices, consecutive ones adjacent.
struct Chain {
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size(); }
};

enum class ChainDirection { Increasing, Decreasing };

/// U_p for an exceptional set U: the vertices of U reachable from p
/// through positive-off-diagonal edges staying in V \ U until the final
/// step into U.
template <typename T>
std::set<int> reachability_set(const Matrix<T>& h, const std::set<int>& u,
                               int p, const Tolerances& tol = {}) {
  const std::size_t n = h.rows();
  if (u.empty() || u.size() >= n)
    throw invalid_parameter("reachability_set: U must be a proper nonempty subset");
  for (int q : u)
    if (q < 0 || static_cast<std::size_t>(q) >= n)
      throw invalid_parameter("reachability_set: U vertex out of range");
  if (p < 0 || static_cast<std::size_t>(p) >= n)
    throw invalid_parameter("reachability_set: p out of range");
  if (u.count(p)) throw invalid_parameter("reachability_set: p must lie outside U");

  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(p);
  seen[p] = 1;
  std::set<int> out;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (std::size_t q = 0; q < n; ++q) {
      if (static_cast<int>(q) == x) continue;
      if (!ScalarTraits<T>::is_positive(h(x, q), tol.entry)) continue;
      if (u.count(static_cast<int>(q))) {
        out.insert(static_cast<int>(q));
      } else if (!seen[q]) {
        seen[q] = 1;
        bfs.push(static_cast<int>(q));
      }
    }
  }
  return out;
}

struct MaxPrincipleReport {
  bool pass = true;
  int first_offender = -1;
  std::string detail;
};

/// Discrete maximum principle for v harmonic off U: for every p outside
/// U, min over U_p <= v(p) <= max over U_p, with equality on either side
/// exactly when v is constant on U_p.
template <typename T>
MaxPrincipleReport verify_maximum_principle(const Matrix<T>& h,
                                            const std::set<int>& u,
                                            const std::vector<T>& v,
                                            const Tolerances& tol = {}) {
  const std::size_t n = h.rows();
  if (v.size() != n)
    throw malformed_input("verify_maximum_principle: value vector length mismatch");
  if (u.empty() || u.size() >= n)
    throw invalid_parameter("verify_maximum_principle: U must be a proper nonempty subset");

  std::vector<int> outside;
  for (std::size_t p = 0; p < n; ++p)
    if (!u.count(static_cast<int>(p))) outside.push_back(static_cast<int>(p));

  std::vector<T> hv = h.apply(v);
  for (int p : outside)
    if (!ScalarTraits<T>::is_zero(hv[p], tol.residual))
      throw precondition_violated(
          "verify_maximum_principle: (Hv)(" + std::to_string(p) +
          ") != 0, v is not harmonic off U");

  MaxPrincipleReport rep;
  for (int p : outside) {
    const std::set<int> up = reachability_set(h, u, p, tol);
    if (up.empty()) {
      rep.pass = false;
      rep.first_offender = p;
      rep.detail = "U_p empty at vertex " + std::to_string(p);
      return rep;
    }
    T lo = v[*up.begin()], hi = v[*up.begin()];
    bool constant = true;
    for (int q : up) {
      if (v[q] < lo) lo = v[q];
      if (v[q] > hi) hi = v[q];
      if (!ScalarTraits<T>::eq(v[q], v[*up.begin()], tol.level_set))
        constant = false;
    }

    bool out_of_bounds;
    if constexpr (ScalarTraits<T>::exact)
      out_of_bounds = v[p] < lo || v[p] > hi;
    else
      out_of_bounds = v[p] < lo - tol.level_set || v[p] > hi + tol.level_set;
    if (out_of_bounds) {
      rep.pass = false;
      rep.first_offender = p;
      rep.detail = "bound violated at vertex " + std::to_string(p);
      return rep;
    }
    const bool attains_max = ScalarTraits<T>::eq(v[p], hi, tol.level_set);
    const bool attains_min = ScalarTraits<T>::eq(v[p], lo, tol.level_set);
    if (attains_max != constant || attains_min != constant) {
      rep.pass = false;
      rep.first_offender = p;
      rep.detail = "equality case violated at vertex " + std::to_string(p);
      return rep;
    }
  }
  return rep;
}

/// Strictly monotone chain from an interior vertex to the boundary along
/// the steepest admissible neighbor (ties to the lowest vertex id).
/// Strict monotonicity forbids revisits, and harmonicity guarantees an
/// admissible step at every interior vertex, so the walk reaches V0.
template <typename T>
Chain monotone_chain(const Matrix<T>& h1, const CellStructure& s,
                     const std::vector<T>& v, int p, ChainDirection direction,
                     const Tolerances& tol = {}) {
  if (v.size() != static_cast<std::size_t>(s.vertex_count))
    throw malformed_input("monotone_chain: value vector length mismatch");
  if (p < 0 || p >= s.vertex_count || s.is_boundary(p))
    throw invalid_parameter("monotone_chain: p must be an interior vertex");

  std::vector<T> hv = h1.apply(v);
  for (int q : s.interior_vertices())
    if (!ScalarTraits<T>::is_zero(hv[q], tol.residual))
      throw no_chain("monotone_chain: v does not solve the interior equation");

  bool constant = true;
  for (std::size_t i = 1; i < v.size() && constant; ++i)
    constant = ScalarTraits<T>::eq(v[i], v[0], tol.level_set);
  if (constant) throw no_chain("monotone_chain: v is constant");

  const bool up = direction == ChainDirection::Increasing;
  auto admissible = [&](int from, int to) {
    if constexpr (ScalarTraits<T>::exact)
      return up ? v[to] > v[from] : v[to] < v[from];
    else
      return up ? v[to] > v[from] + tol.level_set
                : v[to] < v[from] - tol.level_set;
  };

  {
    bool has_differing = false;
    for (int q = 0; q < s.vertex_count && !has_differing; ++q)
      if (q != p && ScalarTraits<T>::is_positive(h1(p, q), tol.entry) &&
          !ScalarTraits<T>::eq(v[q], v[p], tol.level_set))
        has_differing = true;
    if (!has_differing)
      throw no_chain("monotone_chain: p has no neighbor with a differing value");
  }

  Chain chain;
  int current = p;
  chain.vertices.push_back(current);
  while (!s.is_boundary(current)) {
    int best = -1;
    for (int q = 0; q < s.vertex_count; ++q) {
      if (q == current) continue;
      if (!ScalarTraits<T>::is_positive(h1(current, q), tol.entry)) continue;
      if (!admissible(current, q)) continue;
      if (best == -1) {
        best = q;
      } else if (up ? v[q] > v[best] : v[q] < v[best]) {
        best = q;
      }
      // ties resolve to the lowest id by scan order
    }
    if (best == -1)
      throw no_chain("monotone_chain: stalled at vertex " + std::to_string(current) +
                     " (v locally constant)");
    chain.vertices.push_back(best);
    current = best;
  }
  return chain;
}

/// Shortest path between a1 and a2 within the subgraph induced by A;
/// breadth-first with ascending-id expansion, so ties are deterministic.
inline Chain geodesic_chain(const AdjacencyGraph& g, const std::vector<int>& a,
                            int a1, int a2) {
  std::vector<char> in_a(g.vertex_count, 0);
  for (int v : a) {
    if (v < 0 || v >= g.vertex_count)
      throw invalid_parameter("geodesic_chain: subset vertex out of range");
    in_a[v] = 1;
  }
  if (a1 < 0 || a1 >= g.vertex_count || !in_a[a1] || a2 < 0 ||
      a2 >= g.vertex_count || !in_a[a2])
    throw invalid_parameter("geodesic_chain: endpoints must lie in A");

  std::vector<int> parent(g.vertex_count, -1);
  std::vector<char> seen(g.vertex_count, 0);
  std::queue<int> bfs;
  bfs.push(a1);
  seen[a1] = 1;
  while (!bfs.empty() && !seen[a2]) {
    int x = bfs.front();
    bfs.pop();
    for (int q : g.neighbors[x]) {  // ascending ids
      if (!in_a[q] || seen[q]) continue;
      seen[q] = 1;
      parent[q] = x;
      bfs.push(q);
    }
  }
  if (!seen[a2])
    throw no_path("geodesic_chain: endpoints disconnected within A");

  Chain chain;
  for (int x = a2; x != -1; x = parent[x]) chain.vertices.push_back(x);
  std::reverse(chain.vertices.begin(), chain.vertices.end());
  return chain;
}

/// Maximal connected unions of cells lying entirely in the level set
/// E(v, c), grown by shared vertices. Empty when no cell is v-constant
/// at level c.
struct CellCluster {
  std::vector<int> cells;
  std::set<int> vertices;
};

template <typename T>
std::vector<CellCluster> cell_cluster(const CellStructure& s,
                                      const std::vector<T>& v, const T& c,
                                      const Tolerances& tol = {}) {
  if (v.size() != static_cast<std::size_t>(s.vertex_count))
    throw malformed_input("cell_cluster: value vector length mismatch");

  std::vector<int> level_cells;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    bool inside = true;
    for (int q : s.cells[i])
      if (!ScalarTraits<T>::eq(v[q], c, tol.level_set)) {
        inside = false;
        break;
      }
    if (inside) level_cells.push_back(static_cast<int>(i));
  }
  if (level_cells.empty()) return {};

  // union-find over level cells joined by shared vertices
  std::vector<int> parent(level_cells.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<int>> cells_of_vertex(s.vertex_count);
  for (std::size_t i = 0; i < level_cells.size(); ++i)
    for (int q : s.cells[level_cells[i]])
      cells_of_vertex[q].push_back(static_cast<int>(i));
  for (const auto& sharing : cells_of_vertex)
    for (std::size_t j = 1; j < sharing.size(); ++j) {
      int x = find(sharing[0]), y = find(sharing[j]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }

  std::vector<CellCluster> out;
  std::vector<int> cluster_of_root(level_cells.size(), -1);
  for (std::size_t i = 0; i < level_cells.size(); ++i) {
    int root = find(static_cast<int>(i));
    if (cluster_of_root[root] == -1) {
      cluster_of_root[root] = static_cast<int>(out.size());
      out.push_back({});
    }
    CellCluster& cl = out[cluster_of_root[root]];
    cl.cells.push_back(level_cells[i]);
    for (int q : s.cells[level_cells[i]]) cl.vertices.insert(q);
  }
  return out;
}

}  // namespace gasket

#endif  // GASKET_VERIFIERS_HPP
