// Test-only oracles, deliberately independent of the library's solver
// path: cofactor-expansion inverses instead of LU, brute-force graph
// scans instead of Hopcroft-Tarjan, direct lattice enumeration instead
// of build_sg's indexing.
#ifndef GASKET_TESTS_ORACLES_HPP
#define GASKET_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gasket/cell_structure.hpp"
#include "gasket/matrix.hpp"
#include "gasket/scalar.hpp"

namespace gasket::oracle {

// determinant by cofactor expansion along the first row
template <typename T>
T det_cofactor(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  T acc(0);
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    T term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

// inverse via the adjugate; requires nonsingular input
template <typename T>
Matrix<T> inverse_adjugate(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  const T det = det_cofactor(m);
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<T> minor(n - 1, n - 1);
      std::size_t ii = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;  // adjugate transposes the cofactor matrix
        std::size_t jj = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor(ii, jj++) = m(r, c);
        }
        ++ii;
      }
      T cof = det_cofactor(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = cof / det;
    }
  return inv;
}

// Schur complement onto `boundary` computed entirely through the
// adjugate inverse (no elimination shared with the library)
template <typename T>
Matrix<T> schur_via_adjugate(const Matrix<T>& h, const std::vector<int>& boundary) {
  const std::size_t n = h.rows();
  std::vector<char> is_bd(n, 0);
  for (int b : boundary) is_bd[b] = 1;
  std::vector<int> interior;
  for (std::size_t v = 0; v < n; ++v)
    if (!is_bd[v]) interior.push_back(static_cast<int>(v));

  const std::size_t k = boundary.size(), m = interior.size();
  Matrix<T> x(m, m), j(m, k), t(k, k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) x(a, b) = h(interior[a], interior[b]);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < k; ++b) j(a, b) = h(interior[a], boundary[b]);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t(a, b) = h(boundary[a], boundary[b]);

  return t - j.transpose() * inverse_adjugate(x) * j;
}

// connectivity by plain scan over an explicit edge list
inline bool connected_brute(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<int>& subset) {
  if (subset.empty()) return true;
  std::set<int> inside(subset.begin(), subset.end());
  std::set<int> seen{subset[0]};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [p, q] : edges) {
      if (!inside.count(p) || !inside.count(q)) continue;
      if (seen.count(p) && !seen.count(q)) { seen.insert(q); grew = true; }
      if (seen.count(q) && !seen.count(p)) { seen.insert(p); grew = true; }
    }
  }
  return seen.size() == inside.size();
}

// 2-connectivity by deleting each vertex in turn
inline bool two_connected_brute(const AdjacencyGraph& g, const std::vector<int>& subset) {
  if (!connected_brute(g.vertex_count, g.edges, subset)) return false;
  for (int removed : subset) {
    std::vector<int> rest;
    for (int v : subset)
      if (v != removed) rest.push_back(v);
    if (!connected_brute(g.vertex_count, g.edges, rest)) return false;
  }
  return true;
}

// SG_n counts by direct lattice enumeration: cells from anchors, vertex
// set deduplicated from cell corners
struct SgCounts {
  std::size_t cells = 0;
  std::size_t vertices = 0;
};
inline SgCounts sg_counts_brute(int n) {
  SgCounts out;
  std::set<std::pair<int, int>> verts;
  for (int b = 0; b <= n - 1; ++b)
    for (int a = 0; a + b <= n - 1; ++a) {
      ++out.cells;
      verts.insert({a, b + 1});
      verts.insert({a, b});
      verts.insert({a + 1, b});
    }
  out.vertices = verts.size();
  return out;
}

// all simple paths between two vertices inside an induced subgraph;
// returns the minimum edge count (exponential, small inputs only)
inline int shortest_path_brute(const AdjacencyGraph& g, const std::vector<int>& a,
                               int a1, int a2) {
  std::set<int> inside(a.begin(), a.end());
  int best = -1;
  std::vector<int> path{a1};
  std::set<int> used{a1};
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == a2) {
      int len = static_cast<int>(path.size()) - 1;
      if (best < 0 || len < best) best = len;
      return;
    }
    for (int q : g.neighbors[at]) {
      if (!inside.count(q) || used.count(q)) continue;
      used.insert(q);
      path.push_back(q);
      self(self, q);
      path.pop_back();
      used.erase(q);
    }
  };
  dfs(dfs, a1);
  return best;
}

// random small-integer boundary Laplacian on k vertices: conductances
// in 1..9 on every pair (complete support, hence valid)
template <typename T>
Matrix<T> random_boundary_laplacian(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(1, 9);
  Matrix<T> d(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      T c = T(dist(rng));
      d(i, j) = c;
      d(j, i) = c;
      d(i, i) -= c;
      d(j, j) -= c;
    }
  return d;
}

// nonconstant boundary tuple with integer entries in [-9, 9]
template <typename T>
std::vector<T> random_boundary_values(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  while (true) {
    std::vector<T> u;
    for (int i = 0; i < k; ++i) u.push_back(T(dist(rng)));
    for (int i = 1; i < k; ++i)
      if (!(u[i] == u[0])) return u;
  }
}

// random proper interior subset with at least min_size vertices
inline std::set<int> random_interior_subset(const std::vector<int>& interior,
                                            std::size_t min_size, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(min_size, interior.size() - 1);
  std::size_t size = size_dist(rng);
  std::vector<int> pool = interior;
  std::shuffle(pool.begin(), pool.end(), rng);
  return std::set<int>(pool.begin(), pool.begin() + size);
}

}  // namespace gasket::oracle

#endif  // GASKET_TESTS_ORACLES_HPP
