#include "gasket/cell_structure.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

// Row-major id on the lattice: row t = n - b from the apex down, a
// ascending within a row.
int lattice_id(int n, int a, int b) {
  const int t = n - b;
  return t * (t + 1) / 2 + a;
}

}  // namespace

bool AdjacencyGraph::adjacent(int p, int q) const {
  if (p == q) return false;
  const auto& nb = neighbors[p];
  return std::binary_search(nb.begin(), nb.end(), q);
}

CellStructure build_sg(int n) {
  if (n < 2) throw invalid_parameter("build_sg: n must be >= 2");

  CellStructure s;
  s.name = "sg" + std::to_string(n);
  s.boundary_size = 3;
  s.vertex_count = (n + 1) * (n + 2) / 2;

  std::vector<LatticePoint> coords(s.vertex_count);
  for (int b = n; b >= 0; --b)
    for (int a = 0; a + b <= n; ++a)
      coords[lattice_id(n, a, b)] = LatticePoint{a, b};
  s.coords = std::move(coords);

  // q0 apex, q1 bottom-left, q2 bottom-right
  s.boundary_vertices = {lattice_id(n, 0, n), lattice_id(n, 0, 0),
                         lattice_id(n, n, 0)};

  // upward cells anchored at (a, b), a + b <= n - 1, apex cell first;
  // corner order = (image of q0, image of q1, image of q2)
  for (int b = n - 1; b >= 0; --b)
    for (int a = 0; a + b <= n - 1; ++a)
      s.cells.push_back({lattice_id(n, a, b + 1), lattice_id(n, a, b),
                         lattice_id(n, a + 1, b)});
  return s;
}

CellStructure build_star_toy() {
  CellStructure s;
  s.name = "star-toy";
  s.boundary_size = 3;
  s.vertex_count = 7;  // q0 q1 q2 m w0 w1 w2
  s.boundary_vertices = {0, 1, 2};
  // cell i holds {q_i, m, w_i}; the tuple (q, m, w) is rotated so q_i
  // sits at corner position i
  s.cells = {{0, 3, 4}, {5, 1, 3}, {3, 6, 2}};
  return s;
}

AdjacencyGraph adjacency(const CellStructure& s) {
  AdjacencyGraph g;
  g.vertex_count = s.vertex_count;
  std::set<std::pair<int, int>> edge_set;
  for (const auto& cell : s.cells)
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        int p = cell[i], q = cell[j];
        if (p > q) std::swap(p, q);
        edge_set.insert({p, q});
      }
  g.edges.assign(edge_set.begin(), edge_set.end());
  g.neighbors.assign(g.vertex_count, {});
  for (auto [p, q] : g.edges) {
    g.neighbors[p].push_back(q);
    g.neighbors[q].push_back(p);
  }
  for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
  return g;
}

std::vector<std::vector<int>> vertex_symmetries(const CellStructure& s) {
  if (!s.coords)
    throw unsupported_structure(
        "vertex_symmetries: structure has no lattice coordinates");
  const auto& coords = *s.coords;

  // recover n from the apex row: a + b <= n with equality on the boundary
  int n = 0;
  for (const auto& p : coords) n = std::max(n, p.a + p.b);

  std::map<LatticePoint, int> id_of;
  for (int v = 0; v < s.vertex_count; ++v) id_of[coords[v]] = v;

  // barycentric triple (c, a, b) with c = n - a - b; the 6 symmetries are
  // the coordinate permutations
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> out;
  for (const auto& p : perms) {
    std::vector<int> sigma(s.vertex_count);
    for (int v = 0; v < s.vertex_count; ++v) {
      const int tri[3] = {n - coords[v].a - coords[v].b, coords[v].a,
                          coords[v].b};
      const int image[3] = {tri[p[0]], tri[p[1]], tri[p[2]]};
      auto it = id_of.find(LatticePoint{image[1], image[2]});
      if (it == id_of.end())
        throw unsupported_structure(
            "vertex_symmetries: coordinates not closed under symmetry");
      sigma[v] = it->second;
    }
    out.push_back(std::move(sigma));
  }
  return out;
}

std::vector<std::vector<int>> cell_orbits(const CellStructure& s) {
  const auto symmetries = vertex_symmetries(s);

  std::map<std::vector<int>, int> cell_of_corners;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    std::vector<int> key = s.cells[i];
    std::sort(key.begin(), key.end());
    cell_of_corners[key] = static_cast<int>(i);
  }

  // union-find over cell -> image-cell links
  std::vector<int> parent(s.cells.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& sigma : symmetries)
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      std::vector<int> key;
      for (int v : s.cells[i]) key.push_back(sigma[v]);
      std::sort(key.begin(), key.end());
      auto it = cell_of_corners.find(key);
      if (it == cell_of_corners.end())
        throw unsupported_structure(
            "cell_orbits: cells not closed under symmetry");
      int a = find(static_cast<int>(i)), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> orbits;
  for (auto& [root, members] : groups) orbits.push_back(std::move(members));
  return orbits;
}

std::set<int> subset_boundary(const CellStructure& s, const std::set<int>& a) {
  if (a.empty()) throw invalid_subset("subset_boundary: empty subset");
  for (int v : a) {
    if (v < 0 || v >= s.vertex_count)
      throw invalid_subset("subset_boundary: vertex id out of range");
    if (s.is_boundary(v))
      throw invalid_subset("subset_boundary: subset touches V0");
  }
  const auto interior = s.interior_vertices();
  if (a.size() >= interior.size())
    throw invalid_subset("subset_boundary: subset must be proper in the interior");

  const AdjacencyGraph g = adjacency(s);
  std::set<int> out;
  for (int p : a)
    for (int q : g.neighbors[p])
      if (!s.is_boundary(q) && !a.count(q)) {
        out.insert(p);
        break;
      }
  return out;
}

bool is_connected(const AdjacencyGraph& g, const std::vector<int>& subset) {
  std::vector<int> verts = subset;
  if (verts.empty())
    for (int v = 0; v < g.vertex_count; ++v) verts.push_back(v);
  if (verts.empty()) return true;

  std::vector<char> in_set(g.vertex_count, 0), seen(g.vertex_count, 0);
  for (int v : verts) in_set[v] = 1;

  std::queue<int> bfs;
  bfs.push(verts[0]);
  seen[verts[0]] = 1;
  std::size_t reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int q : g.neighbors[v])
      if (in_set[q] && !seen[q]) {
        seen[q] = 1;
        ++reached;
        bfs.push(q);
      }
  }
  return reached == verts.size();
}

namespace {

// Hopcroft-Tarjan articulation-point scan on the induced subgraph,
// iterative to keep deep lattices off the call stack.
bool has_articulation_point(const AdjacencyGraph& g,
                            const std::vector<int>& verts) {
  std::vector<char> in_set(g.vertex_count, 0);
  for (int v : verts) in_set[v] = 1;

  std::vector<int> pre(g.vertex_count, -1), low(g.vertex_count, 0),
      parent(g.vertex_count, -1);
  int counter = 0;

  struct Frame {
    int v;
    std::size_t next_edge;
  };

  const int root = verts[0];
  std::vector<Frame> stack{{root, 0}};
  pre[root] = low[root] = counter++;
  int root_children = 0;

  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nb = g.neighbors[f.v];
    bool descended = false;
    while (f.next_edge < nb.size()) {
      int q = nb[f.next_edge++];
      if (!in_set[q]) continue;
      if (pre[q] == -1) {
        parent[q] = f.v;
        pre[q] = low[q] = counter++;
        if (f.v == root) ++root_children;
        stack.push_back({q, 0});
        descended = true;
        break;
      } else if (q != parent[f.v]) {
        low[f.v] = std::min(low[f.v], pre[q]);
      }
    }
    if (descended) continue;
    stack.pop_back();
    if (!stack.empty()) {
      int p = stack.back().v;
      low[p] = std::min(low[p], low[f.v]);
      if (p != root && low[f.v] >= pre[p]) return true;
    }
  }
  return root_children > 1;
}

}  // namespace

bool is_two_connected(const AdjacencyGraph& g, const std::vector<int>& subset) {
  if (subset.size() < 3)
    throw invalid_parameter("is_two_connected: need at least 3 vertices");
  if (!is_connected(g, subset)) return false;
  return !has_articulation_point(g, subset);
}

void validate_structure(const CellStructure& s) {
  if (s.boundary_size <= 0 || s.vertex_count <= 0)
    throw malformed_input("structure: k and vertex_count must be positive");
  if (static_cast<int>(s.boundary_vertices.size()) != s.boundary_size)
    throw malformed_input("structure: boundary length != k");

  std::set<int> seen_boundary;
  for (int b : s.boundary_vertices) {
    if (b < 0 || b >= s.vertex_count)
      throw malformed_input("structure: boundary id out of range");
    if (!seen_boundary.insert(b).second)
      throw malformed_input("structure: duplicate boundary vertex");
  }

  std::vector<char> covered(s.vertex_count, 0);
  for (const auto& cell : s.cells) {
    if (static_cast<int>(cell.size()) != s.boundary_size)
      throw malformed_input("structure: cell arity != k");
    std::set<int> distinct;
    for (int v : cell) {
      if (v < 0 || v >= s.vertex_count)
        throw malformed_input("structure: cell vertex id out of range");
      if (!distinct.insert(v).second)
        throw malformed_input("structure: cell map not injective");
      covered[v] = 1;
    }
  }
  for (int v = 0; v < s.vertex_count; ++v)
    if (!covered[v])
      throw malformed_input("structure: vertex " + std::to_string(v) +
                            " lies in no cell");
  if (s.coords && static_cast<int>(s.coords->size()) != s.vertex_count)
    throw malformed_input("structure: coords length != vertex_count");

  if (!is_connected(adjacency(s)))
    throw malformed_input("structure: cell-sharing graph is disconnected");
}

}  // namespace gasket
