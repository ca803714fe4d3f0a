#ifndef GASKET_CELL_STRUCTURE_HPP
#define GASKET_CELL_STRUCTURE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gasket {

/// Barycentric-style lattice coordinates: a steps toward q2 and b steps
/// toward q0 from q1, with a + b <= n. Integer-exact; the geometric
/// position is q1 + (a/n)(q2-q1) + (b/n)(q0-q1).
struct LatticePoint {
  int a = 0;
  int b = 0;

  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Combinatorial description of a level-1 approximation: an ordered list
/// of cells, each an injective k-tuple of vertex ids (position j of cell
/// i is the image of boundary corner q_j under the i-th contraction).
struct CellStructure {
  std::string name;
  int boundary_size = 0;  // k
  int vertex_count = 0;
  std::vector<int> boundary_vertices;      // k distinct ids, corner order
  std::vector<std::vector<int>> cells;     // canonical order
  std::optional<std::vector<LatticePoint>> coords;  // per vertex, SG only

  bool is_boundary(int v) const {
    for (int b : boundary_vertices)
      if (b == v) return true;
    return false;
  }

  std::vector<int> interior_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count; ++v)
      if (!is_boundary(v)) out.push_back(v);
    return out;
  }
};

/// Undirected simple graph on vertex ids 0..vertex_count-1.
struct AdjacencyGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;      // p < q, sorted
  std::vector<std::vector<int>> neighbors;     // sorted adjacency lists

  bool adjacent(int p, int q) const;
};

/// Level-n Sierpinski gasket level-1 approximation: (n^2+n)/2 upward
/// cells on the triangular lattice, (n+1)(n+2)/2 vertices, row-major
/// ordering from the apex (vertex 0 = q0), boundary order (q0, q1, q2).
CellStructure build_sg(int n);

/// Minimal synthetic structure with nonjunction inner vertices w_i, each
/// in exactly one cell {q_i, m, w_i}; its interior graph is a star on m,
/// so the 2-connectivity hypothesis fails and a nonconstant harmonic
/// function vanishing on a whole cell exists.
CellStructure build_star_toy();

/// Edge {p, q} present iff p != q and some cell contains both.
AdjacencyGraph adjacency(const CellStructure& s);

/// Partition of cell indices into orbits under the 6 triangle symmetries
/// acting on lattice anchors. Requires lattice coordinates. Orbits sorted
/// by smallest member; members ascending.
std::vector<std::vector<int>> cell_orbits(const CellStructure& s);

/// The 6 symmetries as vertex permutations (identity first). Requires
/// lattice coordinates. perm[v] = image vertex id.
std::vector<std::vector<int>> vertex_symmetries(const CellStructure& s);

/// Members of A adjacent to an interior vertex outside A. A must be a
/// nonempty proper subset of the interior.
std::set<int> subset_boundary(const CellStructure& s, const std::set<int>& a);

/// True iff the induced subgraph on `subset` (>= 3 vertices) is connected
/// and has no articulation point.
bool is_two_connected(const AdjacencyGraph& g, const std::vector<int>& subset);

/// Connectivity of the induced subgraph (whole graph when subset empty).
bool is_connected(const AdjacencyGraph& g, const std::vector<int>& subset = {});

/// Structural invariant check used on deserialized input: injective cell
/// maps, ids in range, full coverage, distinct boundary, connectivity.
void validate_structure(const CellStructure& s);

}  // namespace gasket

#endif  // GASKET_CELL_STRUCTURE_HPP
