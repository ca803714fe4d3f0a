#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gasket/cell_structure.hpp"
#include "gasket/errors.hpp"
#include "gasket/io.hpp"
#include "oracles.hpp"

using namespace gasket;

TEST_CASE("build_sg counts match the closed formulas and brute enumeration") {
  // brute-force dedup of cell corners on the lattice, n <= 10
  for (int n = 2; n <= 10; ++n) {
    const auto brute = oracle::sg_counts_brute(n);
    const CellStructure s = build_sg(n);
    CHECK(s.cells.size() == brute.cells);
    CHECK(static_cast<std::size_t>(s.vertex_count) == brute.vertices);
    CHECK(s.cells.size() == static_cast<std::size_t>(n * n + n) / 2);
    CHECK(s.vertex_count == (n + 1) * (n + 2) / 2);
  }

  const CellStructure sg2 = build_sg(2);
  CHECK(sg2.cells.size() == 3);
  CHECK(sg2.vertex_count == 6);

  const CellStructure sg3 = build_sg(3);
  CHECK(sg3.cells.size() == 6);
  CHECK(sg3.vertex_count == 10);

  const CellStructure sg50 = build_sg(50);
  CHECK(sg50.cells.size() == 1275);
  CHECK(sg50.vertex_count == 1326);
}

TEST_CASE("build_sg rejects n < 2") {
  CHECK_THROWS_AS(build_sg(1), GasketError);
  CHECK_THROWS_AS(build_sg(0), GasketError);
  CHECK_THROWS_AS(build_sg(-3), GasketError);
  try {
    build_sg(1);
  } catch (const GasketError& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}

TEST_CASE("build_sg layout: apex first, boundary order (q0, q1, q2)") {
  const CellStructure s = build_sg(2);
  REQUIRE(s.coords.has_value());
  const auto& c = *s.coords;
  CHECK(s.boundary_vertices == std::vector<int>{0, 3, 5});
  CHECK(c[0] == LatticePoint{0, 2});   // q0 apex
  CHECK(c[3] == LatticePoint{0, 0});   // q1 bottom-left
  CHECK(c[5] == LatticePoint{2, 0});   // q2 bottom-right
  // apex cell first, corner order = images of (q0, q1, q2)
  CHECK(s.cells[0] == std::vector<int>{0, 1, 2});
  CHECK(s.cells[1] == std::vector<int>{1, 3, 4});
  CHECK(s.cells[2] == std::vector<int>{2, 4, 5});
}

TEST_CASE("build_sg is deterministic bit-for-bit") {
  for (int n : {2, 5, 9}) {
    const std::string a = structure_to_json(build_sg(n)).dump();
    const std::string b = structure_to_json(build_sg(n)).dump();
    CHECK(a == b);
  }
}

TEST_CASE("structure invariants for n in 2..12") {
  for (int n = 2; n <= 12; ++n) {
    const CellStructure s = build_sg(n);
    CHECK_NOTHROW(validate_structure(s));

    const AdjacencyGraph g = adjacency(s);
    CHECK(g.edges.size() == static_cast<std::size_t>(3 * (n * n + n) / 2));

    // distinct cells share at most one vertex
    for (std::size_t i = 0; i < s.cells.size(); ++i)
      for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
        std::set<int> a(s.cells[i].begin(), s.cells[i].end());
        int shared = 0;
        for (int v : s.cells[j]) shared += a.count(v);
        CHECK(shared <= 1);
      }

    CHECK(is_two_connected(g, s.interior_vertices()));
  }
}

TEST_CASE("adjacency edge counts and sample pairs") {
  CHECK(adjacency(build_sg(2)).edges.size() == 9);
  CHECK(adjacency(build_sg(3)).edges.size() == 18);

  const CellStructure s = build_sg(2);
  const AdjacencyGraph g = adjacency(s);
  // midpoints m01 (id 1) and m12 (id 4) share the bottom-left cell
  CHECK(g.adjacent(1, 4));
  // opposite corners are not adjacent
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(0, 5));
}

TEST_CASE("star toy shape") {
  const CellStructure s = build_star_toy();
  CHECK(s.boundary_size == 3);
  CHECK(s.vertex_count == 7);
  CHECK(s.cells.size() == 3);
  CHECK_NOTHROW(validate_structure(s));

  // cell 0 = {q0, m, w0}
  std::set<int> cell0(s.cells[0].begin(), s.cells[0].end());
  CHECK(cell0 == std::set<int>{0, 3, 4});
  // q_i sits at corner position i
  CHECK(s.cells[0][0] == 0);
  CHECK(s.cells[1][1] == 1);
  CHECK(s.cells[2][2] == 2);

  // each w_i lies in exactly one cell, m in all three
  for (int w : {4, 5, 6}) {
    int count = 0;
    for (const auto& cell : s.cells)
      count += std::count(cell.begin(), cell.end(), w);
    CHECK(count == 1);
  }
  int m_count = 0;
  for (const auto& cell : s.cells)
    m_count += std::count(cell.begin(), cell.end(), 3);
  CHECK(m_count == 3);

  const AdjacencyGraph g = adjacency(s);
  CHECK(g.neighbors[3].size() == 6);  // m adjacent to everything else

  // interior graph is a star centered at m: not 2-connected
  CHECK_FALSE(is_two_connected(g, s.interior_vertices()));
  CHECK(oracle::two_connected_brute(g, s.interior_vertices()) == false);
}

TEST_CASE("is_two_connected agrees with vertex-deletion brute force") {
  for (int n = 2; n <= 6; ++n) {
    const CellStructure s = build_sg(n);
    const AdjacencyGraph g = adjacency(s);
    const auto interior = s.interior_vertices();
    CHECK(is_two_connected(g, interior) == oracle::two_connected_brute(g, interior));

    // random induced subsets of the full vertex set
    std::mt19937 rng(1000 + n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> pool(s.vertex_count);
      for (int v = 0; v < s.vertex_count; ++v) pool[v] = v;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::uniform_int_distribution<std::size_t> size_dist(3, pool.size());
      pool.resize(size_dist(rng));
      std::sort(pool.begin(), pool.end());
      CHECK(is_two_connected(g, pool) == oracle::two_connected_brute(g, pool));
    }
  }
  CHECK(is_two_connected(adjacency(build_sg(3)), build_sg(3).interior_vertices()));

  const AdjacencyGraph g2 = adjacency(build_sg(2));
  CHECK_THROWS_AS(is_two_connected(g2, {0, 1}), GasketError);
}

TEST_CASE("cell orbits under the triangle symmetries") {
  auto sizes = [](const std::vector<std::vector<int>>& orbits) {
    std::vector<std::size_t> out;
    for (const auto& o : orbits) out.push_back(o.size());
    std::sort(out.begin(), out.end());
    return out;
  };

  CHECK(sizes(cell_orbits(build_sg(2))) == std::vector<std::size_t>{3});

  const auto orbits3 = cell_orbits(build_sg(3));
  CHECK(sizes(orbits3) == std::vector<std::size_t>{3, 3});
  // corner cells (apex 0, bottom-left 3, bottom-right 5) form one orbit
  for (const auto& orbit : orbits3) {
    std::set<int> members(orbit.begin(), orbit.end());
    if (members.count(0)) CHECK(members == std::set<int>{0, 3, 5});
    else CHECK(members == std::set<int>{1, 2, 4});
  }

  const auto orbits4 = cell_orbits(build_sg(4));
  CHECK(sizes(orbits4) == std::vector<std::size_t>{1, 3, 6});
  for (const auto& orbit : orbits4)
    if (orbit.size() == 1) CHECK(orbit[0] == 4);  // central upward cell

  CHECK_THROWS_AS(cell_orbits(build_star_toy()), GasketError);
}

TEST_CASE("orbit partition is invariant under relabeling by symmetries") {
  for (int n : {2, 3, 4, 5, 6}) {
    const CellStructure s = build_sg(n);
    const auto orbits = cell_orbits(s);
    std::vector<int> orbit_of(s.cells.size(), -1);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (int cell : orbits[o]) orbit_of[cell] = static_cast<int>(o);

    std::map<std::vector<int>, int> cell_of_corners;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      std::vector<int> key = s.cells[i];
      std::sort(key.begin(), key.end());
      cell_of_corners[key] = static_cast<int>(i);
    }
    for (const auto& sigma : vertex_symmetries(s))
      for (std::size_t i = 0; i < s.cells.size(); ++i) {
        std::vector<int> key;
        for (int v : s.cells[i]) key.push_back(sigma[v]);
        std::sort(key.begin(), key.end());
        REQUIRE(cell_of_corners.count(key));
        CHECK(orbit_of[cell_of_corners[key]] == orbit_of[i]);
      }
  }
}

TEST_CASE("subset_boundary on hand-checked subsets") {
  const CellStructure sg2 = build_sg(2);
  // interior of SG_2 = midpoints {1, 2, 4}
  CHECK(subset_boundary(sg2, {1, 2}) == std::set<int>{1, 2});
  CHECK(subset_boundary(sg2, {1}) == std::set<int>{1});

  const CellStructure toy = build_star_toy();
  CHECK(subset_boundary(toy, {4, 5}) == std::set<int>{4, 5});

  CHECK_THROWS_AS(subset_boundary(sg2, {0, 1}), GasketError);   // touches V0
  CHECK_THROWS_AS(subset_boundary(sg2, {1, 2, 4}), GasketError);  // = interior
  CHECK_THROWS_AS(subset_boundary(sg2, {}), GasketError);
  try {
    subset_boundary(sg2, {1, 2, 4});
  } catch (const GasketError& e) {
    CHECK(e.kind() == ErrorKind::InvalidSubset);
  }
}

TEST_CASE("subset boundaries have at least two vertices (n in 2..12)") {
  for (int n = 2; n <= 12; ++n) {
    const CellStructure s = build_sg(n);
    const auto interior = s.interior_vertices();
    std::mt19937 rng(4200 + n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = oracle::random_interior_subset(interior, 2, rng);
      CHECK(subset_boundary(s, a).size() >= 2);
    }
  }
}
