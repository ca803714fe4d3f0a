#include <doctest.h>

#include <random>
#include <set>

#include "gasket/verifiers.hpp"
#include "gasket/harmonic.hpp"
#include "gasket/laplacian.hpp"
#include "gasket/errors.hpp"
#include "oracles.hpp"

using namespace gasket;

namespace {

Matrix<Rational> d_std() { return standard_boundary_laplacian<Rational>(3); }

struct Setup {
  CellStructure s;
  Matrix<Rational> h1;
};

Setup standard_setup(int n) {
  CellStructure s = build_sg(n);
  const auto solve = solve_homogeneous_ratio(s, d_std());
  REQUIRE(solve.proportional);
  std::vector<Rational> r(s.cells.size(), solve.ratio);
  Matrix<Rational> h1 = assemble_h1(s, d_std(), r);
  return {std::move(s), std::move(h1)};
}

Setup toy_setup() {
  CellStructure s = build_star_toy();
  std::vector<Rational> r(3, frac(1, 2));
  Matrix<Rational> h1 = assemble_h1(s, d_std(), r);
  return {std::move(s), std::move(h1)};
}

std::set<int> boundary_set(const CellStructure& s) {
  return std::set<int>(s.boundary_vertices.begin(), s.boundary_vertices.end());
}

}  // namespace

TEST_CASE("reachability sets") {
  const auto [s, h1] = standard_setup(2);

  // interior triangle reaches all three corners
  CHECK(reachability_set(h1, boundary_set(s), 1) == std::set<int>{0, 3, 5});

  // one-step case: U = everything except p
  std::set<int> all_but;
  for (int v = 0; v < s.vertex_count; ++v)
    if (v != 1) all_but.insert(v);
  CHECK(reachability_set(h1, all_but, 1) == std::set<int>{0, 2, 3, 4});

  const auto [toy, th1] = toy_setup();
  CHECK(reachability_set(th1, {0, 1, 2, 3}, 4) == std::set<int>{0, 3});

  CHECK_THROWS_AS(reachability_set(h1, boundary_set(s), 0), GasketError);
  try {
    reachability_set(h1, boundary_set(s), 3);
  } catch (const GasketError& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}

TEST_CASE("maximum principle on the SG_2 basis extension") {
  const auto [s, h1] = standard_setup(2);
  const auto v = harmonic_extend(h1, s, {Rational(1), Rational(0), Rational(0)});

  const auto rep = verify_maximum_principle(h1, boundary_set(s), v);
  CHECK(rep.pass);

  // constant functions pass through the equality branch
  const std::vector<Rational> c(s.vertex_count, frac(4, 3));
  CHECK(verify_maximum_principle(h1, boundary_set(s), c).pass);

  // tampering breaks the harmonicity precondition
  auto tampered = v;
  tampered[1] = Rational(2);
  CHECK_THROWS_AS(verify_maximum_principle(h1, boundary_set(s), tampered),
                  GasketError);
  try {
    verify_maximum_principle(h1, boundary_set(s), tampered);
  } catch (const GasketError& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
}

TEST_CASE("maximum principle over random exceptional supersets") {
  std::mt19937 rng(61);
  for (int n = 2; n <= 6; ++n) {
    const auto [s, h1] = standard_setup(n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto u0 = oracle::random_boundary_values<Rational>(3, rng);
      const auto v = harmonic_extend(h1, s, u0);

      std::set<int> u = boundary_set(s);
      const auto interior = s.interior_vertices();
      std::uniform_int_distribution<std::size_t> extra_dist(0, interior.size() - 1);
      const std::size_t extra = extra_dist(rng);
      std::vector<int> pool = interior;
      std::shuffle(pool.begin(), pool.end(), rng);
      for (std::size_t i = 0; i < extra; ++i) u.insert(pool[i]);

      CHECK(verify_maximum_principle(h1, u, v).pass);
    }
  }
}

TEST_CASE("monotone chains on the SG_2 golden extension") {
  const auto [s, h1] = standard_setup(2);
  const auto v = harmonic_extend(h1, s, {Rational(1), Rational(0), Rational(0)});

  // from m12 upward: m12 -> m01 -> q0 (ties break to the lowest id)
  const auto up = monotone_chain(h1, s, v, 4, ChainDirection::Increasing);
  CHECK(up.vertices == std::vector<int>{4, 1, 0});

  // from m12 downward: both corners attain 0; lowest id wins
  const auto down = monotone_chain(h1, s, v, 4, ChainDirection::Decreasing);
  CHECK(down.vertices == std::vector<int>{4, 3});

  const std::vector<Rational> c(s.vertex_count, Rational(2));
  CHECK_THROWS_AS(monotone_chain(h1, s, c, 4, ChainDirection::Increasing),
                  GasketError);
  try {
    monotone_chain(h1, s, c, 4, ChainDirection::Increasing);
  } catch (const GasketError& e) {
    CHECK(e.kind() == ErrorKind::NoChain);
  }

  CHECK_THROWS_AS(monotone_chain(h1, s, v, 0, ChainDirection::Increasing),
                  GasketError);  // boundary start
}

TEST_CASE("monotone chains exist from every eligible vertex, both ways") {
  std::mt19937 rng(67);
  for (int n = 2; n <= 6; ++n) {
    const auto [s, h1] = standard_setup(n);
    const AdjacencyGraph g = adjacency(s);
    for (int trial = 0; trial < 8; ++trial) {
      const auto u0 = oracle::random_boundary_values<Rational>(3, rng);
      const auto v = harmonic_extend(h1, s, u0);
      for (int p : s.interior_vertices()) {
        bool eligible = false;
        for (int q : g.neighbors[p])
          if (v[q] != v[p]) eligible = true;
        if (!eligible) continue;
        for (auto dir : {ChainDirection::Increasing, ChainDirection::Decreasing}) {
          const Chain chain = monotone_chain(h1, s, v, p, dir);
          REQUIRE(chain.size() >= 2);
          CHECK(s.is_boundary(chain.vertices.back()));
          for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            CHECK(g.adjacent(chain.vertices[i], chain.vertices[i + 1]));
            if (dir == ChainDirection::Increasing)
              CHECK(v[chain.vertices[i]] < v[chain.vertices[i + 1]]);
            else
              CHECK(v[chain.vertices[i]] > v[chain.vertices[i + 1]]);
          }
        }
      }
    }
  }
}

TEST_CASE("geodesic chains") {
  const CellStructure s2 = build_sg(2);
  const AdjacencyGraph g2 = adjacency(s2);

  const auto direct = geodesic_chain(g2, {1, 2, 4}, 1, 4);
  CHECK(direct.vertices == std::vector<int>{1, 4});

  const auto self = geodesic_chain(g2, {1, 2, 4}, 2, 2);
  CHECK(self.vertices == std::vector<int>{2});

  // disconnected endpoints inside A
  CHECK_THROWS_AS(geodesic_chain(g2, {0, 5}, 0, 5), GasketError);
  try {
    geodesic_chain(g2, {0, 5}, 0, 5);
  } catch (const GasketError& e) {
    CHECK(e.kind() == ErrorKind::NoPath);
  }
  CHECK_THROWS_AS(geodesic_chain(g2, {1, 2}, 1, 4), GasketError);
}

TEST_CASE("geodesic length matches exhaustive enumeration on SG_2, SG_3") {
  std::mt19937 rng(71);
  for (int n : {2, 3}) {
    const CellStructure s = build_sg(n);
    const AdjacencyGraph g = adjacency(s);
    std::vector<int> all(s.vertex_count);
    for (int v = 0; v < s.vertex_count; ++v) all[v] = v;

    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> pool = all;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::uniform_int_distribution<std::size_t> size_dist(2, pool.size());
      pool.resize(size_dist(rng));
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const int a1 = pool[pick(rng)], a2 = pool[pick(rng)];
      const int brute = oracle::shortest_path_brute(g, pool, a1, a2);
      if (brute < 0) {
        CHECK_THROWS_AS(geodesic_chain(g, pool, a1, a2), GasketError);
      } else {
        const auto chain = geodesic_chain(g, pool, a1, a2);
        CHECK(static_cast<int>(chain.size()) - 1 == brute);
      }
    }
  }
}

TEST_CASE("geodesic along one side of SG_4 has lattice length") {
  const CellStructure s = build_sg(4);
  REQUIRE(s.coords.has_value());
  // bottom row b = 0: ids of (a, 0) for a = 0..4
  std::vector<int> bottom;
  for (int v = 0; v < s.vertex_count; ++v)
    if ((*s.coords)[v].b == 0) bottom.push_back(v);
  REQUIRE(bottom.size() == 5);
  const auto chain = geodesic_chain(adjacency(s), bottom, bottom.front(), bottom.back());
  CHECK(chain.size() == 5);  // 4 lattice steps
}

TEST_CASE("cell clusters: empty on SG_2 extensions, full on constants") {
  const auto [s, h1] = standard_setup(2);
  const auto v = harmonic_extend(h1, s, {Rational(1), Rational(0), Rational(0)});
  for (const auto& c : {frac(2, 5), frac(1, 5), Rational(1), Rational(0)})
    CHECK(cell_cluster(s, v, c).empty());

  const std::vector<Rational> constant(s.vertex_count, frac(-3, 7));
  const auto clusters = cell_cluster(s, constant, frac(-3, 7));
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].cells == std::vector<int>{0, 1, 2});
  CHECK(clusters[0].vertices.size() == static_cast<std::size_t>(s.vertex_count));
}

TEST_CASE("degenerate contrast on the star toy") {
  const auto [s, h1] = toy_setup();
  const auto v = harmonic_extend(h1, s, {Rational(0), Rational(1), Rational(-1)});

  const auto clusters = cell_cluster(s, v, Rational(0));
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].cells == std::vector<int>{0});
  CHECK(clusters[0].vertices == std::set<int>{0, 3, 4});

  // Lemma 2.2's hypothesis indeed fails here
  CHECK_FALSE(is_two_connected(adjacency(s), s.interior_vertices()));
}

TEST_CASE("cell constancy stays empty across structures and extensions") {
  std::mt19937 rng(73);
  for (int n = 2; n <= 8; ++n) {
    const auto [s, h1] = standard_setup(n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto u0 = oracle::random_boundary_values<Rational>(3, rng);
      const auto v = harmonic_extend(h1, s, u0);
      CHECK(check_cell_constancy(s, v).empty());
      std::set<Rational> values(v.begin(), v.end());
      for (const auto& c : values) CHECK(cell_cluster(s, v, c).empty());
    }
  }
}
