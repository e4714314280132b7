#include <chrono>

#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace hamspan;
using namespace testing;

TEST_CASE("intersection parity examples") {
  auto p = path_graph(5);
  CHECK(intersection_parity(edges_of(p, {{1, 2}, {2, 3}}), edges_of(p, {{2, 3}, {3, 4}})));

  auto k4 = complete_graph(4);
  auto h1 = edges_of(k4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto tri = edges_of(k4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(intersection_parity(h1, tri));
  CHECK_FALSE(intersection_parity(h1, h1));
  CHECK(intersection_parity(tri, tri));
  CHECK(support_parity(tri));
}

TEST_CASE("incremental basis examples") {
  auto k4 = complete_graph(4);
  auto h1 = edges_of(k4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto h2 = edges_of(k4, {{0, 1}, {1, 3}, {2, 3}, {0, 2}});
  auto h3 = edges_of(k4, {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
  REQUIRE((h1 ^ h2) == h3);

  Gf2Basis b(k4.size());
  auto r1 = b.insert(h1);
  CHECK(r1.outcome == Gf2Basis::Outcome::extended);
  CHECK(b.rank() == 1);
  CHECK(b.insert(h1).outcome == Gf2Basis::Outcome::absorbed);
  CHECK(b.insert(h2).outcome == Gf2Basis::Outcome::extended);
  auto r3 = b.insert(h3);
  CHECK(r3.outcome == Gf2Basis::Outcome::absorbed);
  CHECK(r3.residual.empty());
  CHECK(b.rank() == 2);

  CHECK(b.in_span(EdgeVector(k4.size())));
  CHECK_FALSE(b.in_span(edges_of(k4, {{0, 1}, {0, 2}, {1, 2}})));

  auto c4 = cycle_graph(4);
  Gf2Basis single(c4.size());
  single.insert(EdgeVector::full(4));
  CHECK(single.in_span(EdgeVector::full(4)));
}

TEST_CASE("incremental rank equals batch rank") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const std::size_t m = 1 + rng.below(150), rows = rng.below(40);
    std::vector<EdgeVector> vs;
    Gf2Basis b(m);
    for (std::size_t i = 0; i < rows; ++i) {
      EdgeVector v(m);
      for (std::size_t j = 0; j < m; ++j)
        if (rng.bernoulli(0.1)) v.insert(j);
      // Every third row is a combination of earlier rows.
      if (i % 3 == 2 && i >= 2) v = vs[rng.below(i)] ^ vs[rng.below(i)];
      vs.push_back(v);
      b.insert(v);
      for (std::size_t r = 0; r < b.rank(); ++r) CHECK(b.rows()[r].next(0) == b.pivot(r));
    }
    CHECK(b.rank() == gf2_rank(vs));
    for (const auto& v : vs) CHECK(b.in_span(v));
  }
}

TEST_CASE("orthogonal complement") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const std::size_t m = 1 + rng.below(40);
    std::vector<EdgeVector> rows;
    for (std::size_t i = rng.below(m + 1); i > 0; --i) {
      EdgeVector v(m);
      for (std::size_t j = 0; j < m; ++j)
        if (rng.bernoulli(0.3)) v.insert(j);
      rows.push_back(v);
    }
    auto k = orthogonal_complement(rows, m);
    CHECK(k.size() + gf2_rank(rows) == m);
    CHECK(gf2_rank(k) == k.size());
    for (const auto& a : k)
      for (const auto& r : rows) CHECK_FALSE(intersection_parity(a, r));
  }
}

TEST_CASE("cycle basis examples") {
  std::vector<Edge> tree{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  CHECK(cycle_space_basis(Graph::from_edge_list(5, tree)).empty());

  auto c4 = cycle_graph(4);
  auto b = cycle_space_basis(c4);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == EdgeVector::full(4));

  // BFS tree of K4 from 0 is the star at 0, so each fundamental cycle is a
  // triangle through 0.
  auto k4 = complete_graph(4);
  auto kb = cycle_space_basis(k4);
  REQUIRE(kb.size() == 3);
  for (const auto& v : kb) {
    CHECK(v.count() == 3);
    CHECK(subgraph_degrees(k4, v)[0] == 2);
    CHECK(is_even_subgraph(k4, v));
  }
  CHECK(gf2_rank(kb) == 3);
}

TEST_CASE("cycle space dimension law, exhaustive for n <= 6") {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) e.push_back(all[i]);
      auto g = Graph::from_edge_list(n, e);
      const std::size_t c = component_count_union_find(g);
      const std::size_t expect = g.size() + c - n;
      auto basis = cycle_space_basis(g);
      REQUIRE(cycle_space_dimension(g) == expect);
      REQUIRE(basis.size() == expect);
      REQUIRE(gf2_rank(basis) == expect);
      ++graphs;
    }
  }
  CHECK(graphs == 1 + 2 + 8 + 64 + 1024 + 32768);
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(10));
}

TEST_CASE("cycle space dimension law on random graphs") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(12);
    auto g = random_graph(n, rng.unit(), seed);
    auto basis = cycle_space_basis(g);
    const std::size_t expect = g.size() + component_count_union_find(g) - n;
    CHECK(basis.size() == expect);
    CHECK(gf2_rank(basis) == expect);
    for (const auto& z : basis) CHECK(is_even_subgraph(g, z));
  }
}

TEST_CASE("stars and cuts") {
  auto tri = complete_graph(3);
  CHECK(star(tri, 0) == edges_of(tri, {{0, 1}, {0, 2}}));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_graph(3 + seed % 10, 0.5, seed);
    EdgeVector acc(g.size());
    for (const auto& s : cut_space_stars(g)) acc ^= s;
    CHECK(acc.empty());
    // Stars are orthogonal to the cycle space.
    for (const auto& s : cut_space_stars(g))
      for (const auto& z : cycle_space_basis(g)) CHECK_FALSE(intersection_parity(s, z));
    // Cut space dimension n - c.
    CHECK(gf2_rank(cut_space_stars(g)) == g.order() - component_count_union_find(g));
  }

  auto k4 = complete_graph(4);
  auto a = VertexSet::of(4, std::vector<std::size_t>{0, 1});
  CHECK((star(k4, 0) ^ star(k4, 1)) == edges_of(k4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(cut_of(k4, a) == edges_of(k4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST_CASE("even subgraphs") {
  auto k5 = complete_graph(5);
  CHECK(is_even_subgraph(k5, edge_vector_of_walk(k5, {0, 1, 2, 3}, true)));
  CHECK_FALSE(is_even_subgraph(k5, edges_of(k5, {{0, 1}})));
  // Two triangles sharing vertex 0.
  auto bowtie = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  CHECK(is_even_subgraph(bowtie, EdgeVector::full(6)));
}

TEST_CASE("hex roundtrip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t m = rng.below(300);
    EdgeVector v(m);
    for (std::size_t j = 0; j < m; ++j)
      if (rng.bernoulli(0.4)) v.insert(j);
    CHECK(from_hex(to_hex(v), m) == v);
  }
  CHECK_THROWS(from_hex("zz", 8));
}
