#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sgqw/error.hpp"
#include "sgqw/operators.hpp"
#include "sgqw/signed_graph.hpp"
#include "sgqw/spectral.hpp"

using namespace sgqw;

namespace {

ErrorCode code_of(std::size_t n, std::vector<VertexPair> edges) {
  try {
    build_instance(n, edges);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

const std::vector<VertexPair> kExample{{0, 1}, {1, 2}, {2, 3}};

}  // namespace

TEST_CASE("construction rejects malformed input") {
  CHECK(code_of(4, {}) == ErrorCode::EmptySubgraph);
  CHECK(code_of(1, {{0, 1}}) == ErrorCode::TooSmall);
  CHECK(code_of(4, {{0, 5}}) == ErrorCode::InvalidVertex);
  CHECK(code_of(4, {{2, 2}}) == ErrorCode::LoopEdge);
  CHECK(code_of(4, {{0, 1}, {1, 0}}) == ErrorCode::DuplicateEdge);
}

TEST_CASE("smallest instance") {
  const std::vector<VertexPair> e{{0, 1}};
  const auto g = build_instance(2, e);
  CHECK(g.gamma_order() == 2);
  CHECK(g.rest_order() == 1);
  CHECK(g.arcs().size() == 6);
}

TEST_CASE("arc table sizes and involution") {
  for (std::size_t n : {2U, 4U, 99U}) {
    const ArcTable t = build_arc_table(n);
    CHECK(t.size() == n * (n + 1));
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::size_t k = t.inverse(i);
      REQUIRE(k != i);
      CHECK(t.inverse(k) == i);
      CHECK(t[k].origin == t[i].terminus);
      CHECK(t[k].terminus == t[i].origin);
      CHECK(t.index(t[i]) == i);
    }
  }
  CHECK(build_arc_table(4).size() == 20);
  CHECK_THROWS_AS(build_arc_table(4).index({1, 1}), Error);
}

TEST_CASE("example configuration: canonical order, sigma and tau") {
  const auto g = build_instance(4, kExample);
  CHECK(g.gamma_order() == 4);
  CHECK(g.rest_order() == 1);
  for (std::size_t v = 0; v < 5; ++v) CHECK(g.to_canonical(v) == v);

  // sigma = -1 on (v_i, v_{i+1}) for marked edges, +1 elsewhere.
  CHECK(sigma(g, {0, 1}) == -1);
  CHECK(sigma(g, {1, 0}) == 1);
  CHECK(sigma(g, {1, 2}) == -1);
  CHECK(sigma(g, {2, 3}) == -1);
  CHECK(sigma(g, {3, 2}) == 1);
  CHECK(sigma(g, {0, 4}) == 1);
  CHECK(sigma(g, {4, 0}) == 1);

  CHECK(tau(g, {0, 1}) == -1);
  CHECK(tau(g, {2, 1}) == -1);
  CHECK(tau(g, {0, 2}) == 1);
  CHECK(tau(g, {3, 4}) == 1);
}

TEST_CASE("canonical order puts the marked vertices first") {
  const std::vector<VertexPair> e{{5, 2}, {2, 7}};
  const auto g = build_instance(8, e);
  CHECK(g.to_external(0) == 5);
  CHECK(g.to_external(1) == 2);
  CHECK(g.to_external(2) == 7);
  CHECK(g.to_external(3) == 0);
  CHECK(g.to_external(8) == 8);
  CHECK(g.is_marked(0, 1));
  CHECK(g.is_marked(2, 1));
  CHECK_FALSE(g.is_marked(0, 2));
}

TEST_CASE("property: tau has exactly |E(Gamma)| negative entries") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + gen() % 12;
    const std::size_t m = 1 + gen() % (n * (n + 1) / 2);
    const auto edges = oracle::random_edges(n, m, gen);
    const auto g = build_instance(n, edges);
    std::size_t negative = 0;
    int product = 1;
    for (std::size_t u = 0; u <= n; ++u) {
      for (std::size_t v = u + 1; v <= n; ++v) {
        const int t = tau(g, {u, v});
        product *= t;
        if (t < 0) ++negative;
        CHECK(t == sigma(g, {u, v}) * sigma(g, {v, u}));
      }
    }
    CHECK(negative == m);
    CHECK(product == (m % 2 == 0 ? 1 : -1));
    std::size_t signed_arcs = 0;
    for (double s : g.arc_signs()) signed_arcs += s < 0 ? 1 : 0;
    CHECK(signed_arcs == m);
    CHECK(g.marked_arcs().size() == 2 * m);
  }
}

TEST_CASE("property: complement sizes and incidence identity") {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + gen() % 10;
    const std::size_t total = n * (n + 1) / 2;
    const std::size_t m = 1 + gen() % (total - 1);
    const auto g = build_instance(n, oracle::random_edges(n, m, gen));
    const auto delta = build_complement(g);
    CHECK(delta.num_edges() == total - m);
    for (std::size_t v = 0; v <= n; ++v) CHECK(delta.degrees()[v] == n - g.gamma_degree(v));
    const auto nm = delta.incidence();
    const auto adj = delta.adjacency();
    for (std::size_t u = 0; u <= n; ++u) {
      for (std::size_t v = 0; v <= n; ++v) {
        int dot = 0;
        for (std::size_t e = 0; e < delta.num_edges(); ++e) dot += nm[u][e] * nm[v][e];
        const int expected = adj[u][v] + (u == v ? static_cast<int>(delta.degrees()[u]) : 0);
        CHECK(dot == expected);
      }
    }
    for (std::size_t e = 0; e < delta.num_edges(); ++e) {
      const auto& edge = delta.edges()[e];
      CHECK(delta.edge_index(edge.v, edge.u) == static_cast<std::ptrdiff_t>(e));
      CHECK_FALSE(g.is_marked(edge.u, edge.v));
    }
  }
}

TEST_CASE("property: orientation flip leaves tau, T and the spectrum unchanged") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + gen() % 9;
    const std::size_t m = 1 + gen() % (n * (n + 1) / 2);
    const auto edges = oracle::random_edges(n, m, gen);
    const auto fwd = build_instance(n, edges, SignOrientation::Forward);
    const auto rev = build_instance(n, edges, SignOrientation::Reverse);
    for (std::size_t u = 0; u <= n; ++u) {
      for (std::size_t v = u + 1; v <= n; ++v) CHECK(tau(fwd, {u, v}) == tau(rev, {u, v}));
    }
    const auto tf = build_T(fwd).matrix;
    const auto tr = build_T(rev).matrix;
    CHECK((tf - tr).cwiseAbs().maxCoeff() == 0.0);
    const auto ef = eigh(tf).values;
    const auto er = eigh(tr).values;
    CHECK((ef - er).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }
}

TEST_CASE("named generators") {
  CHECK(path_edges(3).size() == 3);
  CHECK(matching_edges(2) == std::vector<VertexPair>{{0, 1}, {2, 3}});
  CHECK(star_edges(3).size() == 3);
  CHECK(cycle_edges(4).size() == 4);
  CHECK(complete_bipartite_edges(2, 3).size() == 6);
  CHECK_THROWS_AS(cycle_edges(2), Error);

  const auto k23 = build_instance(4, complete_bipartite_edges(2, 3));
  CHECK(is_spanning_complete_bipartite(k23));
  const auto p3 = build_instance(4, path_edges(3));
  CHECK_FALSE(is_spanning_complete_bipartite(p3));
  const auto k12 = build_instance(2, path_edges(2));
  CHECK(is_spanning_complete_bipartite(k12));
}
