#include <doctest.h>

#include "flowroots/flow.hpp"
#include "support.hpp"

using namespace flowroots;

TEST_CASE("named graphs") {
  CHECK(flow_poly(make_loop_graph()) == IntPoly{-1, 1});
  CHECK(flow_poly(make_bond(3)) == IntPoly{2, -3, 1});
  CHECK(flow_poly(make_complete(4)) == IntPoly{-6, 11, -6, 1});
  CHECK(flow_poly(make_path(3)).is_zero());
  CHECK(flow_poly(MultiGraph(3)) == IntPoly{1});
  // F(Z_k) = ((x-1)^k + (-1)^k (x-1)) / x
  for (int k = 2; k <= 7; ++k) {
    const IntPoly xm1{-1, 1};
    IntPoly num = power(xm1, k) + (k % 2 == 0 ? xm1 : -xm1);
    CHECK(flow_poly(make_bond(k)) == exact_divide(num, IntPoly::monomial(1, 1)));
  }
}

TEST_CASE("lemma-accelerated recursion equals the plain recursion") {
  std::mt19937 rng(31);
  FlowEngine engine;
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const MultiGraph g = t % 2 ? testsupport::random_bridgeless(rng, n, n + static_cast<int>(rng() % 5))
                               : testsupport::random_connected(rng, n, n + static_cast<int>(rng() % 5));
    CHECK(engine.flow_poly(g) == flow_poly_naive(g));
  }
}

TEST_CASE("flow counts over Z_q match the polynomial") {
  std::mt19937 rng(37);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const MultiGraph g = testsupport::random_bridgeless(rng, n, n + static_cast<int>(rng() % 3));
    const IntPoly f = flow_poly(g);
    for (int q = 2; q <= 4; ++q) CHECK(f.evaluate(q) == count_flows_oracle(g, q));
  }
  CHECK(count_flows_oracle(make_bond(3), 3) == 2);
}

TEST_CASE("reduction traces replay to the same polynomial") {
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const MultiGraph g = testsupport::random_bridgeless(rng, n, n + 2 + static_cast<int>(rng() % 4));
    ReductionTrace trace;
    FlowEngine engine;
    const IntPoly f = engine.flow_poly(g, &trace);
    CHECK(replay(trace) == f);
    CHECK(!trace.to_text().empty());
  }
}

TEST_CASE("replay catches a tampered node") {
  ReductionTrace trace;
  FlowEngine engine(FlowEngine::Options{false, 0});
  engine.flow_poly(make_complete(4), &trace);
  REQUIRE(trace.nodes.size() > 1);
  trace.nodes[static_cast<std::size_t>(trace.root)].value = IntPoly{1};
  CHECK_THROWS_AS(replay(trace), std::logic_error);
}

TEST_CASE("proper 3-edge-cut splitting on the prism") {
  const MultiGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(flow_poly(prism) == flow_poly_naive(prism));
  // Both sides contract to K_4: F = F(K_4)^2 / ((x-1)(x-2)).
  const IntPoly k4 = flow_poly(make_complete(4));
  CHECK(flow_poly(prism) == exact_divide(k4 * k4, IntPoly{2, -3, 1}));
}

TEST_CASE("chromatic polynomials") {
  CHECK(chromatic_poly(make_complete(4)) == IntPoly::falling_factorial(4));
  CHECK(chromatic_poly(make_cycle(4)) == IntPoly{0, -3, 6, -4, 1});
  CHECK(chromatic_poly(make_loop_graph()).is_zero());
  CHECK(chromatic_poly(MultiGraph(2, {{0, 1}, {0, 1}})) == IntPoly{0, -1, 1});
}

TEST_CASE("chromatic polynomial of H_s") {
  for (int s = 3; s <= 6; ++s) {
    const IntPoly want = IntPoly::falling_factorial(s - 1) * IntPoly{2 * s - 3, -s, 1};
    CHECK(chromatic_poly(build_H_s(s)) == want);
  }
}

TEST_CASE("planar duality on small plane graphs") {
  const FaceStructure tri{{{0, 1, 2}, {0, 1, 2}}};
  const MultiGraph c3 = make_cycle(3);
  CHECK(chromatic_poly(c3) == IntPoly::monomial(1, 1) * flow_poly(build_dual(c3, tri)));
}

TEST_CASE("named flow examples") {
  for (int n = 2; n <= 7; ++n) CHECK(flow_poly_naive(make_cycle(n)) == IntPoly{-1, 1});
  const MultiGraph dumbbell(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  CHECK(flow_poly_naive(dumbbell).is_zero());
  CHECK(flow_poly(dumbbell).is_zero());
  CHECK(flow_poly_naive(MultiGraph(3)) == IntPoly{1});
  CHECK(count_flows_oracle(make_complete(4), 3) == 0);
  CHECK(count_flows_oracle(make_cycle(5), 2) == 1);
  CHECK(chromatic_poly(build_H_s(3)) == IntPoly{0, 1} * IntPoly{-1, 1} * IntPoly{3, -3, 1});
  CHECK(canonical_code(build_H_s(3)) == canonical_code(make_cycle(4)));
  CHECK(build_H_s(4).vertex_count() == 5);
  CHECK(build_H_s(4).edge_count() == 7);
  CHECK(build_H_s(7).edge_count() == 22);
}

TEST_CASE("degree and leading coefficient of F on bridgeless graphs") {
  std::mt19937 rng(59);
  for (int t = 0; t < 60; ++t) {
    const MultiGraph a = testsupport::random_bridgeless(rng, 1 + static_cast<int>(rng() % 4), 4);
    const MultiGraph b = testsupport::random_bridgeless(rng, 1 + static_cast<int>(rng() % 4), 4);
    const MultiGraph g = disjoint_union(a, b);
    const IntPoly f = flow_poly(g);
    CHECK(f.degree() == g.edge_count() - g.vertex_count() + component_count(g));
    CHECK(f.leading() == 1);
  }
}

TEST_CASE("planted proper 3-edge cuts") {
  // Two bridgeless sides joined by three edges with distinct endpoints on each
  // side; G_i contracts the other side to one vertex.
  std::mt19937 rng(61);
  int tested = 0;
  while (tested < 30) {
    const MultiGraph a = testsupport::random_bridgeless(rng, 3 + static_cast<int>(rng() % 2), 5, false);
    const MultiGraph b = testsupport::random_bridgeless(rng, 3 + static_cast<int>(rng() % 2), 5, false);
    const int na = a.vertex_count();
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.u + na, e.v + na});
    for (int i = 0; i < 3; ++i) edges.push_back({i, na + i});
    const MultiGraph g(na + b.vertex_count(), edges);
    std::vector<bool> side_b(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v = na; v < g.vertex_count(); ++v) side_b[static_cast<std::size_t>(v)] = true;
    std::vector<bool> side_a(side_b.size());
    for (std::size_t v = 0; v < side_b.size(); ++v) side_a[v] = !side_b[v];
    const MultiGraph g1 = contract_vertex_set(g, side_b);
    const MultiGraph g2 = contract_vertex_set(g, side_a);
    CHECK(flow_poly_naive(g) * IntPoly{2, -3, 1} == flow_poly_naive(g1) * flow_poly_naive(g2));
    CHECK(flow_poly(g) == flow_poly_naive(g));
    ++tested;
  }
}
