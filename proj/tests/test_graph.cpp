#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"
#include "test_util.hpp"

using namespace kcut;
using namespace kcut::testutil;

TEST_CASE("cut weight on small graphs") {
  auto triangle = complete_graph(3);
  CHECK(triangle.cut_weight({0}) == 2);
  auto k4 = complete_graph(4);
  CHECK(k4.cut_weight({0, 1}) == 4);
  WeightedMultigraph single(2, {{0, 1, 5, 1}});
  CHECK(single.cut_weight({0}) == 5);
  CHECK_THROWS_AS(single.cut_weight({7}), InputError);
}

TEST_CASE("cut function is symmetric") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v, Rational(1 + (int)(rng() % 5)), 1});
    WeightedMultigraph g(n, edges);
    std::vector<int> s, rest;
    for (int v = 0; v < n; ++v) (rng() % 2 ? s : rest).push_back(v);
    CHECK(g.cut_weight(s) == g.cut_weight(rest));
  }
}

TEST_CASE("cut function is submodular on random pairs") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3) edges.push_back({u, v, Rational(1 + (int)(rng() % 4)), 1});
    WeightedMultigraph g(n, edges);
    std::vector<int> a, b, both, either;
    for (int v = 0; v < n; ++v) {
      bool in_a = rng() % 2, in_b = rng() % 2;
      if (in_a) a.push_back(v);
      if (in_b) b.push_back(v);
      if (in_a && in_b) both.push_back(v);
      if (in_a || in_b) either.push_back(v);
    }
    CHECK(g.cut_weight(a) + g.cut_weight(b) >=
          g.cut_weight(both) + g.cut_weight(either));
  }
}

TEST_CASE("partition cost per objective") {
  auto path = path_graph(3);
  auto p = make_partition({{0}, {1}, {2}});
  CHECK(partition_cost_exact(path, p.parts, Objective::minmax()) == 2);
  CHECK(partition_cost_exact(path, p.parts, Objective::minsum()) == 4);
  CHECK(partition_cost(path, p, Objective::lp(2)) ==
        doctest::Approx(std::sqrt(6.0)));
  CHECK(partition_cost(path, p, Objective::lp(1)) == doctest::Approx(4.0));
}

TEST_CASE("minsum equals twice the crossing weight; lp approaches minmax") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) es.push_back({u, v});
    auto g = unit_graph(n, es);
    std::vector<std::vector<int>> parts(3);
    for (int v = 0; v < n; ++v) parts[rng() % 3].push_back(v);
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const std::vector<int>& p) { return p.empty(); }),
                parts.end());
    Partition p = make_partition(parts);
    Rational crossing = 0;
    for (const auto& e : crossing_edges(g, p.parts)) crossing += e.w * e.mult;
    CHECK(partition_cost_exact(g, p.parts, Objective::minsum()) == 2 * crossing);
    double minmax = partition_cost(g, p, Objective::minmax());
    if (minmax > 0) {
      double lp64 = partition_cost(g, p, Objective::lp(64));
      CHECK(lp64 >= minmax - 1e-9);
      CHECK(lp64 <= 1.05 * minmax);
    }
  }
}

TEST_CASE("crossing edges") {
  auto path = path_graph(3);
  auto p = make_partition({{0}, {1, 2}});
  auto cross = crossing_edges(path, p.parts);
  REQUIRE(cross.size() == 1);
  CHECK(cross[0].u == 0);
  CHECK(cross[0].v == 1);
  CHECK(crossing_edges(path, make_partition({{0, 1, 2}}).parts).empty());
  auto k4 = complete_graph(4);
  CHECK(crossing_edges(k4, make_partition({{0, 1}, {2, 3}}).parts).size() == 4);
  // Edges with an endpoint outside the ground set do not cross.
  Partition partial;
  partial.ground = {0, 1};
  partial.parts = {{0}, {1}};
  CHECK(crossing_edges(path, partial.parts).size() == 1);
}

TEST_CASE("restriction of subpartitions") {
  KSubpartition p;
  p.ground = {0, 1, 2};
  p.parts = {{0, 1}, {2}, {}};
  auto r = restrict_to(p, {0, 2});
  CHECK(r.parts == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(restrict_to(p, {}).parts.empty());
  KSubpartition q;
  q.ground = {0, 1, 2, 3};
  q.parts = {{0, 1}, {2, 3}};
  CHECK(restrict_to(q, {0, 1}).parts == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("refinement checks") {
  auto q = make_partition({{0}, {1}, {2}});
  auto p = make_partition({{0, 1}, {2}});
  CHECK(refines(q, p));
  CHECK(refines(p, p));
  CHECK_FALSE(refines(make_partition({{0, 1}, {2}}), make_partition({{0, 2}, {1}})));
  Partition other = make_partition({{0}, {1}});
  CHECK_THROWS_AS(refines(q, other), InputError);
}

TEST_CASE("refinement is a partial order on random partitions") {
  std::mt19937_64 rng(14);
  auto random_partition = [&](int n, int parts) {
    std::vector<std::vector<int>> ps(parts);
    for (int v = 0; v < n; ++v) ps[rng() % parts].push_back(v);
    ps.erase(std::remove_if(ps.begin(), ps.end(),
                            [](const std::vector<int>& p) { return p.empty(); }),
             ps.end());
    return make_partition(ps);
  };
  for (int trial = 0; trial < 40; ++trial) {
    int n = 5 + static_cast<int>(rng() % 4);
    auto a = random_partition(n, 4);
    auto b = random_partition(n, 3);
    auto c = random_partition(n, 2);
    CHECK(refines(a, a));
    if (refines(a, b) && refines(b, a)) CHECK(a.parts == b.parts);
    if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
  }
}

TEST_CASE("graph parsing and serialization") {
  auto g = parse_graph("p 2 1\ne 0 1 5\n");
  CHECK(g.n() == 2);
  CHECK(g.edges().size() == 1);
  CHECK(g.edges()[0].w == 5);

  CHECK_THROWS_WITH_AS(parse_graph("# nothing here\n"),
                       doctest::Contains("missing header"), InputError);
  CHECK_THROWS_AS(parse_graph("p 2 1\np 2 1\ne 0 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 5 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 0 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1 1\n"), InputError);

  // Rational and decimal weights parse exactly.
  auto h = parse_graph("p 3 3\ne 0 1 1/3\ne 1 2 0.25\ne 0 2 2\n");
  CHECK(h.edges()[0].w == Rational(1, 3));
  CHECK(h.total_weight() == Rational(1, 3) + Rational(1, 4) + 2);

  // Round trip on the canonical form.
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2)
          edges.push_back({u, v, Rational((int)(rng() % 7), 1 + (int)(rng() % 3)),
                           1 + (long long)(rng() % 3)});
    WeightedMultigraph g1(n, edges);
    auto g2 = parse_graph(serialize_graph(g1));
    CHECK(g1.n() == g2.n());
    CHECK(g1.edges() == g2.edges());
  }
}

TEST_CASE("parallel edges accumulate as multiplicity") {
  auto g = parse_graph("p 2 3\ne 0 1 1\ne 0 1 1\ne 0 1 2\n");
  CHECK(g.support_size() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.cut_weight({0}) == 4);
}
