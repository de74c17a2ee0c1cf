#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcut/driver.hpp"
#include "kcut/instancegen.hpp"
#include "kcut/oracle.hpp"
#include "test_util.hpp"

using namespace kcut;
using namespace kcut::testutil;

TEST_CASE("exact solve fixtures") {
  auto triangle = complete_graph(3);
  auto r = exact_fpt(triangle, 3, 2);
  REQUIRE(r.feasible);
  CHECK(r.cost == 2);
  CHECK_FALSE(exact_fpt(triangle, 3, 1).feasible);

  // Two disjoint edges, one part per component, cost zero.
  auto two_edges = unit_graph(4, {{0, 1}, {2, 3}});
  auto split = exact_fpt(two_edges, 2, 0);
  REQUIRE(split.feasible);
  CHECK(split.cost == 0);
  CHECK(split.partition.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  // Forcing three parts needs to cut inside a component.
  auto three = exact_fpt(two_edges, 3, 1);
  REQUIRE(three.feasible);
  CHECK(three.cost == 1);
  CHECK_FALSE(exact_fpt(two_edges, 3, 0).feasible);

  CHECK_FALSE(exact_fpt(two_edges, 5, 9).feasible);
}

TEST_CASE("exact solve equals the oracle on disconnected inputs") {
  // Components solved separately must still reach the global optimum.
  auto g = unit_graph(7, {{0, 1}, {1, 2}, {0, 2},      // triangle
                          {3, 4}, {4, 5}, {5, 6}, {3, 6}});  // 4-cycle
  for (int k = 2; k <= 5; ++k) {
    auto opt = brute_opt(g, k, Objective::minmax());
    REQUIRE(opt.feasible);
    long long lambda = std::max<long long>(opt.opt_value.convert_to<long long>(), 1);
    auto r = exact_fpt(g, k, lambda);
    REQUIRE(r.feasible);
    CHECK(Rational(r.cost_power) == opt.opt_value);
  }
}

TEST_CASE("tree retry is no worse than a single tree") {
  auto corpus = random_corpus({7, 8, 0.4, 1, 1, 5, 211});
  for (const auto& g : corpus) {
    ExactOptions retry;
    retry.tree_retry = 3;
    auto opt = brute_opt(g, 3, Objective::minmax());
    long long lambda = opt.opt_value.convert_to<long long>();
    auto single = exact_fpt(g, 3, lambda);
    auto multi = exact_fpt(g, 3, lambda, Objective::minmax(), retry);
    REQUIRE(single.feasible);
    REQUIRE(multi.feasible);
    CHECK(multi.cost_power <= single.cost_power);
    CHECK(Rational(multi.cost_power) == opt.opt_value);
  }
}

TEST_CASE("scheme on unit fixtures is exact") {
  auto triangle = complete_graph(3);
  for (Rational eps : {Rational(1, 2), Rational(1, 4)}) {
    auto r = approx_scheme(triangle, 3, eps, 1);
    REQUIRE(r.feasible);
    CHECK(r.cost == 2);
  }
}

TEST_CASE("scheme guarantee on weighted graphs") {
  auto corpus = random_corpus({5, 7, 0.6, 1, 10, 8, 221});
  for (const auto& g : corpus) {
    for (int k = 2; k <= 3; ++k) {
      auto opt = brute_opt(g, k, Objective::minmax());
      REQUIRE(opt.feasible);
      auto r = approx_scheme(g, k, Rational(1, 2), 13);
      REQUIRE(r.feasible);
      CHECK(r.partition.parts.size() == static_cast<std::size_t>(k));
      // Feasibility: never below the optimum.
      Rational cost = partition_cost_exact(g, r.partition.parts, Objective::minmax());
      CHECK(cost >= opt.opt_value);
      CHECK(cost <= (1 + Rational(1, 2)) * opt.opt_value);
    }
  }
}

TEST_CASE("scheme handles zero-weight and disconnected inputs") {
  WeightedMultigraph zero(4, {{0, 1, 0, 1}, {2, 3, 0, 1}});
  auto r = approx_scheme(zero, 2, Rational(1, 2), 1);
  REQUIRE(r.feasible);
  CHECK(r.cost == 0);

  auto two_triangles =
      unit_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto split = approx_scheme(two_triangles, 2, Rational(1, 2), 1);
  REQUIRE(split.feasible);
  CHECK(split.cost == 0);
  auto harder = approx_scheme(two_triangles, 3, Rational(1, 2), 1);
  REQUIRE(harder.feasible);
  CHECK(harder.cost == 2);  // one triangle must split
}

TEST_CASE("scheme certificate records the pipeline") {
  auto g = random_corpus({6, 6, 0.6, 1, 10, 1, 231})[0];
  auto r = approx_scheme(g, 2, Rational(1, 2), 3);
  REQUIRE(r.feasible);
  CHECK(r.certificate.lambda_guess > 0);
  CHECK(r.certificate.lambda_cap > 0);
  CHECK(r.certificate.theta >= 0);
}

TEST_CASE("scheme rejects bad parameters") {
  auto g = complete_graph(3);
  CHECK_THROWS_AS(approx_scheme(g, 1, Rational(1, 2), 1), InputError);
  CHECK_THROWS_AS(approx_scheme(g, 2, Rational(2), 1), InputError);
  CHECK_FALSE(approx_scheme(g, 5, Rational(1, 2), 1).feasible);
}
