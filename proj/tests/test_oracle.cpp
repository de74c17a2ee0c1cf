#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcut/instancegen.hpp"
#include "kcut/oracle.hpp"
#include "test_util.hpp"

using namespace kcut;
using namespace kcut::testutil;

namespace {

int count_partitions(int n, int k) {
  int count = 0;
  enumerate_k_partitions(n, k, 12, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace

TEST_CASE("enumeration counts match Stirling numbers") {
  CHECK(count_partitions(3, 2) == 3);
  CHECK(count_partitions(4, 2) == 7);
  CHECK(count_partitions(5, 3) == 25);
  CHECK(count_partitions(4, 4) == 1);
  CHECK(count_partitions(3, 4) == 0);  // k > n: nothing
  CHECK_THROWS_AS(count_partitions(13, 2), InputError);
  CHECK_THROWS_AS(enumerate_k_partitions(3, 0, 12, [](const std::vector<int>&) {
    return true;
  }),
                  InputError);
}

TEST_CASE("enumeration is lexicographic and canonical") {
  std::vector<std::vector<int>> seen;
  enumerate_k_partitions(3, 2, 12, [&](const std::vector<int>& labels) {
    seen.push_back(labels);
    return true;
  });
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == std::vector<int>{0, 0, 1});
  CHECK(seen[1] == std::vector<int>{0, 1, 0});
  CHECK(seen[2] == std::vector<int>{0, 1, 1});
}

TEST_CASE("brute optimum on fixtures") {
  auto path = path_graph(3);
  auto r = brute_opt(path, 2, Objective::minmax());
  CHECK(r.feasible);
  CHECK(r.opt_value == 1);

  auto k4 = complete_graph(4);
  CHECK(brute_opt(k4, 2, Objective::minmax()).opt_value == 3);

  auto triangle = complete_graph(3);
  CHECK(brute_opt(triangle, 3, Objective::minmax()).opt_value == 2);
  CHECK(brute_opt(triangle, 3, Objective::minsum()).opt_value == 6);

  CHECK_FALSE(brute_opt(triangle, 4, Objective::minmax()).feasible);
}

TEST_CASE("all optima") {
  auto path = path_graph(3);
  auto optima = all_optima(path, 2, Objective::minmax());
  REQUIRE(optima.size() == 2);
  // Label-string order: {0,1},{2} precedes {0},{1,2}.
  CHECK(optima[0].parts == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(optima[1].parts == std::vector<std::vector<int>>{{0}, {1, 2}});

  auto k4 = complete_graph(4);
  CHECK(all_optima(k4, 2, Objective::minmax()).size() == 4);

  auto k2 = complete_graph(2);
  CHECK(all_optima(k2, 2, Objective::minmax()).size() == 1);
}

TEST_CASE("witnesses achieve the reported value and the first is smallest") {
  auto graphs = enumerate_graphs(5, true);
  for (const auto& g : graphs) {
    for (int k = 2; k <= 3; ++k) {
      auto r = brute_opt(g, k, Objective::minmax());
      REQUIRE(r.feasible);
      for (const auto& w : r.witnesses)
        CHECK(partition_cost_exact(g, w.parts, Objective::minmax()) == r.opt_value);
    }
  }
}

TEST_CASE("minmax and minsum sandwich") {
  auto graphs = enumerate_graphs(6, true);
  for (const auto& g : graphs) {
    for (int k = 2; k <= 4; ++k) {
      auto mm = brute_opt(g, k, Objective::minmax());
      auto ms = brute_opt(g, k, Objective::minsum());
      REQUIRE(mm.feasible);
      CHECK(mm.opt_value <= ms.opt_value);
      CHECK(ms.opt_value <= k * mm.opt_value);
    }
  }
}

TEST_CASE("k=2 minmax equals minsum equals the global min cut") {
  auto graphs = enumerate_graphs(6, true);
  for (const auto& g : graphs) {
    auto mm = brute_opt(g, 2, Objective::minmax());
    auto ms = brute_opt(g, 2, Objective::minsum());
    CHECK(2 * mm.opt_value == ms.opt_value);
  }
}

TEST_CASE("optimum value is not monotone in k") {
  // The complete graph on four vertices: isolating one vertex costs 4 with
  // three parts, while four singletons cost only 3.
  auto k4 = complete_graph(4);
  auto k3cut = brute_opt(k4, 3, Objective::minmax());
  auto k4cut = brute_opt(k4, 4, Objective::minmax());
  CHECK(k3cut.opt_value == 4);
  CHECK(k4cut.opt_value == 3);
  CHECK(k4cut.opt_value < k3cut.opt_value);

  // Scan the small corpus and report (but tolerate) other violations.
  int violations = 0;
  for (const auto& g : enumerate_graphs(6, true)) {
    Rational prev = -1;
    for (int k = 2; k <= g.n(); ++k) {
      auto r = brute_opt(g, k, Objective::minmax());
      if (prev >= 0 && r.opt_value < prev) ++violations;
      prev = r.opt_value;
    }
  }
  MESSAGE("monotonicity violations on the 6-vertex corpus: ", violations);
  CHECK(violations > 0);  // K4 alone already violates it
}

TEST_CASE("weighted oracle uses exact arithmetic") {
  WeightedMultigraph g(3, {{0, 1, Rational(1, 3), 1},
                           {1, 2, Rational(1, 3), 1},
                           {0, 2, Rational(2, 3), 1}});
  auto r = brute_opt(g, 2, Objective::minmax());
  CHECK(r.opt_value == Rational(2, 3));
}
