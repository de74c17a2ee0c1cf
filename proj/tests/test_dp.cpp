#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcut/dp.hpp"
#include "kcut/instancegen.hpp"
#include "kcut/oracle.hpp"
#include "test_util.hpp"

using namespace kcut;
using namespace kcut::testutil;

namespace {

long long brute_minmax(const WeightedMultigraph& g, int k) {
  auto r = brute_opt(g, k, Objective::minmax());
  REQUIRE(r.feasible);
  return r.opt_value.convert_to<long long>();
}

long long tree_crossings_in(const std::vector<std::pair<int, int>>& tree_edges,
                            Mask world, const std::vector<Mask>& parts) {
  long long crossings = 0;
  for (auto [u, v] : tree_edges) {
    Mask mu = 1ULL << u, mv = 1ULL << v;
    if (!(world & mu) || !(world & mv)) continue;
    int lu = -1, lv = -1;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
      if (parts[i] & mu) lu = i;
      if (parts[i] & mv) lv = i;
    }
    if (lu != -1 && lv != -1 && lu != lv) ++crossings;
  }
  return crossings;
}

long long cut_within(const WeightedMultigraph& g, Mask world, Mask side) {
  long long total = 0;
  for (const auto& e : g.edges()) {
    Mask mu = 1ULL << e.u, mv = 1ULL << e.v;
    if (!(world & mu) || !(world & mv)) continue;
    if (static_cast<bool>(side & mu) != static_cast<bool>(side & mv))
      total += e.mult;
  }
  return total;
}

Mask list_mask(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= 1ULL << v;
  return m;
}

}  // namespace

TEST_CASE("solver fixtures") {
  auto k2 = complete_graph(2);
  auto r = solve_dp(k2, 2, 1, Objective::minmax());
  REQUIRE(r.feasible);
  CHECK(r.value == 1);
  CHECK(r.partition.parts == std::vector<std::vector<int>>{{0}, {1}});

  auto triangle = complete_graph(3);
  auto r3 = solve_dp(triangle, 3, 2, Objective::minmax());
  REQUIRE(r3.feasible);
  CHECK(r3.value == 2);

  auto k4 = complete_graph(4);
  CHECK_FALSE(solve_dp(k4, 2, 2, Objective::minmax()).feasible);
  CHECK(solve_dp(k4, 2, 3, Objective::minmax()).value == 3);

  CHECK_FALSE(solve_dp(triangle, 4, 5, Objective::minmax()).feasible);
  CHECK_FALSE(solve_dp(triangle, 2, 0, Objective::minmax()).feasible);
  CHECK_THROWS_AS(solve_dp(unit_graph(4, {{0, 1}, {2, 3}}), 2, 3,
                           Objective::minmax()),
                  InputError);
}

TEST_CASE("solver equals the oracle on the small corpus") {
  for (const auto& g : enumerate_graphs(6, true)) {
    for (int k = 2; k <= 4; ++k) {
      if (k > g.n()) continue;
      long long opt = brute_minmax(g, k);
      auto at_opt = solve_dp(g, k, opt, Objective::minmax());
      REQUIRE(at_opt.feasible);
      CHECK(at_opt.value == opt);
      // Witness really achieves the optimum with k nonempty parts.
      CHECK(at_opt.partition.parts.size() == static_cast<std::size_t>(k));
      CHECK(partition_cost_exact(g, at_opt.partition.parts, Objective::minmax()) ==
            opt);
      // Slack budget changes nothing.
      auto slack = solve_dp(g, k, opt + 2, Objective::minmax());
      CHECK(slack.value == opt);
      // One below the optimum is infeasible.
      auto below = solve_dp(g, k, opt - 1, Objective::minmax());
      CHECK_FALSE(below.feasible);
    }
  }
}

TEST_CASE("feasibility is monotone in the budget") {
  auto corpus = random_corpus({6, 7, 0.5, 1, 1, 6, 91});
  for (const auto& g : corpus) {
    long long opt = brute_minmax(g, 3);
    for (long long lambda = 1; lambda <= opt + 1; ++lambda) {
      auto r = solve_dp(g, 3, lambda, Objective::minmax());
      CHECK(r.feasible == (lambda >= opt));
    }
  }
}

TEST_CASE("multiplicities behave like parallel edges") {
  WeightedMultigraph doubled(3, {{0, 1, 1, 2}, {1, 2, 1, 2}, {0, 2, 1, 1}});
  long long opt = brute_minmax(doubled, 2);
  auto r = solve_dp(doubled, 2, opt, Objective::minmax());
  REQUIRE(r.feasible);
  CHECK(r.value == opt);
  CHECK(opt == 3);
}

TEST_CASE("per-part boundary counts in the result match the graph") {
  auto g = cycle_graph(6);
  auto r = solve_dp(g, 3, 2, Objective::minmax());
  REQUIRE(r.feasible);
  auto cuts = per_part_cuts(g, r.ksub.parts);
  REQUIRE(cuts.size() == r.opt_cuts.size());
  std::vector<Rational> reported;
  for (long long c : r.opt_cuts) reported.push_back(c);
  // The stored vector lists the parts in table order; compare as multisets.
  std::sort(cuts.begin(), cuts.end());
  std::sort(reported.begin(), reported.end());
  CHECK(cuts == reported);
}

TEST_CASE("minsum and lp extraction") {
  for (const auto& g : enumerate_graphs(5, true)) {
    for (int k = 2; k <= 3; ++k) {
      auto mm = brute_opt(g, k, Objective::minmax());
      auto ms = brute_opt(g, k, Objective::minsum());
      long long lambda = mm.opt_value.convert_to<long long>();
      auto viasolver = solve_dp(g, k, lambda, Objective::lp(1));
      REQUIRE(viasolver.feasible);
      CHECK(viasolver.opt_score == ms.opt_value);

      auto l2 = brute_opt(g, k, Objective::lp(2));
      auto l2solver = solve_dp(g, k, lambda, Objective::lp(2));
      REQUIRE(l2solver.feasible);
      CHECK(l2solver.opt_score == l2.opt_value);
    }
  }
}

TEST_CASE("two-bag decomposition matches the single-bag answer") {
  auto g = unit_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  TreeDecomposition td;
  td.nodes.resize(2);
  td.nodes[0].bag = {0, 1, 2};
  td.nodes[1].bag = {2, 3, 4};
  td.nodes[0].children = {1};
  td.nodes[1].parent = 0;
  td.root = 0;
  REQUIRE(verify_decomposition(g, td).valid);
  REQUIRE(verify_decomposition(g, td).compact);

  for (int k = 2; k <= 3; ++k) {
    long long opt = brute_minmax(g, k);
    for (long long lambda : {opt, opt + 2}) {
      auto tree = thorup_tree(g, k);
      auto split = solve_dp(g, k, lambda, Objective::minmax(), {}, &tree, &td);
      auto whole = solve_dp(g, k, lambda, Objective::minmax(), {}, &tree);
      REQUIRE(split.feasible);
      CHECK(split.value == whole.value);
      CHECK(split.value == opt);
    }
    CHECK_FALSE(
        solve_dp(g, k, opt - 1, Objective::minmax(), {}, nullptr, &td).feasible);
  }
}

TEST_CASE("three-bag path decomposition") {
  // Chain of three triangles sharing cut vertices.
  auto g = unit_graph(7, {{0, 1}, {1, 2}, {0, 2},   // bag 0
                          {2, 3}, {3, 4}, {2, 4},   // bag 1
                          {4, 5}, {5, 6}, {4, 6}}); // bag 2
  TreeDecomposition td;
  td.nodes.resize(3);
  td.nodes[0].bag = {0, 1, 2};
  td.nodes[1].bag = {2, 3, 4};
  td.nodes[2].bag = {4, 5, 6};
  td.nodes[0].children = {1};
  td.nodes[1].parent = 0;
  td.nodes[1].children = {2};
  td.nodes[2].parent = 1;
  td.root = 0;
  REQUIRE(verify_decomposition(g, td).compact);
  for (int k = 2; k <= 4; ++k) {
    long long opt = brute_minmax(g, k);
    auto r = solve_dp(g, k, opt, Objective::minmax(), {}, nullptr, &td);
    REQUIRE(r.feasible);
    CHECK(r.value == opt);
    CHECK_FALSE(
        solve_dp(g, k, opt - 1, Objective::minmax(), {}, nullptr, &td).feasible);
  }
}

TEST_CASE("node tables carry sound witnesses") {
  auto g = unit_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  TreeDecomposition td;
  td.nodes.resize(2);
  td.nodes[0].bag = {0, 1, 2};
  td.nodes[1].bag = {2, 3, 4};
  td.nodes[0].children = {1};
  td.nodes[1].parent = 0;
  td.root = 0;
  int k = 2;
  long long lambda = 3;
  auto tree = thorup_tree(g, k);
  DPSolver solver(g, k, lambda, tree, td, {});
  solver.compute_node_table(td.root);

  for (int t : {1, 0}) {
    Mask subtree = list_mask(td.subtree_vertices(t));
    auto adhesion = td.adhesion(t);
    const auto& family = solver.adhesion_family(t);
    const auto& tables = solver.compute_node_table(t);
    REQUIRE(tables.size() == family.size());
    int rows = 0;
    for (std::size_t pa = 0; pa < family.size(); ++pa) {
      for (const auto& [key, val] : tables[pa]) {
        ++rows;
        // Witness is a k-subpartition of the subtree vertices.
        Mask seen = 0;
        for (Mask part : val.witness) {
          CHECK((seen & part) == 0);
          seen |= part;
        }
        CHECK(seen == subtree);
        // (i) boundary pinning
        for (std::size_t i = 0; i < family[pa].parts.size(); ++i)
          CHECK((val.witness[i] & list_mask(adhesion)) ==
                list_mask(family[pa].parts[i]));
        // (ii) exact boundary counts in the subtree graph
        for (int i = 0; i < k; ++i)
          CHECK(cut_within(g, subtree, val.witness[i]) == key.vec[i]);
        // (iii) tree crossings within the budget
        CHECK(tree_crossings_in(tree.edges, subtree, val.witness) <= val.dmin);
        CHECK(val.dmin <= 2 * k * k);
      }
    }
    CHECK(rows > 0);
  }
}

TEST_CASE("slab and prefix tables carry sound witnesses") {
  auto g = unit_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  TreeDecomposition td;
  td.nodes.resize(2);
  td.nodes[0].bag = {0, 1, 2};
  td.nodes[1].bag = {2, 3, 4};
  td.nodes[0].children = {1};
  td.nodes[1].parent = 0;
  td.root = 0;
  int k = 2;
  auto tree = thorup_tree(g, k);
  DPSolver solver(g, k, 3, tree, td, {});
  solver.compute_node_table(1);  // child tables first

  int t = 0;
  const auto& nice = solver.nice_family(t);
  const auto& family = solver.adhesion_family(t);
  Mask adhesion_mask = list_mask(td.adhesion(t));
  for (int d = 0; d < static_cast<int>(nice.size()); ++d) {
    auto geo = solver.layer_geometry(t, d);
    for (int pa = 0; pa < static_cast<int>(family.size()); ++pa) {
      auto slab = solver.slab_tables_nonleaf(t, d, pa);
      for (int ell = 0; ell <= geo.p; ++ell) {
        for (const auto& [key, val] : slab[ell]) {
          Mask seen = 0;
          for (Mask part : val.witness) seen |= part;
          CHECK(seen == geo.slab[ell]);
          // Fine parts inside the layer stay whole.
          for (Mask fine : geo.fine) {
            if ((fine & geo.world[ell]) != fine) continue;
            bool inside_one = false;
            for (Mask part : val.witness)
              if ((fine & part) == fine) inside_one = true;
            CHECK(inside_one);
          }
          for (int i = 0; i < k; ++i)
            CHECK(cut_within(g, geo.slab[ell], val.witness[i]) == key.vec[i]);
          CHECK(tree_crossings_in(tree.edges, geo.slab[ell], val.witness) <=
                val.dmin);
          if (geo.core) CHECK((geo.core & val.witness[key.tag]) == geo.core);
          if ((adhesion_mask & ~geo.world[ell]) == 0)
            for (std::size_t i = 0; i < family[pa].parts.size(); ++i)
              CHECK((val.witness[i] & adhesion_mask) ==
                    list_mask(family[pa].parts[i]));
        }
        auto prefix = solver.prefix_tables(t, d, pa, slab);
        for (const auto& [key, val] : prefix[ell]) {
          Mask seen = 0;
          for (Mask part : val.witness) seen |= part;
          CHECK(seen == geo.prefix[ell]);
          for (int i = 0; i < k; ++i)
            CHECK(cut_within(g, geo.prefix[ell], val.witness[i]) == key.vec[i]);
          CHECK(tree_crossings_in(tree.edges, geo.prefix[ell], val.witness) <=
                val.dmin);
        }
      }
    }
  }
}

TEST_CASE("anchor counts stay within their bound") {
  auto g = complete_graph(6);
  auto td = trivial_decomposition(g);
  int k = 3;
  auto tree = thorup_tree(g, k);
  DPSolver solver(g, k, 9, tree, td, {});
  const auto& nice = solver.nice_family(0);
  double bound = std::pow(static_cast<double>(k), 4.0 * k * k + 2);
  for (int d = 0; d < static_cast<int>(nice.size()); ++d) {
    auto geo = solver.layer_geometry(0, d);
    for (int ell = 0; ell <= geo.p; ++ell) {
      auto anchors = solver.enumerate_anchors(0, d, 0, ell);
      CHECK(static_cast<double>(anchors.size()) <= bound);
    }
  }
}

TEST_CASE("value-only mode skips witnesses") {
  auto g = complete_graph(4);
  DPOptions opts;
  opts.keep_witness = false;
  auto r = solve_dp(g, 2, 3, Objective::minmax(), opts);
  REQUIRE(r.feasible);
  CHECK(r.value == 3);
  CHECK(r.partition.parts.empty());
}
