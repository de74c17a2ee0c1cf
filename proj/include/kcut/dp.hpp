#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "kcut/families.hpp"
#include "kcut/oracle.hpp"
#include "kcut/spanning.hpp"
#include "kcut/treedec.hpp"

namespace kcut {

using Mask = unsigned long long;

/// Sparse Boolean table. A stored row means "true for every budget d >=
/// dmin"; absent rows are false. `vec` is a per-part boundary-count vector,
/// `tag` is the index of the part holding the bag core (layered tables) or
/// unused (node boundary tables).
struct RowKey {
  std::vector<int> vec;
  int tag = 0;
  bool operator==(const RowKey&) const = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& key) const {
    std::size_t h = static_cast<std::size_t>(key.tag) * 1000003u;
    for (int x : key.vec) h = h * 1000003u + static_cast<std::size_t>(x + 1);
    return h;
  }
};

struct RowVal {
  int dmin = 0;
  std::vector<Mask> witness;  // one vertex mask per part; empty when disabled
};

using Table = std::unordered_map<RowKey, RowVal, RowKeyHash>;

struct DPOptions {
  bool keep_witness = true;
  std::uint64_t seed = 1;
  NiceDecompOptions nice;
  std::size_t max_enumeration = 1u << 24;  // guard on coarsening enumerations
  std::ostream* log = nullptr;
};

struct DPStats {
  unsigned long long rows = 0;     // stored table rows over all nodes
  unsigned long long updates = 0;  // combination updates performed
};

struct DPResult {
  bool feasible = false;
  long long value = -1;             // minmax objective value (unit counts)
  Rational opt_score = 0;           // exact score (lp: power sum)
  double opt_numeric = 0;
  std::vector<long long> opt_cuts;  // boundary counts of the witness parts
  Partition partition;
  KSubpartition ksub;
  DPStats stats;
};

/// Bottom-up solver over a rooted tree decomposition, guided by a spanning
/// tree. Works on unit-weight multigraphs with at most 62 vertices. The
/// layered tables are exposed so each stage can be checked in isolation.
class DPSolver {
 public:
  DPSolver(const WeightedMultigraph& g, int k, long long lambda,
           SpanningTree tree, TreeDecomposition td, DPOptions opts = {});

  int k() const { return k_; }
  long long lambda() const { return lambda_; }
  int budget() const { return 2 * k_ * k_; }  // tree-crossing budget
  const TreeDecomposition& decomposition() const { return td_; }
  const SpanningTree& tree() const { return tree_; }

  /// Feasible boundary partitions of the adhesion of t (at most k parts).
  const std::vector<Partition>& adhesion_family(int t) const;
  /// Index of a canonically ordered partition within the family, if present.
  std::optional<int> family_index(int t, const Partition& p) const;

  const std::vector<NiceDecomposition>& nice_family(int t);

  /// Vertex-mask geometry of one nice decomposition, for white-box checks.
  struct LayerGeometry {
    Mask core = 0;
    int p = 0;
    std::vector<Mask> world;   // core + part[ell]
    std::vector<Mask> slab;    // world + subtrees of the layer's children
    std::vector<Mask> prefix;  // union of slabs 0..ell
    std::vector<Mask> fine;
    std::vector<std::vector<int>> layer_children;
  };
  LayerGeometry layer_geometry(int t, int d_index);

  /// Anchor subpartitions of core+part[ell]: coarsenings of the fine
  /// partition within the slab, tree budget respected, adhesion pinned.
  std::vector<std::vector<Mask>> enumerate_anchors(int t, int d_index, int pa_index,
                                                   int ell);

  /// Slab tables indexed by layer 0..p: direct enumeration at leaves.
  std::vector<Table> slab_tables_leaf(int t, int d_index, int pa_index);
  /// Child-absorption tables for one anchor, indexed by absorbed count 0..a.
  std::vector<Table> absorb_tables(int t, int d_index, int pa_index, int ell,
                                   const std::vector<Mask>& anchor);
  /// Slab tables at internal nodes, assembled from the absorption tables.
  std::vector<Table> slab_tables_nonleaf(int t, int d_index, int pa_index);
  /// Running union over layers 0..ell of the slabs.
  std::vector<Table> prefix_tables(int t, int d_index, int pa_index,
                                   const std::vector<Table>& slab);
  /// Boundary table of one nice decomposition (prefix table at ell=p with
  /// the core-part index reduced away).
  Table decomposition_table(int t, int d_index, int pa_index);

  /// f-table of node t from its children's tables; stored for the parent.
  const std::vector<Table>& compute_node_table(int t);

  DPResult extract(const Objective& obj);
  DPResult run(const Objective& obj);

  const DPStats& stats() const { return stats_; }
  void dump_tables(std::ostream& out) const;  // JSON lines of node tables

 private:
  struct NodeGeo {
    std::vector<int> bag;
    Mask bag_mask = 0;
    std::vector<int> adhesion;
    Mask adhesion_mask = 0;
    Mask subtree_mask = 0;
    std::vector<int> children;
    std::vector<Partition> family;
    std::map<std::vector<std::vector<int>>, int> family_lookup;
    std::vector<std::vector<Mask>> family_masks;  // per member, per part
    std::vector<NiceDecomposition> nice;
    bool nice_ready = false;
  };
  struct DGeo {
    Mask core = 0;
    int p = 0;
    std::vector<Mask> layer_part;                // [0]=core, [1..p]
    std::vector<Mask> world;                     // core | layer_part[ell]
    std::vector<Mask> slab_mask;                 // world + absorbed subtrees
    std::vector<Mask> prefix_mask;               // union of slabs 0..ell
    std::vector<std::vector<int>> layer_children;
    std::vector<Mask> fine;                      // fine part masks
    std::vector<std::vector<int>> layer_cells;   // fine indices inside world
    int core_cell = -1;                          // fine index equal to core
  };

  const DGeo& d_geo(int t, int d_index);
  long long cut_in(Mask world, Mask side) const;
  int tree_cross(Mask world, const std::vector<Mask>& parts) const;
  void upsert(Table& table, RowKey key, int dmin,
              const std::function<std::vector<Mask>()>& witness);
  bool pin_ok(const NodeGeo& node, int pa_index, const std::vector<Mask>& parts,
              Mask world) const;

  const WeightedMultigraph& g_;
  int k_;
  long long lambda_;
  SpanningTree tree_;
  TreeDecomposition td_;
  DPOptions opts_;
  std::vector<NodeGeo> nodes_;
  std::map<std::pair<int, int>, DGeo> dgeo_;
  std::vector<std::vector<Table>> f_;  // node -> family index -> table
  std::vector<char> node_done_;
  DPStats stats_;

  struct IntEdge {
    int u, v;
    long long mult;
  };
  std::vector<IntEdge> edges_;
  std::vector<std::pair<int, int>> tree_edges_;

  std::vector<std::vector<int>> perms_;  // all k! permutations
  const std::vector<int>& perm(int id) const { return perms_[id]; }
  std::vector<int> perm_ids_fixing_prefix(int kp) const;
  std::vector<std::vector<int>> perms_fixing_set(Mask fixed) const;
};

/// End-to-end solve on a unit multigraph: guide tree, decomposition
/// (trivial bag unless supplied), bottom-up tables, optimum extraction.
DPResult solve_dp(const WeightedMultigraph& g, int k, long long lambda,
                  const Objective& obj, const DPOptions& opts = {},
                  const SpanningTree* tree = nullptr,
                  const TreeDecomposition* td = nullptr);

}  // namespace kcut
