#include "kcut/dp.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace kcut {

namespace {

Mask mask_of(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= 1ULL << v;
  return m;
}

std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  while (m) {
    int v = __builtin_ctzll(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

}  // namespace

DPSolver::DPSolver(const WeightedMultigraph& g, int k, long long lambda,
                   SpanningTree tree, TreeDecomposition td, DPOptions opts)
    : g_(g),
      k_(k),
      lambda_(lambda),
      tree_(std::move(tree)),
      td_(std::move(td)),
      opts_(opts) {
  if (g.n() > 62) throw InputError("solver handles at most 62 vertices");
  if (!g.is_unit()) throw InputError("solver needs unit edge weights");
  if (k < 2 || k > 8) throw InputError("solver handles 2 <= k <= 8");
  if (lambda < 0 || lambda > 1000000000) throw InputError("lambda out of range");
  if (tree_.n != g.n()) throw InputError("guide tree size mismatch");
  auto report = verify_decomposition(g, td_);
  if (!report.valid)
    throw InputError("invalid tree decomposition: " + report.first_violation);
  if (!report.compact)
    throw InputError("decomposition not compact: " + report.first_violation);

  for (const auto& e : g.edges()) edges_.push_back({e.u, e.v, e.mult});
  tree_edges_ = tree_.edges;

  {
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 0);
    do {
      perms_.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
  }

  nodes_.resize(td_.size());
  for (int t = 0; t < td_.size(); ++t) {
    auto& node = nodes_[t];
    node.bag = td_.nodes[t].bag;
    node.bag_mask = mask_of(node.bag);
    node.adhesion = td_.adhesion(t);
    node.adhesion_mask = mask_of(node.adhesion);
    node.subtree_mask = mask_of(td_.subtree_vertices(t));
    node.children = td_.nodes[t].children;
    std::sort(node.children.begin(), node.children.end());
    if (t != td_.root && node.adhesion.empty())
      throw InputError("node " + std::to_string(t) + " has an empty adhesion");
    node.family = enumerate_adhesion_partitions(tree_, node.adhesion, k_);
    for (int i = 0; i < static_cast<int>(node.family.size()); ++i) {
      node.family_lookup[node.family[i].parts] = i;
      std::vector<Mask> masks;
      for (const auto& part : node.family[i].parts) masks.push_back(mask_of(part));
      node.family_masks.push_back(std::move(masks));
    }
  }
  f_.resize(td_.size());
  node_done_.assign(td_.size(), 0);
}

const std::vector<Partition>& DPSolver::adhesion_family(int t) const {
  return nodes_[t].family;
}

std::optional<int> DPSolver::family_index(int t, const Partition& p) const {
  Partition c = canonical(p);
  auto it = nodes_[t].family_lookup.find(c.parts);
  if (it == nodes_[t].family_lookup.end()) return std::nullopt;
  return it->second;
}

const std::vector<NiceDecomposition>& DPSolver::nice_family(int t) {
  auto& node = nodes_[t];
  if (!node.nice_ready) {
    node.nice =
        generate_nice_decompositions(g_, tree_, td_, t, k_, lambda_, opts_.nice);
    for (const auto& d : node.nice)
      if (!verify_nice(g_, td_, t, d, k_))
        throw std::logic_error("generated bag decomposition fails its contract");
    node.nice_ready = true;
  }
  return node.nice;
}

long long DPSolver::cut_in(Mask world, Mask side) const {
  long long total = 0;
  for (const auto& e : edges_) {
    Mask mu = 1ULL << e.u, mv = 1ULL << e.v;
    if (!(world & mu) || !(world & mv)) continue;
    bool iu = side & mu, iv = side & mv;
    if (iu != iv) total += e.mult;
  }
  return total;
}

int DPSolver::tree_cross(Mask world, const std::vector<Mask>& parts) const {
  int crossings = 0;
  for (auto [u, v] : tree_edges_) {
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

void DPSolver::upsert(Table& table, RowKey key, int dmin,
                      const std::function<std::vector<Mask>()>& witness) {
  if (dmin > budget()) return;
  ++stats_.updates;
  auto it = table.find(key);
  if (it == table.end()) {
    RowVal val;
    val.dmin = dmin;
    if (opts_.keep_witness) val.witness = witness();
    table.emplace(std::move(key), std::move(val));
  } else if (dmin < it->second.dmin) {
    it->second.dmin = dmin;
    if (opts_.keep_witness) it->second.witness = witness();
  }
}

bool DPSolver::pin_ok(const NodeGeo& node, int pa_index,
                      const std::vector<Mask>& parts, Mask world) const {
  if (!subset(node.adhesion_mask, world)) return true;
  const auto& pins = node.family_masks[pa_index];
  for (int i = 0; i < static_cast<int>(pins.size()); ++i)
    if ((parts[i] & node.adhesion_mask) != pins[i]) return false;
  return true;
}

const DPSolver::DGeo& DPSolver::d_geo(int t, int d_index) {
  auto key = std::make_pair(t, d_index);
  auto found = dgeo_.find(key);
  if (found != dgeo_.end()) return found->second;

  const auto& node = nodes_[t];
  const auto& nd = nice_family(t)[d_index];
  DGeo geo;
  geo.core = mask_of(nd.core);
  geo.p = static_cast<int>(nd.parts.size());
  geo.layer_part.resize(geo.p + 1);
  geo.layer_part[0] = geo.core;
  for (int i = 0; i < geo.p; ++i) geo.layer_part[i + 1] = mask_of(nd.parts[i]);
  geo.world.resize(geo.p + 1);
  for (int l = 0; l <= geo.p; ++l) geo.world[l] = geo.core | geo.layer_part[l];
  for (const auto& part : nd.fine.parts) geo.fine.push_back(mask_of(part));
  for (int i = 0; i < static_cast<int>(geo.fine.size()); ++i)
    if (geo.fine[i] == geo.core && geo.core) geo.core_cell = i;
  if (geo.core && geo.core_cell == -1)
    throw std::logic_error("core is not a fine part");

  geo.layer_cells.resize(geo.p + 1);
  for (int l = 0; l <= geo.p; ++l)
    if (geo.core) geo.layer_cells[l].push_back(geo.core_cell);
  for (int i = 0; i < static_cast<int>(geo.fine.size()); ++i) {
    if (i == geo.core_cell) continue;
    int home = -1;
    for (int l = 1; l <= geo.p; ++l)
      if (subset(geo.fine[i], geo.layer_part[l])) home = l;
    if (home == -1) throw std::logic_error("fine part not inside a coarse part");
    geo.layer_cells[home].push_back(i);
  }

  geo.layer_children.resize(geo.p + 1);
  for (int c : node.children) {
    Mask a = nodes_[c].adhesion_mask;
    int home = -1;
    for (int l = 0; l <= geo.p; ++l)
      if (subset(a, geo.world[l]) && (a & geo.layer_part[l])) {
        home = l;
        break;
      }
    if (home == -1)
      throw std::logic_error("child adhesion not confined to one coarse part");
    geo.layer_children[home].push_back(c);
  }

  geo.slab_mask.resize(geo.p + 1);
  geo.prefix_mask.resize(geo.p + 1);
  Mask prefix = 0;
  for (int l = 0; l <= geo.p; ++l) {
    geo.slab_mask[l] = geo.world[l];
    for (int c : geo.layer_children[l]) geo.slab_mask[l] |= nodes_[c].subtree_mask;
    prefix |= geo.slab_mask[l];
    geo.prefix_mask[l] = prefix;
  }
  if (geo.prefix_mask[geo.p] != node.subtree_mask)
    throw std::logic_error("decomposition layers do not cover the subtree");

  return dgeo_.emplace(key, std::move(geo)).first->second;
}

DPSolver::LayerGeometry DPSolver::layer_geometry(int t, int d_index) {
  const auto& geo = d_geo(t, d_index);
  LayerGeometry out;
  out.core = geo.core;
  out.p = geo.p;
  out.world = geo.world;
  out.slab = geo.slab_mask;
  out.prefix = geo.prefix_mask;
  out.fine = geo.fine;
  out.layer_children = geo.layer_children;
  return out;
}

namespace {

/// Odometer over assignments of `cells` items into k bins; calls fn per
/// assignment. Handles the empty-cell case with a single call.
void for_each_binning(int cells, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> bin(cells, 0);
  while (true) {
    fn(bin);
    int pos = cells - 1;
    while (pos >= 0 && bin[pos] == k - 1) bin[pos--] = 0;
    if (pos < 0) break;
    ++bin[pos];
  }
}

}  // namespace

std::vector<std::vector<Mask>> DPSolver::enumerate_anchors(int t, int d_index,
                                                           int pa_index, int ell) {
  const auto& node = nodes_[t];
  const auto& geo = d_geo(t, d_index);
  const auto& cells = geo.layer_cells[ell];
  int c = static_cast<int>(cells.size());
  double expected = std::pow(static_cast<double>(k_), c);
  if (expected > static_cast<double>(opts_.max_enumeration))
    throw InputError("anchor enumeration too large");

  std::vector<std::vector<Mask>> anchors;
  for_each_binning(c, k_, [&](const std::vector<int>& bin) {
    std::vector<Mask> parts(k_, 0);
    for (int i = 0; i < c; ++i) parts[bin[i]] |= geo.fine[cells[i]];
    if (tree_cross(geo.world[ell], parts) > budget()) return;
    if (!pin_ok(node, pa_index, parts, geo.world[ell])) return;
    anchors.push_back(std::move(parts));
  });
  // Distinct anchors only: different binnings can induce the same tuple
  // (empty bins are interchangeable in the enumeration).
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  return anchors;
}

std::vector<Table> DPSolver::slab_tables_leaf(int t, int d_index, int pa_index) {
  const auto& node = nodes_[t];
  const auto& geo = d_geo(t, d_index);
  std::vector<Table> tables(geo.p + 1);
  for (int ell = 0; ell <= geo.p; ++ell) {
    const auto& cells = geo.layer_cells[ell];
    int c = static_cast<int>(cells.size());
    double expected = std::pow(static_cast<double>(k_), c);
    if (expected > static_cast<double>(opts_.max_enumeration))
      throw InputError("coarsening enumeration too large");
    Mask world = geo.world[ell];

    // Pairwise edge and tree-edge counts between the fine cells.
    std::vector<std::vector<long long>> cnt(c, std::vector<long long>(c, 0));
    std::vector<std::vector<int>> tcnt(c, std::vector<int>(c, 0));
    auto cell_of = [&](int v) {
      Mask mv = 1ULL << v;
      for (int i = 0; i < c; ++i)
        if (geo.fine[cells[i]] & mv) return i;
      return -1;
    };
    for (const auto& e : edges_) {
      Mask mu = 1ULL << e.u, mv = 1ULL << e.v;
      if (!(world & mu) || !(world & mv)) continue;
      int a = cell_of(e.u), b = cell_of(e.v);
      if (a != b) {
        cnt[a][b] += e.mult;
        cnt[b][a] += e.mult;
      }
    }
    for (auto [u, v] : tree_edges_) {
      Mask mu = 1ULL << u, mv = 1ULL << v;
      if (!(world & mu) || !(world & mv)) continue;
      int a = cell_of(u), b = cell_of(v);
      if (a != b) {
        ++tcnt[a][b];
        ++tcnt[b][a];
      }
    }

    int core_pos = geo.core ? 0 : -1;  // core cell is listed first
    for_each_binning(c, k_, [&](const std::vector<int>& bin) {
      std::vector<int> y(k_, 0);
      int d = 0;
      for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
          if (bin[i] == bin[j]) continue;
          y[bin[i]] += static_cast<int>(cnt[i][j]);
          y[bin[j]] += static_cast<int>(cnt[i][j]);
          d += tcnt[i][j];
        }
      if (d > budget()) return;
      for (int v : y)
        if (v > lambda_) return;
      std::vector<Mask> parts(k_, 0);
      for (int i = 0; i < c; ++i) parts[bin[i]] |= geo.fine[cells[i]];
      if (!pin_ok(node, pa_index, parts, world)) return;
      auto witness = [&]() { return parts; };
      if (core_pos != -1) {
        upsert(tables[ell], {y, bin[core_pos]}, d, witness);
      } else {
        for (int q = 0; q < k_; ++q) upsert(tables[ell], {y, q}, d, witness);
      }
    });
  }
  return tables;
}

std::vector<Table> DPSolver::absorb_tables(int t, int d_index, int pa_index, int ell,
                                           const std::vector<Mask>& anchor) {
  const auto& geo = d_geo(t, d_index);
  const auto& children = geo.layer_children[ell];
  Mask world = geo.world[ell];
  std::vector<Table> tables(children.size() + 1);

  {  // Base: the anchor itself on core+part[ell].
    std::vector<int> z(k_);
    bool ok = true;
    for (int i = 0; i < k_; ++i) {
      long long c = cut_in(world, anchor[i]);
      if (c > lambda_) ok = false;
      z[i] = static_cast<int>(c);
    }
    int d0 = tree_cross(world, anchor);
    if (ok && d0 <= budget()) {
      auto witness = [&]() { return anchor; };
      if (geo.core) {
        for (int q = 0; q < k_; ++q)
          if (subset(geo.core, anchor[q])) upsert(tables[0], {z, q}, d0, witness);
      } else {
        for (int q = 0; q < k_; ++q) upsert(tables[0], {z, q}, d0, witness);
      }
    }
  }

  Mask support = 0;
  for (int i = 0; i < k_; ++i)
    if (anchor[i]) support |= 1ULL << i;
  auto sigma1s = perms_fixing_set(support);

  for (int a = 1; a <= static_cast<int>(children.size()); ++a) {
    int child = children[a - 1];
    const auto& cnode = nodes_[child];
    Mask amask = cnode.adhesion_mask;

    // Restriction of the anchor to the child's adhesion, canonical order.
    std::vector<std::pair<int, int>> pieces;  // (min vertex, anchor index)
    for (int i = 0; i < k_; ++i) {
      Mask inter = anchor[i] & amask;
      if (inter) pieces.push_back({__builtin_ctzll(inter), i});
    }
    std::sort(pieces.begin(), pieces.end());
    int ka = static_cast<int>(pieces.size());
    std::vector<int> gamma(ka);
    Partition restriction;
    restriction.ground = cnode.adhesion;
    std::vector<Mask> rparts;
    for (int j = 0; j < ka; ++j) {
      gamma[j] = pieces[j].second;
      Mask pm = anchor[gamma[j]] & amask;
      rparts.push_back(pm);
      restriction.parts.push_back(mask_to_list(pm));
    }
    auto idx = family_index(child, restriction);
    if (!idx) continue;  // the restriction extends no feasible full partition
    const Table& child_table = f_[child][*idx];

    int d_overlap = tree_cross(amask, rparts);
    std::vector<int> adhesion_cut(ka);
    for (int j = 0; j < ka; ++j)
      adhesion_cut[j] = static_cast<int>(cut_in(amask, rparts[j]));

    // Pinned positions of the child-side permutation map piece j to
    // gamma[j]; the rest permutes the unused part indices.
    std::vector<int> free_targets;
    {
      std::vector<char> used(k_, 0);
      for (int j = 0; j < ka; ++j) used[gamma[j]] = 1;
      for (int i = 0; i < k_; ++i)
        if (!used[i]) free_targets.push_back(i);
    }
    std::vector<std::vector<int>> sigma2s;
    {
      std::vector<int> targets = free_targets;
      do {
        std::vector<int> sigma(k_);
        for (int j = 0; j < ka; ++j) sigma[j] = gamma[j];
        for (std::size_t j = 0; j < targets.size(); ++j) sigma[ka + j] = targets[j];
        sigma2s.push_back(std::move(sigma));
      } while (std::next_permutation(targets.begin(), targets.end()));
    }

    for (const auto& [key1, val1] : tables[a - 1]) {
      for (const auto& [key2, val2] : child_table) {
        int d3 = std::max(val1.dmin + val2.dmin - d_overlap, 0);
        if (d3 > budget()) continue;
        for (const auto& s1 : sigma1s) {
          for (const auto& s2 : sigma2s) {
            std::vector<int> w(k_, 0);
            for (int i = 0; i < k_; ++i) w[s1[i]] = key1.vec[i];
            bool ok = true;
            for (int j = 0; j < k_ && ok; ++j) {
              int add = key2.vec[j] - (j < ka ? adhesion_cut[j] : 0);
              w[s2[j]] += add;
            }
            for (int i = 0; i < k_ && ok; ++i)
              if (w[i] < 0 || w[i] > lambda_) ok = false;
            if (!ok) continue;
            int q = s1[key1.tag];
            upsert(tables[a], {w, q}, d3, [&]() {
              std::vector<Mask> wit(k_, 0);
              for (int i = 0; i < k_; ++i) wit[s1[i]] |= val1.witness[i];
              for (int j = 0; j < k_; ++j) wit[s2[j]] |= val2.witness[j];
              return wit;
            });
          }
        }
      }
    }
  }
  return tables;
}

std::vector<Table> DPSolver::slab_tables_nonleaf(int t, int d_index, int pa_index) {
  const auto& geo = d_geo(t, d_index);
  std::vector<Table> tables(geo.p + 1);
  for (int ell = 0; ell <= geo.p; ++ell) {
    auto anchors = enumerate_anchors(t, d_index, pa_index, ell);
    for (const auto& anchor : anchors) {
      auto absorbed = absorb_tables(t, d_index, pa_index, ell, anchor);
      for (const auto& [key, val] : absorbed.back())
        upsert(tables[ell], key, val.dmin, [&]() { return val.witness; });
    }
  }
  return tables;
}

std::vector<int> DPSolver::perm_ids_fixing_prefix(int kp) const {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(perms_.size()); ++i) {
    bool ok = true;
    for (int j = 0; j < kp && ok; ++j) ok = perms_[i][j] == j;
    if (ok) ids.push_back(i);
  }
  return ids;
}

std::vector<std::vector<int>> DPSolver::perms_fixing_set(Mask fixed) const {
  std::vector<int> free_pos;
  for (int i = 0; i < k_; ++i)
    if (!(fixed >> i & 1)) free_pos.push_back(i);
  std::vector<std::vector<int>> out;
  std::vector<int> targets = free_pos;
  do {
    std::vector<int> sigma(k_);
    for (int i = 0; i < k_; ++i) sigma[i] = i;
    for (std::size_t j = 0; j < free_pos.size(); ++j) sigma[free_pos[j]] = targets[j];
    out.push_back(std::move(sigma));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return out;
}

std::vector<Table> DPSolver::prefix_tables(int t, int d_index, int pa_index,
                                           const std::vector<Table>& slab) {
  const auto& node = nodes_[t];
  const auto& geo = d_geo(t, d_index);
  int kp = static_cast<int>(node.family[pa_index].parts.size());
  std::vector<Table> tables(geo.p + 1);
  tables[0] = slab[0];

  Mask bag_prefix = geo.core;  // core + parts 1..ell-1 as ell advances
  for (int ell = 1; ell <= geo.p; ++ell) {
    bool pin_right = subset(node.adhesion_mask, geo.world[ell]);
    bool pin_left = subset(node.adhesion_mask, bag_prefix);
    bag_prefix |= geo.layer_part[ell];

    auto ids1 = pin_left ? perm_ids_fixing_prefix(kp) : perm_ids_fixing_prefix(0);
    auto ids2 = pin_right ? perm_ids_fixing_prefix(kp) : perm_ids_fixing_prefix(0);
    // Bucket the right-side permutations by their value at each position,
    // so the coupling constraint is a direct lookup.
    std::vector<std::vector<std::vector<int>>> by_pos_val(
        k_, std::vector<std::vector<int>>(k_));
    for (int id : ids2)
      for (int pos = 0; pos < k_; ++pos) by_pos_val[pos][perms_[id][pos]].push_back(id);

    for (const auto& [key1, val1] : tables[ell - 1]) {
      for (const auto& [key2, val2] : slab[ell]) {
        int d3 = val1.dmin + val2.dmin;
        if (d3 > budget()) continue;
        for (int id1 : ids1) {
          const auto& s1 = perms_[id1];
          int target = s1[key1.tag];
          for (int id2 : by_pos_val[key2.tag][target]) {
            const auto& s2 = perms_[id2];
            std::vector<int> w(k_, 0);
            for (int i = 0; i < k_; ++i) w[s1[i]] = key1.vec[i];
            bool ok = true;
            for (int j = 0; j < k_; ++j) {
              w[s2[j]] += key2.vec[j];
              if (w[s2[j]] > lambda_) ok = false;
            }
            if (!ok) continue;
            upsert(tables[ell], {w, target}, d3, [&]() {
              std::vector<Mask> wit(k_, 0);
              for (int i = 0; i < k_; ++i) wit[s1[i]] |= val1.witness[i];
              for (int j = 0; j < k_; ++j) wit[s2[j]] |= val2.witness[j];
              return wit;
            });
          }
        }
      }
    }
  }
  return tables;
}

Table DPSolver::decomposition_table(int t, int d_index, int pa_index) {
  bool leaf = nodes_[t].children.empty();
  auto slab = leaf ? slab_tables_leaf(t, d_index, pa_index)
                   : slab_tables_nonleaf(t, d_index, pa_index);
  auto prefix = prefix_tables(t, d_index, pa_index, slab);
  Table out;
  for (const auto& [key, val] : prefix.back())
    upsert(out, {key.vec, 0}, val.dmin, [&]() { return val.witness; });
  return out;
}

const std::vector<Table>& DPSolver::compute_node_table(int t) {
  if (node_done_[t]) return f_[t];
  for (int c : nodes_[t].children) compute_node_table(c);
  const auto& family = nodes_[t].family;
  const auto& nice = nice_family(t);
  f_[t].assign(family.size(), Table{});
  for (int d_index = 0; d_index < static_cast<int>(nice.size()); ++d_index) {
    for (int pa = 0; pa < static_cast<int>(family.size()); ++pa) {
      Table r = decomposition_table(t, d_index, pa);
      for (auto& [key, val] : r)
        upsert(f_[t][pa], key, val.dmin, [&]() { return val.witness; });
    }
  }
  for (const auto& table : f_[t]) stats_.rows += table.size();
  node_done_[t] = 1;
  return f_[t];
}

DPResult DPSolver::extract(const Objective& obj) {
  DPResult result;
  result.stats = stats_;
  const auto& node = nodes_[td_.root];
  auto it = node.family_lookup.find({});
  if (it == node.family_lookup.end())
    throw std::logic_error("root family lacks the empty partition");
  const Table& table = f_[td_.root][it->second];

  struct Candidate {
    Rational score;
    std::vector<int> vec;
    const RowVal* val;
  };
  std::vector<Candidate> candidates;
  for (const auto& [key, val] : table) {
    bool full = true;
    for (int x : key.vec)
      if (x < 1) full = false;
    if (!full) continue;
    Rational score = 0;
    switch (obj.kind) {
      case Objective::Kind::minmax:
        score = *std::max_element(key.vec.begin(), key.vec.end());
        break;
      case Objective::Kind::minsum:
        for (int x : key.vec) score += x;
        break;
      case Objective::Kind::lp: {
        if (!rat_is_integer(obj.p))
          throw InputError("exact lp extraction needs an integral exponent");
        long long p = obj.p.convert_to<long long>();
        for (int x : key.vec) {
          Rational pw = 1;
          for (long long i = 0; i < p; ++i) pw *= x;
          score += pw;
        }
        break;
      }
    }
    candidates.push_back({score, key.vec, &val});
  }
  if (candidates.empty()) return result;
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.score != b.score) return a.score < b.score;
              return a.vec < b.vec;
            });
  const Candidate& best = candidates.front();
  result.feasible = true;
  result.opt_score = best.score;
  for (int x : best.vec) result.opt_cuts.push_back(x);
  switch (obj.kind) {
    case Objective::Kind::minmax:
      result.value = *std::max_element(best.vec.begin(), best.vec.end());
      result.opt_numeric = static_cast<double>(result.value);
      break;
    case Objective::Kind::minsum:
      result.value = rat_num(best.score).convert_to<long long>();
      result.opt_numeric = rat_to_double(best.score);
      break;
    case Objective::Kind::lp:
      result.value = -1;
      result.opt_numeric = std::pow(rat_to_double(best.score),
                                    1.0 / rat_to_double(obj.p));
      break;
  }
  if (opts_.keep_witness) {
    result.ksub.ground.resize(g_.n());
    std::iota(result.ksub.ground.begin(), result.ksub.ground.end(), 0);
    for (Mask m : best.val->witness) result.ksub.parts.push_back(mask_to_list(m));
    result.partition.ground = result.ksub.ground;
    for (const auto& part : result.ksub.parts)
      if (!part.empty()) result.partition.parts.push_back(part);
    result.partition = canonical(std::move(result.partition));
  }
  result.stats = stats_;
  return result;
}

DPResult DPSolver::run(const Objective& obj) {
  compute_node_table(td_.root);
  return extract(obj);
}

void DPSolver::dump_tables(std::ostream& out) const {
  for (int t = 0; t < td_.size(); ++t) {
    if (!node_done_[t]) continue;
    for (std::size_t pa = 0; pa < f_[t].size(); ++pa) {
      for (const auto& [key, val] : f_[t][pa]) {
        out << "{\"node\":" << t << ",\"boundary\":" << pa << ",\"cuts\":[";
        for (std::size_t i = 0; i < key.vec.size(); ++i)
          out << (i ? "," : "") << key.vec[i];
        out << "],\"dmin\":" << val.dmin << ",\"witness\":[";
        for (std::size_t i = 0; i < val.witness.size(); ++i) {
          out << (i ? "," : "") << "[";
          auto vs = mask_to_list(val.witness[i]);
          for (std::size_t j = 0; j < vs.size(); ++j) out << (j ? "," : "") << vs[j];
          out << "]";
        }
        out << "]}\n";
      }
    }
  }
}

DPResult solve_dp(const WeightedMultigraph& g, int k, long long lambda,
                  const Objective& obj, const DPOptions& opts,
                  const SpanningTree* tree, const TreeDecomposition* td) {
  if (k < 2) throw InputError("k must be at least 2");
  if (!g.is_connected())
    throw InputError("solver needs a connected graph; split components first");
  DPResult infeasible;
  if (k > g.n() || lambda < 1) return infeasible;

  SpanningTree guide = tree ? *tree : thorup_tree(g, k);
  TreeDecomposition dec;
  if (td) {
    dec = *td;
  } else {
    BigInt lk1 = BigInt(lambda) * k + 1;
    BigInt threshold = lk1 * lk1 * lk1 * lk1 * lk1;
    if (BigInt(g.n()) > threshold)
      throw InputError("graph too large for the single-bag decomposition; "
                       "supply a decomposition file");
    dec = trivial_decomposition(g);
  }
  DPSolver solver(g, k, lambda, std::move(guide), std::move(dec), opts);
  return solver.run(obj);
}

}  // namespace kcut
