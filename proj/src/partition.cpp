#include "kcut/partition.hpp"

#include <algorithm>
#include <cmath>

namespace kcut {

Objective Objective::lp(const Rational& p) {
  if (p < 1) throw InputError("lp objective needs p >= 1");
  return {Kind::lp, p};
}

Partition canonical(Partition p) {
  for (auto& part : p.parts) std::sort(part.begin(), part.end());
  std::sort(p.parts.begin(), p.parts.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  std::sort(p.ground.begin(), p.ground.end());
  return p;
}

namespace {

void check_cover(const std::vector<int>& ground,
                 const std::vector<std::vector<int>>& parts, bool allow_empty) {
  std::vector<int> all;
  for (const auto& part : parts) {
    if (part.empty() && !allow_empty) throw InputError("empty part");
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InputError("parts are not disjoint");
  std::vector<int> g = ground;
  std::sort(g.begin(), g.end());
  if (all != g) throw InputError("parts do not cover the ground set");
}

}  // namespace

void validate_partition(const Partition& p) { check_cover(p.ground, p.parts, false); }

void validate_ksubpartition(const KSubpartition& p) {
  check_cover(p.ground, p.parts, true);
}

std::vector<int> part_labels(const std::vector<std::vector<int>>& parts, int n) {
  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) {
      if (v < 0 || v >= n) throw InputError("vertex id out of range in partition");
      label[v] = static_cast<int>(i);
    }
  return label;
}

Partition restrict_to(const std::vector<std::vector<int>>& parts,
                      const std::vector<int>& x) {
  std::vector<char> keep;
  int maxv = -1;
  for (int v : x) maxv = std::max(maxv, v);
  for (const auto& part : parts)
    for (int v : part) maxv = std::max(maxv, v);
  keep.assign(maxv + 1, 0);
  for (int v : x) keep[v] = 1;
  Partition out;
  out.ground = x;
  std::sort(out.ground.begin(), out.ground.end());
  for (const auto& part : parts) {
    std::vector<int> inter;
    for (int v : part)
      if (keep[v]) inter.push_back(v);
    if (!inter.empty()) out.parts.push_back(std::move(inter));
  }
  return canonical(std::move(out));
}

Partition restrict_to(const Partition& p, const std::vector<int>& x) {
  return restrict_to(p.parts, x);
}

Partition restrict_to(const KSubpartition& p, const std::vector<int>& x) {
  return restrict_to(p.parts, x);
}

bool refines(const Partition& q, const Partition& p) {
  std::vector<int> gq = q.ground, gp = p.ground;
  std::sort(gq.begin(), gq.end());
  std::sort(gp.begin(), gp.end());
  if (gq != gp) throw InputError("refines: ground sets differ");
  if (gq.empty()) return true;
  int n = gq.back() + 1;
  auto pl = part_labels(p.parts, n);
  // Each part of q must lie inside a single part of p; since both cover the
  // same ground this makes every p-part a union of q-parts.
  for (const auto& part : q.parts) {
    for (int v : part)
      if (pl[v] != pl[part.front()]) return false;
  }
  return true;
}

std::vector<Rational> per_part_cuts(const WeightedMultigraph& g,
                                    const std::vector<std::vector<int>>& parts) {
  auto label = part_labels(parts, g.n());
  std::vector<Rational> cuts(parts.size(), Rational(0));
  for (const auto& e : g.edges()) {
    int lu = label[e.u], lv = label[e.v];
    if (lu == lv) continue;
    Rational w = e.w * e.mult;
    if (lu != -1) cuts[lu] += w;
    if (lv != -1) cuts[lv] += w;
  }
  return cuts;
}

Rational cost_power(const std::vector<Rational>& cuts, const Objective& obj) {
  switch (obj.kind) {
    case Objective::Kind::minmax: {
      Rational best = 0;
      for (const auto& c : cuts) best = std::max(best, c);
      return best;
    }
    case Objective::Kind::minsum: {
      Rational sum = 0;
      for (const auto& c : cuts) sum += c;
      return sum;
    }
    case Objective::Kind::lp: {
      if (!rat_is_integer(obj.p))
        throw InputError("exact lp scoring needs an integral exponent");
      long long p = obj.p.convert_to<long long>();
      Rational sum = 0;
      for (const auto& c : cuts) {
        Rational pw = 1;
        for (long long i = 0; i < p; ++i) pw *= c;
        sum += pw;
      }
      return sum;
    }
  }
  return 0;
}

double cost_numeric(const std::vector<Rational>& cuts, const Objective& obj) {
  switch (obj.kind) {
    case Objective::Kind::minmax: {
      double best = 0;
      for (const auto& c : cuts) best = std::max(best, rat_to_double(c));
      return best;
    }
    case Objective::Kind::minsum: {
      double sum = 0;
      for (const auto& c : cuts) sum += rat_to_double(c);
      return sum;
    }
    case Objective::Kind::lp: {
      double p = rat_to_double(obj.p);
      double sum = 0;
      for (const auto& c : cuts) sum += std::pow(rat_to_double(c), p);
      return std::pow(sum, 1.0 / p);
    }
  }
  return 0;
}

double partition_cost(const WeightedMultigraph& g, const KSubpartition& p,
                      const Objective& obj) {
  return cost_numeric(per_part_cuts(g, p.parts), obj);
}

double partition_cost(const WeightedMultigraph& g, const Partition& p,
                      const Objective& obj) {
  return cost_numeric(per_part_cuts(g, p.parts), obj);
}

Rational partition_cost_exact(const WeightedMultigraph& g,
                              const std::vector<std::vector<int>>& parts,
                              const Objective& obj) {
  if (obj.kind == Objective::Kind::lp)
    throw InputError("partition_cost_exact supports minmax and minsum only");
  return cost_power(per_part_cuts(g, parts), obj);
}

std::vector<Edge> crossing_edges(const WeightedMultigraph& g,
                                 const std::vector<std::vector<int>>& parts) {
  auto label = part_labels(parts, g.n());
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (label[e.u] != -1 && label[e.v] != -1 && label[e.u] != label[e.v])
      out.push_back(e);
  return out;
}

std::vector<Edge> crossing_edges(const WeightedMultigraph& g, const KSubpartition& p) {
  return crossing_edges(g, p.parts);
}

}  // namespace kcut
