#pragma once

#include <vector>

#include "kcut/graph.hpp"
#include "kcut/rational.hpp"

namespace kcut {

/// Objective for k-partitioning: minimize the largest part boundary
/// (minmax), the sum of part boundaries (minsum), or the l_p norm of the
/// boundary vector, which interpolates between the two.
struct Objective {
  enum class Kind { minmax, minsum, lp };
  Kind kind = Kind::minmax;
  Rational p = 1;  // only meaningful for Kind::lp; must be >= 1

  static Objective minmax() { return {Kind::minmax, 1}; }
  static Objective minsum() { return {Kind::minsum, 1}; }
  static Objective lp(const Rational& p);

  bool integral_p() const { return kind != Kind::lp || rat_is_integer(p); }
};

/// Ordered tuple of nonempty disjoint vertex sets covering `ground`.
struct Partition {
  std::vector<int> ground;              // sorted
  std::vector<std::vector<int>> parts;  // each sorted, nonempty

  std::size_t size() const { return parts.size(); }
  bool operator==(const Partition& o) const = default;
};

/// Ordered tuple of exactly k disjoint (possibly empty) vertex sets
/// covering `ground`. Order is significant.
struct KSubpartition {
  std::vector<int> ground;
  std::vector<std::vector<int>> parts;

  int k() const { return static_cast<int>(parts.size()); }
  bool operator==(const KSubpartition& o) const = default;
};

/// Sorts the parts by minimum contained element.
Partition canonical(Partition p);

/// Validation helpers; throw InputError describing the first violation.
void validate_partition(const Partition& p);
void validate_ksubpartition(const KSubpartition& p);

/// Per-vertex part index (or -1 outside the ground set).
std::vector<int> part_labels(const std::vector<std::vector<int>>& parts, int n);

/// Restriction to x: nonempty intersections part-and-x, canonical order.
Partition restrict_to(const std::vector<std::vector<int>>& parts,
                      const std::vector<int>& x);
Partition restrict_to(const Partition& p, const std::vector<int>& x);
Partition restrict_to(const KSubpartition& p, const std::vector<int>& x);

/// True iff every part of p is a union of parts of q. Grounds must match.
bool refines(const Partition& q, const Partition& p);

/// Boundary weight of each part of `parts` in g.
std::vector<Rational> per_part_cuts(const WeightedMultigraph& g,
                                    const std::vector<std::vector<int>>& parts);

/// Exact comparable score of a boundary vector: the max for minmax, the sum
/// for minsum, and sum of p-th powers for lp (requires integral p).
Rational cost_power(const std::vector<Rational>& cuts, const Objective& obj);

/// Objective value as a double (lp takes the 1/p root of the power sum).
double cost_numeric(const std::vector<Rational>& cuts, const Objective& obj);

double partition_cost(const WeightedMultigraph& g, const KSubpartition& p,
                      const Objective& obj);
double partition_cost(const WeightedMultigraph& g, const Partition& p,
                      const Objective& obj);

/// Exact objective for minmax/minsum (throws for lp).
Rational partition_cost_exact(const WeightedMultigraph& g,
                              const std::vector<std::vector<int>>& parts,
                              const Objective& obj);

/// Edges of g whose endpoints lie in two distinct parts; edges with an
/// endpoint outside the ground set are excluded.
std::vector<Edge> crossing_edges(const WeightedMultigraph& g,
                                 const std::vector<std::vector<int>>& parts);
std::vector<Edge> crossing_edges(const WeightedMultigraph& g, const KSubpartition& p);

}  // namespace kcut
