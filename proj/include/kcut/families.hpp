#pragma once

#include <cstdint>
#include <vector>

#include "kcut/projection.hpp"
#include "kcut/sepfamily.hpp"
#include "kcut/treedec.hpp"

namespace kcut {

/// Partitions of a node's adhesion that extend to a full partition crossing
/// the guide tree at most 2k^2 times and have at most k parts. Enumerated
/// through the projected tree: remove up to 2k^2 projected edges and group
/// the resulting components into k bins.
std::vector<Partition> enumerate_adhesion_partitions(const SpanningTree& tree,
                                                     const std::vector<int>& adhesion,
                                                     int k);

/// Bag decomposition driving one DP pass: a coarse partition of the bag
/// (`parts` plus the optional `core`), refined by `fine`.
///
/// Required properties: `fine` refines the coarse partition; a nonempty core
/// is a part of `fine` (an empty core forces a single coarse part); every
/// coarse part holds at most 4k^2+1 parts of `fine`; non-core coarse parts
/// have no edges between them; each child adhesion (and the node's own)
/// meets at most one non-core coarse part.
struct NiceDecomposition {
  std::vector<std::vector<int>> parts;  // non-core coarse parts, canonical order
  std::vector<int> core;                // may be empty
  Partition fine;                       // partition of the bag

  Partition coarse(const std::vector<int>& bag) const;
};

bool verify_nice(const WeightedMultigraph& g, const TreeDecomposition& td, int t,
                 const NiceDecomposition& d, int k);

/// Some descendant adhesion of t (inclusive) meets both sets.
bool shares_adhesion(const std::vector<int>& p1, const std::vector<int>& p2,
                     const TreeDecomposition& td, int t);
/// Some edge of the subtree graph of t joins the two sets.
bool shares_edge(const std::vector<int>& p1, const std::vector<int>& p2,
                 const WeightedMultigraph& g, const TreeDecomposition& td, int t);

struct NiceDecompOptions {
  std::uint64_t seed = 1;
  SeparatingFamilyOptions family;
  std::size_t max_outputs = 1 << 20;
};

std::vector<NiceDecomposition> generate_nice_decompositions(
    const WeightedMultigraph& g, const SpanningTree& tree,
    const TreeDecomposition& td, int t, int k, long long lambda,
    const NiceDecompOptions& opts = {});

/// The large-bag merge pipeline on explicit inputs: `r_parts` partitions the
/// projected vertices, `selected` indexes the parts kept out of the merge
/// core. Exposed so the pipeline can be exercised directly.
NiceDecomposition nice_from_selection(const WeightedMultigraph& g,
                                      const TreeDecomposition& td, int t,
                                      const std::vector<std::vector<int>>& r_parts,
                                      const std::vector<int>& selected, int k);

}  // namespace kcut
