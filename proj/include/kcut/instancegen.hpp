#pragma once

#include <cstdint>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Parameters of the clique-detection instance built around a simple base
/// graph: every base vertex becomes an N-clique, one extra N-clique absorbs
/// degree-balancing edges, and a minmax (h+1)-cut of value at most
/// `threshold` exists exactly when the base graph has an h-clique.
struct GadgetSpec {
  int base_n = 0;
  int base_m = 0;
  int h = 0;
  long long M = 0;          // max{(n+1)^2, 3m}
  long long N = 0;          // M*n + 2
  long long threshold = 0;  // M*h - h*(h-1)
};

GadgetSpec gadget_spec(const WeightedMultigraph& base, int h);

/// The full unit gadget. Vertex u_{i,j} has id i*N+j; the balancing clique
/// occupies ids n*N..(n+1)*N-1. Large: (n+1)*N vertices.
std::pair<WeightedMultigraph, GadgetSpec> clique_gadget(const WeightedMultigraph& base,
                                                        int h);

/// The gadget with each N-clique contracted to a point: base edges keep
/// weight 1, vertex i connects to the hub (id n) with weight M - deg(i).
std::pair<WeightedMultigraph, GadgetSpec> quotient_graph(const WeightedMultigraph& base,
                                                         int h);

struct RandomCorpusSpec {
  int n_min = 6;
  int n_max = 8;
  double density = 0.5;
  int weight_min = 1;
  int weight_max = 1;
  int count = 10;
  std::uint64_t seed = 1;
};

/// Reproducible connected Erdos-Renyi-style graphs (resampled until
/// connected), integer weights drawn uniformly.
std::vector<WeightedMultigraph> random_corpus(const RandomCorpusSpec& spec);

/// All simple graphs on n vertices up to isomorphism (unit weights),
/// optionally connected only. Practical for n <= 7.
std::vector<WeightedMultigraph> enumerate_graphs(int n, bool connected_only);

}  // namespace kcut
