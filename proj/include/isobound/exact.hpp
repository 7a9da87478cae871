#pragma once

#include <vector>

#include "isobound/graph.hpp"

namespace isobound {

struct IndependentSetWitness {
  int size = 0;
  std::vector<Vertex> vertices;
};

constexpr int kExactOrderLimit = 64;

/// Maximum independent set by branch and bound. Branches on the highest
/// residual-degree vertex (lowest index on ties), prunes with the residual
/// vertex count and a greedy clique cover. Throws SizeLimitError for n > 64.
IndependentSetWitness independence_number(const Graph &g);

/// omega(G) = alpha(complement G).
int clique_number(const Graph &g);

bool is_independent_set(const Graph &g, const std::vector<Vertex> &vertices);

/// Maximum matching between the two sides of a proper 2-colouring
/// (side[v] in {0, 1}). Throws InvalidInput if some edge joins equal sides.
std::vector<Edge> maximum_matching_bipartite(const Graph &g, const std::vector<int> &side);

} // namespace isobound
