#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isobound {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 stored as a dense adjacency
/// matrix. Immutable after construction.
class Graph {
public:
  /// Throws InvalidInput on n < 1, out-of-range endpoints or self-loops.
  /// Duplicate edges are merged.
  Graph(int n, const std::vector<Edge> &edges, std::string label = {});

  int order() const { return n_; }
  int size() const { return m_; }
  const std::string &label() const { return label_; }
  Graph relabeled(std::string label) const;

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  int degree(Vertex u) const { return static_cast<int>(nbrs_[u].size()); }
  const std::vector<Vertex> &neighbors(Vertex u) const { return nbrs_[u]; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::string label_;
};

// Constructions. Vertex orderings are fixed so spectra and reports are
// reproducible: integers for cycles/paths/Paley, lexicographic k-subsets for
// Kneser, binary-string order (bit d-2 is the first character) for folded cubes.
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_empty(int n);
Graph make_kneser(int n, int k);
Graph make_paley(int q);
Graph make_folded_cube(int d);

Graph complement(const Graph &g);
Graph line_graph(const Graph &g);
/// Vertex (a, b) is indexed a * h.order() + b.
Graph cartesian_product(const Graph &g, const Graph &h);

std::vector<int> degrees(const Graph &g);
int min_degree(const Graph &g);
int max_degree(const Graph &g);
/// Common degree, or nullopt when degrees differ.
std::optional<int> is_regular(const Graph &g);

struct BipartiteCheck {
  bool bipartite = false;
  /// side[v] in {0, 1} when bipartite.
  std::vector<int> side;
  /// Closed odd walk v0 v1 ... v_{2k} (v_{2k} adjacent to v0) when not bipartite.
  std::vector<Vertex> odd_cycle;
};

BipartiteCheck is_bipartite(const Graph &g);

/// Length of a shortest cycle, 0 for forests.
int girth(const Graph &g);

} // namespace isobound
