#include "isobound/exact.hpp"

#include <bit>
#include <cstdint>

#include "isobound/error.hpp"

namespace isobound {

namespace {

using Bits = std::uint64_t;

inline int lowest(Bits b) { return std::countr_zero(b); }
inline Bits bit(int v) { return Bits{1} << v; }

class MisSearch {
public:
  explicit MisSearch(const Graph &g) : n_(g.order()), nbr_(n_, 0) {
    for (int u = 0; u < n_; ++u)
      for (int v : g.neighbors(u))
        nbr_[u] |= bit(v);
  }

  Bits run() {
    const Bits all = n_ == 64 ? ~Bits{0} : bit(n_) - 1;
    best_ = 0;
    best_size_ = 0;
    search(all, 0, 0);
    return best_;
  }

private:
  int clique_cover(Bits rest) const {
    int count = 0;
    while (rest) {
      const int v = lowest(rest);
      Bits clique = bit(v);
      Bits cand = rest & nbr_[v];
      while (cand) {
        const int w = lowest(cand);
        clique |= bit(w);
        cand &= nbr_[w];
      }
      rest &= ~clique;
      ++count;
    }
    return count;
  }

  void record(Bits chosen) {
    const int size = std::popcount(chosen);
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen;
    }
  }

  void search(Bits cand, Bits chosen, int size) {
    // Vertices of residual degree <= 1 belong to some maximum independent set.
    while (true) {
      bool reduced = false;
      for (Bits it = cand; it; it &= it - 1) {
        const int v = lowest(it);
        if (std::popcount(nbr_[v] & cand) <= 1) {
          chosen |= bit(v);
          ++size;
          cand &= ~(bit(v) | nbr_[v]);
          reduced = true;
          break;
        }
      }
      if (!reduced)
        break;
    }
    if (cand == 0) {
      record(chosen);
      return;
    }
    if (size + std::popcount(cand) <= best_size_)
      return;
    if (size + clique_cover(cand) <= best_size_)
      return;

    int pivot = -1, pivot_deg = -1;
    for (Bits it = cand; it; it &= it - 1) {
      const int v = lowest(it);
      const int d = std::popcount(nbr_[v] & cand);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    search(cand & ~(bit(pivot) | nbr_[pivot]), chosen | bit(pivot), size + 1);
    search(cand & ~bit(pivot), chosen, size);
  }

  int n_;
  std::vector<Bits> nbr_;
  Bits best_ = 0;
  int best_size_ = 0;
};

} // namespace

IndependentSetWitness independence_number(const Graph &g) {
  if (g.order() > kExactOrderLimit)
    throw SizeLimitError("exact independence number limited to " +
                         std::to_string(kExactOrderLimit) + " vertices, got " +
                         std::to_string(g.order()));
  MisSearch search(g);
  Bits best = search.run();
  IndependentSetWitness w;
  for (; best; best &= best - 1)
    w.vertices.push_back(lowest(best));
  w.size = static_cast<int>(w.vertices.size());
  return w;
}

int clique_number(const Graph &g) { return independence_number(complement(g)).size; }

bool is_independent_set(const Graph &g, const std::vector<Vertex> &vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    const int u = vertices[a];
    if (u < 0 || u >= g.order())
      return false;
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (u == vertices[b] || g.adjacent(u, vertices[b]))
        return false;
  }
  return true;
}

std::vector<Edge> maximum_matching_bipartite(const Graph &g, const std::vector<int> &side) {
  const int n = g.order();
  if (static_cast<int>(side.size()) != n)
    throw InvalidInput("bipartition size does not match graph order");
  for (int v = 0; v < n; ++v)
    if (side[v] != 0 && side[v] != 1)
      throw InvalidInput("bipartition labels must be 0 or 1");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v])
      throw InvalidInput("graph is not bipartite for the given parts: edge (" +
                         std::to_string(u) + ", " + std::to_string(v) + ")");

  // Kuhn's augmenting paths from each left vertex.
  std::vector<int> match(n, -1);
  std::vector<char> visited;
  auto augment = [&](auto &&self, int u) -> bool {
    for (int v : g.neighbors(u)) {
      if (visited[v])
        continue;
      visited[v] = 1;
      if (match[v] == -1 || self(self, match[v])) {
        match[v] = u;
        match[u] = v;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    if (side[u] != 0 || match[u] != -1)
      continue;
    visited.assign(n, 0);
    augment(augment, u);
  }

  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    if (side[u] == 0 && match[u] != -1)
      out.emplace_back(std::min(u, match[u]), std::max(u, match[u]));
  return out;
}

} // namespace isobound
