#include "isobound/graph.hpp"

#include <algorithm>
#include <queue>

#include "isobound/error.hpp"

namespace isobound {

Graph::Graph(int n, const std::vector<Edge> &edges, std::string label)
    : n_(n), label_(std::move(label)) {
  if (n < 1)
    throw InvalidInput("graph order must be at least 1, got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") out of range for order " + std::to_string(n));
    if (u == v)
      throw InvalidInput("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u) * n + v] = 1;
    adj_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  nbrs_.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adjacent(u, v))
        nbrs_[u].push_back(v);
  for (const auto &nb : nbrs_)
    m_ += static_cast<int>(nb.size());
  m_ /= 2;
}

Graph Graph::relabeled(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

Graph make_cycle(int n) {
  if (n < 3)
    throw InvalidInput("cycle order must be at least 3, got " + std::to_string(n));
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph(n, e, "C" + std::to_string(n));
}

Graph make_path(int n) {
  if (n < 1)
    throw InvalidInput("path order must be at least 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph(n, e, "P" + std::to_string(n));
}

Graph make_complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      e.emplace_back(u, v);
  return Graph(n, e, "K" + std::to_string(n));
}

Graph make_empty(int n) { return Graph(n, {}, "empty" + std::to_string(n)); }

Graph make_kneser(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw InvalidInput("Kneser graph needs n >= 2k >= 2, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  if (n > 30)
    throw InvalidInput("Kneser ground set limited to 30 elements");
  // Lexicographic k-subsets as bitmasks.
  std::vector<std::uint32_t> subsets;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx)
      mask |= 1u << i;
    subsets.push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  std::vector<Edge> e;
  const int count = static_cast<int>(subsets.size());
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v)
      if ((subsets[u] & subsets[v]) == 0)
        e.emplace_back(u, v);
  return Graph(count, e, "Kneser(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

namespace {
bool is_prime(int q) {
  if (q < 2)
    return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0)
      return false;
  return true;
}
} // namespace

Graph make_paley(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw InvalidInput("Paley graph needs a prime q = 1 mod 4, got " + std::to_string(q));
  std::vector<bool> residue(q, false);
  for (int x = 1; x < q; ++x)
    residue[(static_cast<long long>(x) * x) % q] = true;
  std::vector<Edge> e;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (residue[v - u])
        e.emplace_back(u, v);
  return Graph(q, e, "Paley(" + std::to_string(q) + ")");
}

Graph make_folded_cube(int d) {
  if (d < 2)
    throw InvalidInput("folded cube dimension must be at least 2, got " + std::to_string(d));
  if (d > 16)
    throw InvalidInput("folded cube dimension limited to 16");
  const int len = d - 1;
  const int n = 1 << len;
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int dist = __builtin_popcount(static_cast<unsigned>(u ^ v));
      if (dist == 1 || dist == len)
        e.emplace_back(u, v);
    }
  return Graph(n, e, "folded-cube(" + std::to_string(d) + ")");
}

Graph complement(const Graph &g) {
  const int n = g.order();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        e.emplace_back(u, v);
  return Graph(n, e, g.label().empty() ? std::string{} : "co-" + g.label());
}

Graph line_graph(const Graph &g) {
  const auto edges = g.edges();
  if (edges.empty())
    throw InvalidInput("line graph of a graph without edges is undefined");
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> e;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto [u1, v1] = edges[a];
      auto [u2, v2] = edges[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        e.emplace_back(a, b);
    }
  return Graph(m, e, g.label().empty() ? std::string{} : "L(" + g.label() + ")");
}

Graph cartesian_product(const Graph &g, const Graph &h) {
  const int ng = g.order(), nh = h.order();
  auto id = [nh](int a, int b) { return a * nh + b; };
  std::vector<Edge> e;
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) {
      for (int b2 : h.neighbors(b))
        if (b < b2)
          e.emplace_back(id(a, b), id(a, b2));
      for (int a2 : g.neighbors(a))
        if (a < a2)
          e.emplace_back(id(a, b), id(a2, b));
    }
  std::string label;
  if (!g.label().empty() && !h.label().empty())
    label = g.label() + "x" + h.label();
  return Graph(ng * nh, e, label);
}

std::vector<int> degrees(const Graph &g) {
  std::vector<int> d(g.order());
  for (int u = 0; u < g.order(); ++u)
    d[u] = g.degree(u);
  return d;
}

int min_degree(const Graph &g) {
  const auto d = degrees(g);
  return *std::min_element(d.begin(), d.end());
}

int max_degree(const Graph &g) {
  const auto d = degrees(g);
  return *std::max_element(d.begin(), d.end());
}

std::optional<int> is_regular(const Graph &g) {
  const int d0 = g.degree(0);
  for (int u = 1; u < g.order(); ++u)
    if (g.degree(u) != d0)
      return std::nullopt;
  return d0;
}

BipartiteCheck is_bipartite(const Graph &g) {
  const int n = g.order();
  BipartiteCheck out;
  std::vector<int> side(n, -1), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (side[root] != -1)
      continue;
    side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          parent[v] = u;
          q.push(v);
        } else if (side[v] == side[u]) {
          // Odd cycle: paths from u and v up to their lowest common ancestor.
          std::vector<int> pu{u}, pv{v};
          auto depth_of = [&](int x) {
            int depth = 0;
            while (parent[x] != -1) {
              x = parent[x];
              ++depth;
            }
            return depth;
          };
          int a = u, b = v;
          int da = depth_of(a), db = depth_of(b);
          while (da > db) {
            a = parent[a];
            pu.push_back(a);
            --da;
          }
          while (db > da) {
            b = parent[b];
            pv.push_back(b);
            --db;
          }
          while (a != b) {
            a = parent[a];
            b = parent[b];
            pu.push_back(a);
            pv.push_back(b);
          }
          pv.pop_back(); // common ancestor already in pu
          out.odd_cycle = pu;
          out.odd_cycle.insert(out.odd_cycle.end(), pv.rbegin(), pv.rend());
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  out.side = std::move(side);
  return out;
}

int girth(const Graph &g) {
  const int n = g.order();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          const int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best)
            best = len;
        }
      }
    }
  }
  return best;
}

} // namespace isobound
