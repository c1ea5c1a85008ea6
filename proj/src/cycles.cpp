#include "hyperfvs/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include "hyperfvs/disjoint_sets.hpp"

namespace hyperfvs {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void check_mask(const Hypergraph& h, const EdgeMask& alive) {
  if (alive.size() != h.num_edges()) throw std::invalid_argument("edge mask size does not match hypergraph");
}

// Hop distance (number of edges) from `source` to every vertex, walking only
// alive edges other than `skip`.
std::vector<std::size_t> hop_distances(const Hypergraph& h, const EdgeMask& alive, VertexId source,
                                       std::int64_t skip) {
  std::vector<std::size_t> dist(h.num_vertices() + 1, kUnreached);
  std::vector<bool> edge_seen(h.num_edges(), false);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId f : h.incident(x)) {
      if (!alive[f] || static_cast<std::int64_t>(f) == skip || edge_seen[f]) continue;
      edge_seen[f] = true;
      for (VertexId y : h.edge(f).v) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

// Girth of the incidence graph restricted to alive edges, in hypergraph
// cycle length (incidence length / 2). Returns 0 when acyclic.
std::size_t girth(const Hypergraph& h, const EdgeMask& alive) {
  const std::size_t n = h.num_vertices();
  const std::size_t nodes = n + h.num_edges();
  std::size_t best = kUnreached;
  std::vector<std::size_t> dist(nodes);
  std::vector<std::size_t> parent(nodes);
  auto neighbours = [&](std::size_t node, auto&& visit) {
    if (node < n) {
      for (EdgeId f : h.incident(static_cast<VertexId>(node + 1))) {
        if (alive[f]) visit(n + f);
      }
    } else {
      for (VertexId y : h.edge(static_cast<EdgeId>(node - n)).v) visit(static_cast<std::size_t>(y - 1));
    }
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (h.incident(static_cast<VertexId>(root + 1)).empty()) continue;
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[root] = 0;
    parent[root] = kUnreached;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      neighbours(u, [&](std::size_t w) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best == kUnreached ? 0 : best / 2;
}

// Enumerates cycles of exactly `length` edges whose first edge is `first`,
// with every other edge satisfying `allowed`, and keeps the lexicographically
// smallest (edge sequence, vertex sequence).
template <typename Allowed>
std::optional<BergeCycle> best_cycle_from(const Hypergraph& h, const EdgeMask& alive, EdgeId first,
                                          std::size_t length, Allowed allowed) {
  std::optional<BergeCycle> best;
  std::vector<bool> used_vertex(h.num_vertices() + 1, false);
  std::vector<bool> used_edge(h.num_edges(), false);
  BergeCycle cur;

  auto consider = [&](const BergeCycle& c) {
    if (!best || std::tie(c.edges, c.vertices) < std::tie(best->edges, best->vertices)) best = c;
  };

  std::vector<std::size_t> to_start;
  auto extend = [&](auto&& self, VertexId at) -> void {
    const std::size_t placed = cur.edges.size();
    const VertexId start = cur.vertices.front();
    for (EdgeId f : h.incident(at)) {
      if (!alive[f] || used_edge[f] || !allowed(f)) continue;
      if (placed + 1 == length) {
        if (h.edge(f).contains(start)) {
          cur.edges.push_back(f);
          consider(cur);
          cur.edges.pop_back();
        }
        continue;
      }
      used_edge[f] = true;
      cur.edges.push_back(f);
      for (VertexId x : h.edge(f).v) {
        if (used_vertex[x]) continue;
        if (to_start[x] == kUnreached || to_start[x] > length - placed - 1) continue;
        used_vertex[x] = true;
        cur.vertices.push_back(x);
        self(self, x);
        cur.vertices.pop_back();
        used_vertex[x] = false;
      }
      cur.edges.pop_back();
      used_edge[f] = false;
    }
  };

  const Edge& e1 = h.edge(first);
  for (VertexId v1 : e1.v) {
    to_start = hop_distances(h, alive, v1, first);
    for (VertexId v2 : e1.v) {
      if (v2 == v1) continue;
      if (length > 1 && to_start[v2] > length - 1) continue;
      cur = BergeCycle{{v1, v2}, {first}};
      used_vertex[v1] = used_vertex[v2] = true;
      used_edge[first] = true;
      extend(extend, v2);
      used_edge[first] = false;
      used_vertex[v1] = used_vertex[v2] = false;
    }
  }
  return best;
}

}  // namespace

EdgeMask all_edges(const Hypergraph& h) { return EdgeMask(h.num_edges(), true); }

EdgeMask edges_avoiding(const Hypergraph& h, std::span<const VertexId> removed) {
  EdgeMask alive(h.num_edges(), true);
  for (VertexId v : removed) {
    for (EdgeId f : h.incident(v)) alive[f] = false;
  }
  return alive;
}

bool is_valid_cycle(const Hypergraph& h, const BergeCycle& c) {
  const std::size_t k = c.edges.size();
  if (k < 2 || c.vertices.size() != k) return false;
  std::vector<VertexId> vs = c.vertices;
  std::vector<EdgeId> es = c.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  if (vs.front() == 0 || vs.back() > h.num_vertices() || es.back() >= h.num_edges()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Edge& e = h.edge(c.edges[i]);
    if (!e.contains(c.vertices[i]) || !e.contains(c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

bool is_acyclic(const Hypergraph& h, const EdgeMask& alive) {
  check_mask(h, alive);
  const std::size_t n = h.num_vertices();
  DisjointSets sets(n + h.num_edges());
  for (EdgeId f = 0; f < h.num_edges(); ++f) {
    if (!alive[f]) continue;
    for (VertexId x : h.edge(f).v) {
      if (!sets.unite(n + f, x - 1)) return false;
    }
  }
  return true;
}

bool is_acyclic(const Hypergraph& h) { return is_acyclic(h, all_edges(h)); }

EdgeMask cyclic_edges(const Hypergraph& h, const EdgeMask& alive) {
  check_mask(h, alive);
  EdgeMask out(h.num_edges(), false);
  if (is_acyclic(h, alive)) return out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!alive[e]) continue;
    DisjointSets sets(h.num_vertices() + 1);
    for (EdgeId f = 0; f < h.num_edges(); ++f) {
      if (!alive[f] || f == e) continue;
      const Edge& ef = h.edge(f);
      sets.unite(ef.v[0], ef.v[1]);
      sets.unite(ef.v[0], ef.v[2]);
    }
    const Edge& ee = h.edge(e);
    out[e] = sets.same(ee.v[0], ee.v[1]) || sets.same(ee.v[0], ee.v[2]) || sets.same(ee.v[1], ee.v[2]);
  }
  return out;
}

EdgeMask cyclic_edges(const Hypergraph& h) { return cyclic_edges(h, all_edges(h)); }

std::vector<bool> cycle_vertices(const Hypergraph& h, const EdgeMask& alive) {
  check_mask(h, alive);
  const std::size_t n = h.num_vertices();
  std::vector<bool> out(n, false);
  for (VertexId v = 1; v <= n; ++v) {
    std::vector<EdgeId> mine;
    for (EdgeId f : h.incident(v)) {
      if (alive[f]) mine.push_back(f);
    }
    if (mine.size() < 2) continue;
    // Incidence graph with node v removed: are two of v's edges still joined?
    DisjointSets sets(n + h.num_edges());
    for (EdgeId f = 0; f < h.num_edges(); ++f) {
      if (!alive[f]) continue;
      for (VertexId x : h.edge(f).v) {
        if (x != v) sets.unite(n + f, x - 1);
      }
    }
    for (std::size_t i = 0; i < mine.size() && !out[v - 1]; ++i) {
      for (std::size_t j = i + 1; j < mine.size(); ++j) {
        if (sets.same(n + mine[i], n + mine[j])) {
          out[v - 1] = true;
          break;
        }
      }
    }
  }
  return out;
}

std::optional<BergeCycle> shortest_cycle(const Hypergraph& h, const EdgeMask& alive) {
  check_mask(h, alive);
  const std::size_t k = girth(h, alive);
  if (k == 0) return std::nullopt;
  for (EdgeId first = 0; first < h.num_edges(); ++first) {
    if (!alive[first]) continue;
    auto found = best_cycle_from(h, alive, first, k, [first](EdgeId f) { return f > first; });
    if (found) return found;
  }
  throw std::logic_error("girth reported a cycle that enumeration did not find");
}

std::optional<BergeCycle> shortest_cycle(const Hypergraph& h) { return shortest_cycle(h, all_edges(h)); }

std::optional<BergeCycle> cycle_through_edge(const Hypergraph& h, EdgeId e, const EdgeMask& alive) {
  if (e >= h.num_edges()) throw std::out_of_range("edge " + std::to_string(e) + " out of range");
  check_mask(h, alive);
  if (!alive[e]) return std::nullopt;
  const Edge& ee = h.edge(e);
  std::size_t hops = kUnreached;
  for (std::size_t i = 0; i < 3; ++i) {
    auto dist = hop_distances(h, alive, ee.v[i], e);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) hops = std::min(hops, dist[ee.v[j]]);
    }
  }
  if (hops == kUnreached) return std::nullopt;
  return best_cycle_from(h, alive, e, hops + 1, [e](EdgeId f) { return f != e; });
}

std::optional<BergeCycle> cycle_through_edge(const Hypergraph& h, EdgeId e) {
  return cycle_through_edge(h, e, all_edges(h));
}

}  // namespace hyperfvs
