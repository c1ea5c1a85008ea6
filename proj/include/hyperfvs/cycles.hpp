#ifndef HYPERFVS_CYCLES_HPP
#define HYPERFVS_CYCLES_HPP

#include <optional>
#include <span>
#include <vector>

#include "hyperfvs/hypergraph.hpp"

namespace hyperfvs {

/// Which edges of a hypergraph are still present. Indexed by EdgeId.
using EdgeMask = std::vector<bool>;

EdgeMask all_edges(const Hypergraph& h);
/// Mask of edges that avoid every vertex in `removed` (strong deletion).
EdgeMask edges_avoiding(const Hypergraph& h, std::span<const VertexId> removed);

/// Berge cycle v1 e1 v2 e2 ... vk ek v1 with {v_i, v_{i+1}} in e_i.
struct BergeCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const BergeCycle&, const BergeCycle&) = default;
};

/// Checks the cycle definition against h: k >= 2, distinct vertices, distinct
/// edges, consecutive vertices contained in the edge between them.
bool is_valid_cycle(const Hypergraph& h, const BergeCycle& c);

// Acyclicity is a forest test on the bipartite incidence graph.
bool is_acyclic(const Hypergraph& h);
bool is_acyclic(const Hypergraph& h, const EdgeMask& alive);

/// Edges of `alive` that lie on at least one cycle of the sub-hypergraph.
EdgeMask cyclic_edges(const Hypergraph& h, const EdgeMask& alive);
EdgeMask cyclic_edges(const Hypergraph& h);

/// Vertices that appear as some v_i of some cycle. Indexed by v-1.
std::vector<bool> cycle_vertices(const Hypergraph& h, const EdgeMask& alive);

/// A cycle of minimum length. Among the shortest, the one whose edge sequence
/// (rotated to start at its smallest edge) and then vertex sequence is
/// lexicographically smallest.
std::optional<BergeCycle> shortest_cycle(const Hypergraph& h);
std::optional<BergeCycle> shortest_cycle(const Hypergraph& h, const EdgeMask& alive);

/// A shortest cycle through e, rotated so that edges[0] == e. Ties broken
/// lexicographically as for shortest_cycle. Throws std::out_of_range for a bad id.
std::optional<BergeCycle> cycle_through_edge(const Hypergraph& h, EdgeId e);
std::optional<BergeCycle> cycle_through_edge(const Hypergraph& h, EdgeId e, const EdgeMask& alive);

}  // namespace hyperfvs

#endif  // HYPERFVS_CYCLES_HPP
