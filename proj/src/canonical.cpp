// Canonical labelling by search over edge orders.
//
// Fix an order of the edges. Every vertex then has an incidence mask (bit i
// set iff it lies in the i-th edge), and the sorted multiset of masks
// determines the hypergraph up to vertex relabelling. The canonical form is
// the minimum of that sorted mask list over all admissible edge orders.
// Edges are first grouped by an isomorphism-invariant signature and only
// orders that respect the grouping are searched.

#include <algorithm>
#include <array>
#include <functional>

#include "hyperfvs/oracle.hpp"

namespace hyperfvs {

namespace {

constexpr std::uint64_t kMaxOrders = 5'000'000;

struct Signature {
  std::array<std::size_t, 3> degrees{};  // ascending
  std::size_t neighbours = 0;            // edges meeting this one

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

}  // namespace

Hypergraph canonical_form(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  const std::size_t n = h.num_vertices();
  if (m > 63) throw LimitExceeded("canonical form supports at most 63 edges");

  std::vector<Signature> sig(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = h.edge(e);
    for (std::size_t i = 0; i < 3; ++i) sig[e].degrees[i] = h.degree(edge.v[i]);
    std::sort(sig[e].degrees.begin(), sig[e].degrees.end());
    for (EdgeId f = 0; f < m; ++f) {
      if (f != e && edge.shared_with(h.edge(f)) > 0) ++sig[e].neighbours;
    }
  }
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return sig[a] < sig[b]; });

  // Position i may only hold edges from the class whose range covers i.
  std::vector<std::size_t> class_begin(m);
  std::vector<std::size_t> class_end(m);
  std::uint64_t orders = 1;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && sig[order[j]] == sig[order[i]]) ++j;
    for (std::size_t k = i; k < j; ++k) {
      class_begin[k] = i;
      class_end[k] = j;
    }
    for (std::size_t f = 2; f <= j - i; ++f) {
      if (orders > kMaxOrders / f) throw LimitExceeded("canonical form search space too large");
      orders *= f;
    }
    i = j;
  }

  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> masks(n);
  std::vector<std::size_t> position(m);
  std::vector<bool> placed(m, false);

  auto evaluate = [&]() {
    std::fill(masks.begin(), masks.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << (m - 1 - position[e]);
      for (VertexId x : h.edge(e).v) masks[x - 1] |= bit;
    }
    std::sort(masks.begin(), masks.end(), std::greater<>());
    if (best.empty() || masks < best) best = masks;
  };

  auto assign = [&](auto&& self, std::size_t slot) -> void {
    if (slot == m) {
      evaluate();
      return;
    }
    for (std::size_t k = class_begin[slot]; k < class_end[slot]; ++k) {
      const EdgeId e = order[k];
      if (placed[e]) continue;
      placed[e] = true;
      position[e] = slot;
      self(self, slot + 1);
      placed[e] = false;
    }
  };
  if (m == 0) {
    best.assign(n, 0);
  } else {
    assign(assign, 0);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (m - 1 - i);
    std::array<VertexId, 3> vs{};
    std::size_t found = 0;
    for (std::size_t label = 0; label < n && found < 3; ++label) {
      if (best[label] & bit) vs[found++] = static_cast<VertexId>(label + 1);
    }
    edges.push_back(Edge::make(vs[0], vs[1], vs[2]));
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace hyperfvs
