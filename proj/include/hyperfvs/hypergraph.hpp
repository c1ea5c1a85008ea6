#ifndef HYPERFVS_HYPERGRAPH_HPP
#define HYPERFVS_HYPERGRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperfvs {

/// 1-based vertex label. Stable under every deletion operation.
using VertexId = std::uint32_t;
/// 0-based position of an edge in the owning hypergraph's edge list.
using EdgeId = std::uint32_t;

/// A 3-element edge with strictly increasing vertices.
struct Edge {
  std::array<VertexId, 3> v{};

  /// Sorts the triple; throws std::invalid_argument on a repeated vertex.
  static Edge make(VertexId a, VertexId b, VertexId c);

  bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }
  std::size_t shared_with(const Edge& other) const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A 3-uniform hypergraph on vertices 1..n.
///
/// Edges are kept sorted lexicographically, so EdgeId is a property of the
/// edge set alone and not of the order edges were supplied in. Duplicate
/// edges and vertex ids outside 1..n are rejected at construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  /// Edges containing v, ascending. Throws std::out_of_range if v is not in 1..n.
  std::span<const EdgeId> incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }

  /// Position of an edge with exactly these vertices, or -1.
  std::int64_t find(const Edge& e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;  // index v-1
};

// ---------------------------------------------------------------------------
// Text format

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MissingHeader,
    BadHeader,
    BadToken,
    Arity,
    RepeatedVertex,
    DuplicateEdge,
    VertexOutOfRange,
    EdgeCountMismatch,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  /// 1-based line number in the input; 0 when the error concerns the whole file.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph load_hypergraph(const std::string& path);

/// `3uhg <n> <m>` followed by one sorted edge per line.
std::string serialize(const Hypergraph& h);
void save_hypergraph(const Hypergraph& h, const std::string& path);

/// FNV-1a digest of serialize(h).
std::uint64_t instance_hash(const Hypergraph& h);
std::string instance_hash_hex(const Hypergraph& h);

// ---------------------------------------------------------------------------
// Structure

struct ComponentPartition {
  /// assignment[v-1] is the component index of v. Components are numbered in
  /// order of their smallest vertex.
  std::vector<std::size_t> assignment;
  std::size_t count = 0;

  std::size_t of(VertexId v) const { return assignment.at(v - 1); }
};

struct ComponentStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

ComponentPartition components(const Hypergraph& h);
/// (n_i, m_i) per component, indexed like the partition.
std::vector<ComponentStats> component_stats(const Hypergraph& h, const ComponentPartition& parts);

std::size_t degree(const Hypergraph& h, VertexId v);
std::size_t max_degree(const Hypergraph& h);
bool is_linear(const Hypergraph& h);

/// Strong deletion: every edge incident to v disappears, v stays as an isolated vertex.
Hypergraph delete_vertex(const Hypergraph& h, VertexId v);
Hypergraph delete_vertices(const Hypergraph& h, std::span<const VertexId> vs);
Hypergraph delete_edges(const Hypergraph& h, std::span<const EdgeId> ids);

/// Connected and acyclic. Throws std::logic_error if a hypertree ever fails n = 2m + 1.
bool is_hypertree(const Hypergraph& h);
/// n_i <= 2 m_i + 1 on every component.
bool check_component_bound(const Hypergraph& h);
bool is_two_cycle_component(const Hypergraph& h, const ComponentPartition& parts, std::size_t c);
bool is_two_cycle_component(const Hypergraph& h, std::size_t c);

}  // namespace hyperfvs

#endif  // HYPERFVS_HYPERGRAPH_HPP
