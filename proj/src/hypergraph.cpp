#include "hyperfvs/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hyperfvs/cycles.hpp"
#include "hyperfvs/disjoint_sets.hpp"

namespace hyperfvs {

Edge Edge::make(VertexId a, VertexId b, VertexId c) {
  Edge e{{a, b, c}};
  std::sort(e.v.begin(), e.v.end());
  if (e.v[0] == e.v[1] || e.v[1] == e.v[2]) {
    throw std::invalid_argument("edge repeats a vertex");
  }
  return e;
}

std::size_t Edge::shared_with(const Edge& other) const {
  std::size_t count = 0;
  for (VertexId x : v) count += other.contains(x) ? 1 : 0;
  return count;
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    e = Edge::make(e.v[0], e.v[1], e.v[2]);
    if (e.v[0] == 0 || e.v[2] > n_) {
      throw std::invalid_argument("edge vertex outside 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  incidence_.assign(n_, {});
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    for (VertexId x : edges_[id].v) incidence_[x - 1].push_back(id);
  }
}

std::span<const EdgeId> Hypergraph::incident(VertexId v) const {
  if (v == 0 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return incidence_[v - 1];
}

std::int64_t Hypergraph::find(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return std::distance(edges_.begin(), it);
}

// ---------------------------------------------------------------------------

namespace {

std::string kind_label(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::MissingHeader: return "missing header";
    case ParseError::Kind::BadHeader: return "malformed header";
    case ParseError::Kind::BadToken: return "not a vertex id";
    case ParseError::Kind::Arity: return "edge arity is not 3";
    case ParseError::Kind::RepeatedVertex: return "repeated vertex in edge";
    case ParseError::Kind::DuplicateEdge: return "duplicate edge";
    case ParseError::Kind::VertexOutOfRange: return "vertex id out of range";
    case ParseError::Kind::EdgeCountMismatch: return "edge count does not match header";
  }
  return "parse error";
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_u64(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string{}) + kind_label(kind) +
                         (what.empty() ? std::string{} : " (" + what + ")")),
      kind_(kind),
      line_(line) {}

Hypergraph parse_hypergraph(std::string_view text) {
  using Kind = ParseError::Kind;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens[0] != "3uhg") throw ParseError(Kind::MissingHeader, lineno, std::string(line));
      if (tokens.size() != 3 || !to_u64(tokens[1], n) || !to_u64(tokens[2], m)) {
        throw ParseError(Kind::BadHeader, lineno, std::string(line));
      }
      have_header = true;
    } else {
      if (edges.size() == m) {
        throw ParseError(Kind::EdgeCountMismatch, lineno, "more than " + std::to_string(m) + " edge lines");
      }
      if (tokens.size() != 3) {
        throw ParseError(Kind::Arity, lineno, std::to_string(tokens.size()) + " entries");
      }
      std::array<VertexId, 3> ids{};
      for (std::size_t i = 0; i < 3; ++i) {
        std::uint64_t x = 0;
        if (!to_u64(tokens[i], x)) throw ParseError(Kind::BadToken, lineno, std::string(tokens[i]));
        if (x == 0 || x > n) throw ParseError(Kind::VertexOutOfRange, lineno, std::to_string(x));
        ids[i] = static_cast<VertexId>(x);
      }
      if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2]) {
        throw ParseError(Kind::RepeatedVertex, lineno, std::string(line));
      }
      Edge e = Edge::make(ids[0], ids[1], ids[2]);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] == e) {
          throw ParseError(Kind::DuplicateEdge, lineno, "same as line " + std::to_string(edge_lines[i]));
        }
      }
      edges.push_back(e);
      edge_lines.push_back(lineno);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(Kind::MissingHeader, 0, "empty input");
  if (edges.size() != m) {
    throw ParseError(Kind::EdgeCountMismatch, 0,
                     "header says " + std::to_string(m) + ", found " + std::to_string(edges.size()));
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_hypergraph(text);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

std::string serialize(const Hypergraph& h) {
  std::string out = "3uhg " + std::to_string(h.num_vertices()) + " " + std::to_string(h.num_edges()) + "\n";
  for (const Edge& e : h.edges()) {
    out += std::to_string(e.v[0]) + " " + std::to_string(e.v[1]) + " " + std::to_string(e.v[2]) + "\n";
  }
  return out;
}

void save_hypergraph(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(h);
}

std::uint64_t instance_hash(const Hypergraph& h) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(h)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string instance_hash_hex(const Hypergraph& h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(instance_hash(h)));
  return buf;
}

// ---------------------------------------------------------------------------

ComponentPartition components(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  DisjointSets sets(n);
  for (const Edge& e : h.edges()) {
    sets.unite(e.v[0] - 1, e.v[1] - 1);
    sets.unite(e.v[0] - 1, e.v[2] - 1);
  }
  ComponentPartition parts;
  parts.assignment.assign(n, 0);
  std::vector<std::size_t> index_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = sets.find(i);
    if (index_of_root[root] == n) index_of_root[root] = parts.count++;
    parts.assignment[i] = index_of_root[root];
  }
  return parts;
}

std::vector<ComponentStats> component_stats(const Hypergraph& h, const ComponentPartition& parts) {
  std::vector<ComponentStats> stats(parts.count);
  for (std::size_t c : parts.assignment) ++stats[c].vertices;
  for (const Edge& e : h.edges()) ++stats[parts.of(e.v[0])].edges;
  return stats;
}

std::size_t degree(const Hypergraph& h, VertexId v) { return h.degree(v); }

std::size_t max_degree(const Hypergraph& h) {
  std::size_t best = 0;
  for (VertexId v = 1; v <= h.num_vertices(); ++v) best = std::max(best, h.degree(v));
  return best;
}

bool is_linear(const Hypergraph& h) {
  // Two edges share two vertices iff some vertex pair is covered twice.
  for (VertexId v = 1; v <= h.num_vertices(); ++v) {
    auto inc = h.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (h.edge(inc[i]).shared_with(h.edge(inc[j])) > 1) return false;
      }
    }
  }
  return true;
}

Hypergraph delete_vertices(const Hypergraph& h, std::span<const VertexId> vs) {
  for (VertexId v : vs) (void)h.incident(v);
  std::vector<Edge> kept;
  for (const Edge& e : h.edges()) {
    bool hit = std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return e.contains(v); });
    if (!hit) kept.push_back(e);
  }
  return Hypergraph(h.num_vertices(), std::move(kept));
}

Hypergraph delete_vertex(const Hypergraph& h, VertexId v) {
  return delete_vertices(h, std::span<const VertexId>(&v, 1));
}

Hypergraph delete_edges(const Hypergraph& h, std::span<const EdgeId> ids) {
  std::vector<bool> drop(h.num_edges(), false);
  for (EdgeId e : ids) {
    if (e >= h.num_edges()) throw std::out_of_range("edge " + std::to_string(e) + " out of range");
    drop[e] = true;
  }
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!drop[e]) kept.push_back(h.edge(e));
  }
  return Hypergraph(h.num_vertices(), std::move(kept));
}

bool is_hypertree(const Hypergraph& h) {
  if (h.num_vertices() == 0) return false;
  if (components(h).count != 1 || !is_acyclic(h)) return false;
  if (h.num_vertices() != 2 * h.num_edges() + 1) {
    throw std::logic_error("hypertree with n != 2m + 1");
  }
  return true;
}

bool check_component_bound(const Hypergraph& h) {
  auto parts = components(h);
  for (const ComponentStats& s : component_stats(h, parts)) {
    if (s.vertices > 2 * s.edges + 1) return false;
  }
  return true;
}

bool is_two_cycle_component(const Hypergraph& h, const ComponentPartition& parts, std::size_t c) {
  if (c >= parts.count) throw std::out_of_range("component index out of range");
  std::vector<EdgeId> in_component;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (parts.of(h.edge(e).v[0]) == c) in_component.push_back(e);
  }
  if (in_component.size() != 2) return false;
  return h.edge(in_component[0]).shared_with(h.edge(in_component[1])) == 2;
}

bool is_two_cycle_component(const Hypergraph& h, std::size_t c) {
  return is_two_cycle_component(h, components(h), c);
}

}  // namespace hyperfvs
