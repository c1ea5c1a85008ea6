#include "hyperfvs/fes.hpp"

#include <algorithm>

#include "hyperfvs/cycles.hpp"
#include "hyperfvs/disjoint_sets.hpp"
#include "hyperfvs/fvs.hpp"

namespace hyperfvs {

FesCertificate greedy_hyperforest(const Hypergraph& h) {
  FesCertificate cert;
  cert.n = h.num_vertices();
  cert.m = h.num_edges();
  cert.p = components(h).count;

  DisjointSets forest(h.num_vertices() + 1);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto& v = h.edge(e).v;
    const std::size_t a = forest.find(v[0]);
    const std::size_t b = forest.find(v[1]);
    const std::size_t c = forest.find(v[2]);
    if (a != b && b != c && a != c) {
      forest.unite(a, b);
      forest.unite(a, c);
      cert.kept.push_back(e);
    } else {
      cert.A.push_back(e);
    }
  }

  Hypergraph rest = delete_edges(h, cert.A);
  auto parts = components(rest);
  cert.k = parts.count;
  cert.per_component = component_stats(rest, parts);

  if (auto problem = audit_fes_certificate(h, cert); !problem.empty()) {
    throw CertificationError("FES certificate failed its own audit: " + problem);
  }
  return cert;
}

bool verify_fes(const Hypergraph& h, std::span<const EdgeId> A) {
  EdgeMask alive = all_edges(h);
  for (EdgeId e : A) {
    if (e >= h.num_edges()) throw std::out_of_range("edge " + std::to_string(e) + " out of range");
    alive[e] = false;
  }
  return is_acyclic(h, alive);
}

std::string audit_fes_certificate(const Hypergraph& h, const FesCertificate& cert) {
  if (cert.n != h.num_vertices() || cert.m != h.num_edges()) return "n or m does not match the instance";
  if (cert.p != components(h).count) return "p does not match the instance";

  std::vector<int> seen(h.num_edges(), 0);
  for (EdgeId e : cert.A) {
    if (e >= h.num_edges()) return "A contains unknown edge " + std::to_string(e);
    ++seen[e];
  }
  for (EdgeId e : cert.kept) {
    if (e >= h.num_edges()) return "KEPT contains unknown edge " + std::to_string(e);
    ++seen[e];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    return "A and KEPT do not partition the edge set";
  }
  if (!verify_fes(h, cert.A)) return "H minus A still has a cycle";

  Hypergraph rest = delete_edges(h, cert.A);
  auto parts = components(rest);
  auto stats = component_stats(rest, parts);
  if (cert.k != parts.count) return "k does not match the components of H minus A";
  if (cert.per_component.size() != stats.size()) return "component list has the wrong length";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const auto& s = cert.per_component[i];
    if (s.vertices != stats[i].vertices || s.edges != stats[i].edges) {
      return "component " + std::to_string(i) + " statistics do not match";
    }
    if (s.vertices != 2 * s.edges + 1) return "component " + std::to_string(i) + " has n_i != 2 m_i + 1";
  }
  const auto a = static_cast<std::int64_t>(cert.A.size());
  const auto two_m_minus_n = 2 * static_cast<std::int64_t>(cert.m) - static_cast<std::int64_t>(cert.n);
  if (2 * a != two_m_minus_n + static_cast<std::int64_t>(cert.k)) return "2|A| != 2m - n + k";
  if (a > cert.bound()) return "|A| exceeds 2m - n + p";
  return {};
}

}  // namespace hyperfvs
