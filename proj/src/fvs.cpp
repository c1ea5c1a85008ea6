#include "hyperfvs/fvs.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace hyperfvs {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 10> kRuleNames{{
    {Rule::NonCycleEdge, "NonCycleEdge"},
    {Rule::HighDegreeVertex, "HighDegreeVertex"},
    {Rule::Triangle, "Triangle"},
    {Rule::PendantOnCycle, "PendantOnCycle"},
    {Rule::FourCycleShared, "FourCycleShared"},
    {Rule::FourCycleDisjoint, "FourCycleDisjoint"},
    {Rule::CycleMod0, "CycleMod0"},
    {Rule::CycleMod1, "CycleMod1"},
    {Rule::CycleMod2, "CycleMod2"},
    {Rule::GeneralDegree2Plus, "GeneralDegree2Plus"},
}};

RuleApplication make_application(Rule rule, std::vector<EdgeId> edges, std::vector<VertexId> vertices) {
  std::sort(edges.begin(), edges.end());
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw CertificationError(std::string(rule_name(rule)) + " would remove the same edge twice");
  }
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw CertificationError(std::string(rule_name(rule)) + " would add the same vertex twice");
  }
  return RuleApplication{rule, std::move(edges), std::move(vertices)};
}

std::vector<EdgeId> alive_incident(const Hypergraph& h, const EdgeMask& alive, VertexId v) {
  std::vector<EdgeId> out;
  for (EdgeId f : h.incident(v)) {
    if (alive[f]) out.push_back(f);
  }
  return out;
}

VertexId third_vertex(const Edge& e, VertexId a, VertexId b) {
  for (VertexId x : e.v) {
    if (x != a && x != b) return x;
  }
  throw CertificationError("cycle edge has no third vertex");
}

// Shortest cycles in a linear hypergraph have no chords between non-adjacent edges.
void require_chordless(const Hypergraph& h, const BergeCycle& c) {
  const std::size_t k = c.length();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (h.edge(c.edges[i]).shared_with(h.edge(c.edges[j])) != 0) {
        throw CertificationError("shortest cycle has intersecting non-adjacent edges");
      }
    }
  }
}

std::optional<RuleApplication> general_step(const Hypergraph& h, const EdgeMask& alive) {
  const auto on_cycle = cycle_vertices(h, alive);
  VertexId pick = 0;
  std::size_t pick_degree = 0;
  for (VertexId v = 1; v <= h.num_vertices(); ++v) {
    if (!on_cycle[v - 1]) continue;
    std::size_t d = alive_incident(h, alive, v).size();
    if (d > pick_degree) {
      pick = v;
      pick_degree = d;
    }
  }
  if (pick == 0 || pick_degree < 2) throw CertificationError("cyclic hypergraph without a cycle vertex of degree >= 2");
  return make_application(Rule::GeneralDegree2Plus, alive_incident(h, alive, pick), {pick});
}

std::optional<RuleApplication> linear_step(const Hypergraph& h, const EdgeMask& alive) {
  const std::size_t n = h.num_vertices();
  std::vector<std::size_t> deg(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) deg[v] = alive_incident(h, alive, v).size();

  for (VertexId v = 1; v <= n; ++v) {
    if (deg[v] >= 3) return make_application(Rule::HighDegreeVertex, alive_incident(h, alive, v), {v});
  }

  auto shortest = shortest_cycle(h, alive);
  if (!shortest) throw CertificationError("cyclic hypergraph without a shortest cycle");
  if (shortest->length() < 3) throw PreconditionError("hypergraph is not linear (contains a 2-cycle)");
  if (shortest->length() == 3) {
    const auto& c = *shortest;
    return make_application(Rule::Triangle, {c.edges[0], c.edges[1], c.edges[2]}, {c.vertices[0]});
  }

  for (VertexId v = 1; v <= n; ++v) {
    if (deg[v] != 1) continue;
    EdgeId e1 = alive_incident(h, alive, v).front();
    auto c = cycle_through_edge(h, e1, alive);
    if (!c) throw CertificationError("pendant edge lies on no cycle after non-cycle edges were removed");
    if (c->length() < 4) throw CertificationError("pendant cycle shorter than 4 in a triangle-free hypergraph");
    return make_application(Rule::PendantOnCycle, {c->edges[0], c->edges[1], c->edges[2]}, {c->vertices[2]});
  }

  // Every remaining non-isolated vertex has degree exactly 2 from here on.
  const BergeCycle& c = *shortest;
  const std::size_t k = c.length();
  require_chordless(h, c);
  std::vector<VertexId> u(k);
  for (std::size_t i = 0; i < k; ++i) u[i] = third_vertex(h.edge(c.edges[i]), c.vertices[i], c.vertices[(i + 1) % k]);
  auto second_edge = [&](std::size_t i) {
    auto inc = alive_incident(h, alive, u[i]);
    if (inc.size() != 2) throw CertificationError("2-regularity violated at a cycle's third vertex");
    return inc[0] == c.edges[i] ? inc[1] : inc[0];
  };
  auto v = [&](std::size_t index_1based) { return c.vertices[index_1based - 1]; };
  std::vector<EdgeId> removed(c.edges.begin(), c.edges.end());

  if (k == 4) {
    const EdgeId e5 = second_edge(0);
    const EdgeId e6 = second_edge(1);
    const EdgeId e7 = second_edge(2);
    if (e5 == e7) {
      removed.insert(removed.end(), {e5, e6});
      return make_application(Rule::FourCycleShared, removed, {u[1], u[3]});
    }
    removed.insert(removed.end(), {e5, e7});
    return make_application(Rule::FourCycleDisjoint, removed, {u[0], u[2]});
  }

  const std::size_t t = k / 3;
  std::vector<VertexId> added;
  switch (k % 3) {
    case 0:
      for (std::size_t i = 1; i <= t; ++i) added.push_back(v(3 * i));
      return make_application(Rule::CycleMod0, removed, added);
    case 1:
      removed.insert(removed.end(), {second_edge(0), second_edge(2)});
      added = {u[0], u[2]};
      for (std::size_t i = 2; i <= t; ++i) added.push_back(v(3 * i));
      return make_application(Rule::CycleMod1, removed, added);
    default:
      removed.push_back(second_edge(0));
      added = {u[0]};
      for (std::size_t i = 1; i <= t; ++i) added.push_back(v(3 * i + 1));
      return make_application(Rule::CycleMod2, removed, added);
  }
}

FvsCertificate run_reduction(const Hypergraph& h, FvsMode mode) {
  FvsCertificate cert;
  cert.mode = mode;
  cert.m0 = h.num_edges();
  cert.bound = fvs_bound(mode, cert.m0);

  EdgeMask alive = all_edges(h);
  std::set<VertexId> chosen;
  while (auto app = reduction_step(h, alive, mode)) {
    if (app->removed_edges.empty()) throw CertificationError("reduction step removed no edge");
    for (EdgeId e : app->removed_edges) {
      if (!alive[e]) throw CertificationError("reduction step removed a dead edge");
      alive[e] = false;
    }
    for (VertexId x : app->added_vertices) {
      if (!chosen.insert(x).second) throw CertificationError("vertex added to S twice");
    }
    cert.trace.push_back(std::move(*app));
  }
  cert.S.assign(chosen.begin(), chosen.end());

  if (auto problem = audit_fvs_certificate(h, cert); !problem.empty()) {
    throw CertificationError("certificate failed its own audit: " + problem);
  }
  return cert;
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, label] : kRuleNames) {
    if (label == name) return rule;
  }
  return std::nullopt;
}

bool RuleApplication::charge_ok(FvsMode mode) const {
  const std::size_t per_vertex = mode == FvsMode::Linear ? 3 : 2;
  return removed_edges.size() >= per_vertex * added_vertices.size();
}

Rational fvs_bound(FvsMode mode, std::size_t m) {
  return Rational{static_cast<std::int64_t>(m), mode == FvsMode::Linear ? 3 : 2};
}

std::optional<RuleApplication> reduction_step(const Hypergraph& h, const EdgeMask& alive, FvsMode mode) {
  if (is_acyclic(h, alive)) return std::nullopt;
  const EdgeMask cyclic = cyclic_edges(h, alive);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (alive[e] && !cyclic[e]) return make_application(Rule::NonCycleEdge, {e}, {});
  }
  return mode == FvsMode::Linear ? linear_step(h, alive) : general_step(h, alive);
}

std::optional<RuleApplication> step(const Hypergraph& h, FvsMode mode) {
  if (mode == FvsMode::Linear && !is_linear(h)) throw PreconditionError("hypergraph is not linear");
  return reduction_step(h, all_edges(h), mode);
}

FvsCertificate linear_fvs(const Hypergraph& h) {
  if (!is_linear(h)) throw PreconditionError("hypergraph is not linear");
  return run_reduction(h, FvsMode::Linear);
}

FvsCertificate general_fvs(const Hypergraph& h) { return run_reduction(h, FvsMode::General); }

bool verify_fvs(const Hypergraph& h, std::span<const VertexId> S) {
  return is_acyclic(h, edges_avoiding(h, S));
}

std::string audit_fvs_certificate(const Hypergraph& h, const FvsCertificate& cert) {
  const std::size_t n = h.num_vertices();
  for (VertexId x : cert.S) {
    if (x == 0 || x > n) return "S contains vertex " + std::to_string(x) + " outside 1.." + std::to_string(n);
  }
  if (!std::is_sorted(cert.S.begin(), cert.S.end()) ||
      std::adjacent_find(cert.S.begin(), cert.S.end()) != cert.S.end()) {
    return "S is not a strictly increasing vertex list";
  }
  if (cert.m0 != h.num_edges()) return "m0 does not match the instance";
  if (!(cert.bound == fvs_bound(cert.mode, cert.m0))) return "bound does not match m0";
  if (static_cast<std::int64_t>(cert.S.size()) > cert.bound.floor()) {
    return "|S| = " + std::to_string(cert.S.size()) + " exceeds floor(" + cert.bound.str() + ")";
  }

  std::vector<bool> removed(h.num_edges(), false);
  std::vector<VertexId> added;
  for (const RuleApplication& app : cert.trace) {
    const bool general_rule = app.rule == Rule::GeneralDegree2Plus;
    if (app.rule != Rule::NonCycleEdge && general_rule != (cert.mode == FvsMode::General)) {
      return std::string(rule_name(app.rule)) + " does not belong to this mode";
    }
    if (!app.charge_ok(cert.mode)) return std::string(rule_name(app.rule)) + " step does not pay for its vertices";
    if (app.rule == Rule::NonCycleEdge && !app.added_vertices.empty()) return "NonCycleEdge step adds vertices";
    for (EdgeId e : app.removed_edges) {
      if (e >= h.num_edges()) return "trace removes unknown edge " + std::to_string(e);
      if (removed[e]) return "trace removes edge " + std::to_string(e) + " twice";
      removed[e] = true;
    }
    for (VertexId x : app.added_vertices) {
      if (x == 0 || x > n) return "trace adds unknown vertex " + std::to_string(x);
      added.push_back(x);
    }
  }
  std::sort(added.begin(), added.end());
  if (added != cert.S) return "vertices added by the trace differ from S";
  if (!verify_fvs(h, cert.S)) return "H minus S still has a cycle";
  return {};
}

}  // namespace hyperfvs
