#include "hyperfvs/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>

#include "hyperfvs/cycles.hpp"

namespace hyperfvs {

namespace {

// Calls visit(indices) for every size-k subset of 0..n-1 in lexicographic
// order until visit returns true. Returns whether some visit returned true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* env = std::getenv("HYPERFVS_ORACLE_LIMIT")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("HYPERFVS_ORACLE_LIMIT is not a non-negative integer");
    }
    limits.max_edges = value;
  }
  return limits;
}

ExactResult exact_fvs(const Hypergraph& h, const OracleLimits& limits) {
  if (h.num_edges() > limits.max_edges && h.num_vertices() > limits.max_vertices) {
    throw LimitExceeded("exact FVS refused: m = " + std::to_string(h.num_edges()) + " > " +
                        std::to_string(limits.max_edges) + " and n = " + std::to_string(h.num_vertices()) +
                        " > " + std::to_string(limits.max_vertices));
  }
  const EdgeMask cyclic = cyclic_edges(h);
  std::vector<VertexId> candidates;
  for (VertexId v = 1; v <= h.num_vertices(); ++v) {
    auto inc = h.incident(v);
    auto on_cycle = std::count_if(inc.begin(), inc.end(), [&](EdgeId f) { return cyclic[f]; });
    if (on_cycle >= 2) candidates.push_back(v);
  }

  ExactResult result;
  for (std::size_t size = 0; size <= candidates.size(); ++size) {
    bool done = for_each_subset(candidates.size(), size, [&](const std::vector<std::size_t>& idx) {
      ++result.explored;
      EdgeMask alive = cyclic;
      for (std::size_t i : idx) {
        for (EdgeId f : h.incident(candidates[i])) alive[f] = false;
      }
      if (!is_acyclic(h, alive)) return false;
      result.size = size;
      for (std::size_t i : idx) result.witness.push_back(candidates[i]);
      return true;
    });
    if (done) return result;
  }
  throw std::logic_error("removing every candidate vertex left a cycle");
}

ExactResult exact_fes(const Hypergraph& h, const OracleLimits& limits) {
  if (h.num_edges() > limits.max_edges) {
    throw LimitExceeded("exact FES refused: m = " + std::to_string(h.num_edges()) + " > " +
                        std::to_string(limits.max_edges));
  }
  const EdgeMask cyclic = cyclic_edges(h);
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (cyclic[e]) candidates.push_back(e);
  }

  ExactResult result;
  for (std::size_t size = 0; size <= candidates.size(); ++size) {
    bool done = for_each_subset(candidates.size(), size, [&](const std::vector<std::size_t>& idx) {
      ++result.explored;
      EdgeMask alive = cyclic;
      for (std::size_t i : idx) alive[candidates[i]] = false;
      if (!is_acyclic(h, alive)) return false;
      result.size = size;
      for (std::size_t i : idx) result.witness.push_back(candidates[i]);
      return true;
    });
    if (done) return result;
  }
  throw std::logic_error("removing every cycle edge left a cycle");
}

bool fes_vs_fvs_check(const Hypergraph& h, const OracleLimits& limits) {
  return exact_fvs(h, limits).size <= exact_fes(h, limits).size;
}

bool check_half_equality(const Hypergraph& h, const OracleLimits& limits) {
  const std::size_t tau = exact_fvs(h, limits).size;
  const bool tight = 2 * tau == h.num_edges();

  auto parts = components(h);
  auto stats = component_stats(h, parts);
  bool all_two_cycles = true;
  for (std::size_t c = 0; c < parts.count; ++c) {
    if (stats[c].edges == 0) continue;  // isolated vertex
    if (!is_two_cycle_component(h, parts, c)) {
      all_two_cycles = false;
      break;
    }
  }
  return tight == all_two_cycles;
}

// ---------------------------------------------------------------------------

std::vector<Hypergraph> enumerate_linear(std::size_t m, std::size_t n_max, EnumerationStats* stats) {
  if (m == 0) throw std::invalid_argument("enumeration needs at least one edge");
  if (m > 6 || n_max > 14) {
    throw LimitExceeded("enumeration is limited to m <= 6 and n_max <= 14");
  }
  auto by_size_then_edges = [](const Hypergraph& a, const Hypergraph& b) {
    if (a.num_vertices() != b.num_vertices()) return a.num_vertices() < b.num_vertices();
    return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
  };

  std::vector<Hypergraph> level;
  if (n_max >= 3) level.push_back(Hypergraph(3, {Edge::make(1, 2, 3)}));
  std::uint64_t generated = level.size();

  for (std::size_t edges = 1; edges < m; ++edges) {
    std::map<std::string, Hypergraph> next;
    generated = 0;
    for (const Hypergraph& h : level) {
      const std::size_t n = h.num_vertices();
      std::vector<std::vector<bool>> together(n + 1, std::vector<bool>(n + 1, false));
      for (const Edge& e : h.edges()) {
        for (VertexId a : e.v) {
          for (VertexId b : e.v) together[a][b] = true;
        }
      }
      for (std::size_t reuse = 1; reuse <= 3; ++reuse) {
        const std::size_t fresh = 3 - reuse;
        if (n + fresh > n_max) continue;
        for_each_subset(n, reuse, [&](const std::vector<std::size_t>& idx) {
          std::vector<VertexId> picked;
          for (std::size_t i : idx) picked.push_back(static_cast<VertexId>(i + 1));
          for (std::size_t i = 0; i < picked.size(); ++i) {
            for (std::size_t j = i + 1; j < picked.size(); ++j) {
              if (together[picked[i]][picked[j]]) return false;
            }
          }
          for (std::size_t f = 1; f <= fresh; ++f) picked.push_back(static_cast<VertexId>(n + f));
          std::vector<Edge> es(h.edges().begin(), h.edges().end());
          es.push_back(Edge::make(picked[0], picked[1], picked[2]));
          Hypergraph canon = canonical_form(Hypergraph(n + fresh, std::move(es)));
          ++generated;
          next.try_emplace(serialize(canon), std::move(canon));
          return false;
        });
      }
    }
    level.clear();
    for (auto& [key, h] : next) level.push_back(std::move(h));
  }

  std::sort(level.begin(), level.end(), by_size_then_edges);
  if (stats) {
    stats->generated = generated;
    stats->classes = level.size();
  }
  return level;
}

ExtremalReport search_extremal(std::size_t m, std::size_t n_max, const OracleLimits& limits) {
  if (m != 3 && m != 6) throw std::invalid_argument("extremal search supports m = 3 or m = 6");
  ExtremalReport report;
  report.m = m;
  report.n_max = n_max;
  for (Hypergraph& h : enumerate_linear(m, n_max, &report.counts)) {
    if (3 * exact_fvs(h, limits).size != m) continue;
    const std::size_t d = max_degree(h);
    report.max_degree_seen = std::max(report.max_degree_seen, d);
    if (d > 3) report.degree_violations.push_back(report.found.size());
    report.found.push_back(std::move(h));
  }
  return report;
}

std::string format_extremal_report(const ExtremalReport& report) {
  std::string out = "# extremal search m=" + std::to_string(report.m) + " n_max=" + std::to_string(report.n_max) +
                    " generated=" + std::to_string(report.counts.generated) +
                    " classes=" + std::to_string(report.counts.classes) +
                    " found=" + std::to_string(report.found.size()) +
                    " max_degree=" + std::to_string(report.max_degree_seen) +
                    " degree_violations=" + std::to_string(report.degree_violations.size()) + "\n";
  out += "# connected linear representatives without isolated vertices, one per isomorphism class\n";
  for (const Hypergraph& h : report.found) {
    out += "# tau=" + std::to_string(report.m / 3) + " m=" + std::to_string(h.num_edges()) +
           " maxdeg=" + std::to_string(max_degree(h)) + "\n";
    out += serialize(h);
  }
  return out;
}

}  // namespace hyperfvs
