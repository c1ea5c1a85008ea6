#ifndef HYPERFVS_ORACLE_HPP
#define HYPERFVS_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperfvs/hypergraph.hpp"

namespace hyperfvs {

/// An exhaustive computation was refused because the instance is too large.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  /// exact_fes needs m <= max_edges; exact_fvs needs m <= max_edges or n <= max_vertices.
  std::size_t max_edges = 16;
  std::size_t max_vertices = 24;

  /// Defaults, with max_edges overridden by HYPERFVS_ORACLE_LIMIT when set.
  static OracleLimits from_environment();
};

struct ExactResult {
  std::size_t size = 0;
  std::vector<std::uint32_t> witness;  // vertices (FVS) or edge ids (FES), ascending
  std::uint64_t explored = 0;          // candidate sets tested
};

/// Minimum FVS by size-ascending exhaustive search. Only vertices lying in at
/// least two cycle edges are candidates; any optimum can be rewritten to use
/// only those. Within a size the lexicographically first verified set wins.
ExactResult exact_fvs(const Hypergraph& h, const OracleLimits& limits = {});

/// Minimum FES by size-ascending exhaustive search over cycle edges.
ExactResult exact_fes(const Hypergraph& h, const OracleLimits& limits = {});

/// tau_c <= tau'_c, computed with both oracles.
bool fes_vs_fvs_check(const Hypergraph& h, const OracleLimits& limits = {});

/// Evaluates (2 tau_c == m) <=> (every component with an edge is a 2-cycle).
/// Returns whether that biconditional holds on h.
bool check_half_equality(const Hypergraph& h, const OracleLimits& limits = {});

// ---------------------------------------------------------------------------
// Isomorphism classes

/// Canonical representative of h's isomorphism class: isomorphic inputs give
/// identical results. Vertices are relabelled; isolated vertices are kept and
/// numbered last. Throws LimitExceeded when the labelling search would be too large.
Hypergraph canonical_form(const Hypergraph& h);

struct EnumerationStats {
  std::uint64_t generated = 0;  // extensions produced at the final level
  std::uint64_t classes = 0;    // after dedup
};

/// All connected linear 3-uniform hypergraphs with exactly m edges, no
/// isolated vertices and at most n_max vertices, one canonical representative
/// per isomorphism class, ordered by (n, serialized edge list).
/// Requires m <= 6 and n_max <= 14.
std::vector<Hypergraph> enumerate_linear(std::size_t m, std::size_t n_max, EnumerationStats* stats = nullptr);

struct ExtremalReport {
  std::size_t m = 0;
  std::size_t n_max = 0;
  std::vector<Hypergraph> found;  // linear, tau_c == m / 3
  std::size_t max_degree_seen = 0;
  std::vector<std::size_t> degree_violations;  // indices into found with max degree > 3
  EnumerationStats counts;
};

/// Filters enumerate_linear(m, n_max) by exact tau_c == m / 3. m must be 3 or 6.
ExtremalReport search_extremal(std::size_t m, std::size_t n_max, const OracleLimits& limits = {});

/// Report text: a header comment, then one block per hypergraph preceded by
/// `# tau=<v> m=<m> maxdeg=<d>`.
std::string format_extremal_report(const ExtremalReport& report);

}  // namespace hyperfvs

#endif  // HYPERFVS_ORACLE_HPP
