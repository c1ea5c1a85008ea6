#ifndef HYPERFVS_FVS_HPP
#define HYPERFVS_FVS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfvs/cycles.hpp"
#include "hyperfvs/hypergraph.hpp"

namespace hyperfvs {

/// Input violates an operation's precondition (e.g. a non-linear hypergraph
/// handed to linear_fvs).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructed certificate failed its own check. Always a bug, never bad input.
class CertificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class FvsMode { Linear, General };

enum class Rule {
  NonCycleEdge,
  HighDegreeVertex,
  Triangle,
  PendantOnCycle,
  FourCycleShared,    // the two chords through u1 and u3 coincide
  FourCycleDisjoint,  // they do not
  CycleMod0,
  CycleMod1,
  CycleMod2,
  GeneralDegree2Plus,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

struct RuleApplication {
  Rule rule = Rule::NonCycleEdge;
  std::vector<EdgeId> removed_edges;     // ascending
  std::vector<VertexId> added_vertices;  // ascending

  /// removed >= 3 * added (linear) or removed >= 2 * added (general).
  bool charge_ok(FvsMode mode) const;
  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::int64_t floor() const { return num / den; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct FvsCertificate {
  FvsMode mode = FvsMode::Linear;
  std::vector<VertexId> S;  // ascending
  std::vector<RuleApplication> trace;
  std::size_t m0 = 0;
  Rational bound;  // m0/3 or m0/2
};

/// The bound a certificate of this mode must respect: m/3 or m/2.
Rational fvs_bound(FvsMode mode, std::size_t m);

/// One reduction step on the sub-hypergraph of `alive` edges.
///
/// Rules are tried in a fixed priority order and the first applicable one
/// fires; each rule's structural assumptions (maximum degree, regularity,
/// girth) are exactly what the earlier rules failing guarantees. Returns
/// nullopt iff the sub-hypergraph is acyclic.
std::optional<RuleApplication> reduction_step(const Hypergraph& h, const EdgeMask& alive, FvsMode mode);
std::optional<RuleApplication> step(const Hypergraph& h, FvsMode mode);

/// |S| <= floor(m/3) on linear input. Throws PreconditionError otherwise.
FvsCertificate linear_fvs(const Hypergraph& h);
/// |S| <= floor(m/2) on any input.
FvsCertificate general_fvs(const Hypergraph& h);

/// True iff H minus S (strong deletion) has no cycle. Throws std::out_of_range
/// for an id outside 1..n.
bool verify_fvs(const Hypergraph& h, std::span<const VertexId> S);

/// Full audit of a certificate against its instance: S is an FVS, the trace
/// only touches valid ids, removes each edge at most once, pays for every
/// added vertex, adds exactly S, and the bound arithmetic matches m.
/// Returns an empty string when consistent, otherwise a description.
std::string audit_fvs_certificate(const Hypergraph& h, const FvsCertificate& cert);

}  // namespace hyperfvs

#endif  // HYPERFVS_FVS_HPP
