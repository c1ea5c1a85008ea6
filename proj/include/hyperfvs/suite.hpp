#ifndef HYPERFVS_SUITE_HPP
#define HYPERFVS_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperfvs/hypergraph.hpp"
#include "hyperfvs/oracle.hpp"

namespace hyperfvs {

struct SuiteConfig {
  std::uint64_t seed = 1;

  std::size_t random_linear_count = 500;
  std::size_t random_linear_max_n = 20;
  std::size_t random_linear_max_m = 12;

  std::size_t random_uniform_count = 500;
  std::size_t random_uniform_max_n = 10;
  std::size_t random_uniform_max_m = 8;

  std::size_t loose_cycle_max_k = 12;
  std::size_t two_cycle_max_c = 3;
  std::size_t hypertree_max_m = 20;
  std::size_t enumerate_max_m = 5;

  std::vector<std::string> extra_files;  // parsed in order, appended last
  OracleLimits limits;
  unsigned jobs = 1;
  bool timing = false;  // adds an elapsed_ms column, which makes output run-dependent
};

enum class Family { Fano, LooseCycle, TwoCycleUnion, RandomHypertree, RandomLinear, RandomUniform, Enumerated, File };

struct SuiteInstance {
  std::string name;
  Family family = Family::File;
  Hypergraph h;
};

/// The instance list for a configuration, in report order. Deterministic in
/// the configuration; extra files are parsed here (ParseError propagates).
std::vector<SuiteInstance> suite_instances(const SuiteConfig& config);

struct RunReport {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::string algorithm;  // fvs-linear, fvs-general, fes
  std::int64_t bound = 0;
  std::size_t achieved = 0;
  std::optional<std::size_t> exact;
  bool verified = false;
  double elapsed_ms = 0;
};

struct Violation {
  std::string instance;
  std::string what;
  std::string serialized;  // the offending hypergraph, for reproduction
};

struct InstanceOutcome {
  std::vector<RunReport> rows;
  std::vector<Violation> violations;
};

/// Every property check for one instance: constructive bounds and
/// certificates, oracle comparisons within limits, the n_i <= 2 m_i + 1 bound,
/// and the half-bound equality characterisation.
InstanceOutcome check_instance(const SuiteInstance& inst, const OracleLimits& limits, bool timing = false);

struct SuiteResult {
  std::vector<RunReport> rows;
  std::vector<Violation> violations;
  std::size_t instances = 0;

  bool ok() const { return violations.empty(); }
};

SuiteResult run_suite(const SuiteConfig& config);

/// Tab separated table, one row per (instance, algorithm), then an aggregate
/// comment line.
std::string format_summary(const SuiteConfig& config, const SuiteResult& result);
std::string format_row(const RunReport& row, bool timing);

}  // namespace hyperfvs

#endif  // HYPERFVS_SUITE_HPP
