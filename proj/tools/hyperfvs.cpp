// hyperfvs: certified feedback vertex/edge sets for 3-uniform hypergraphs.
//
// Exit codes:
//   0  success
//   1  verification failed / property violation
//   2  input or certificate does not parse
//   3  precondition violated (e.g. fvs-linear on a non-linear hypergraph), bad usage
//   4  internal certification failure
//   5  oracle size limit exceeded
//   6  certificate belongs to a different instance

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperfvs/certificate.hpp"
#include "hyperfvs/fes.hpp"
#include "hyperfvs/fvs.hpp"
#include "hyperfvs/gen.hpp"
#include "hyperfvs/hypergraph.hpp"
#include "hyperfvs/oracle.hpp"
#include "hyperfvs/suite.hpp"

using namespace hyperfvs;

namespace {

enum Exit : int {
  kOk = 0,
  kFailed = 1,
  kParse = 2,
  kPrecondition = 3,
  kCertification = 4,
  kLimit = 5,
  kMismatch = 6,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Hypergraph load(const std::string& path) { return parse_hypergraph(read_file(path)); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

OracleLimits limits_from(std::optional<std::size_t> flag) {
  OracleLimits limits = OracleLimits::from_environment();
  if (flag) limits.max_edges = *flag;
  return limits;
}

const char* kReportHeader = "instance\tn\tm\tp\talgorithm\tbound\tachieved\texact\tverified\n";

int cmd_solve(const std::string& input, const std::string& mode, std::string out_path) {
  Hypergraph h = load(input);
  if (out_path.empty()) out_path = input + ".cert";

  RunReport row;
  row.instance = input;
  row.n = h.num_vertices();
  row.m = h.num_edges();
  row.p = components(h).count;
  row.algorithm = mode;

  std::string cert_text;
  if (mode == "fes") {
    FesCertificate cert = greedy_hyperforest(h);
    row.bound = cert.bound();
    row.achieved = cert.A.size();
    row.verified = audit_fes_certificate(h, cert).empty();
    cert_text = write_certificate(h, cert);
  } else {
    const FvsMode fvs_mode = mode == "fvs-linear" ? FvsMode::Linear : FvsMode::General;
    FvsCertificate cert = fvs_mode == FvsMode::Linear ? linear_fvs(h) : general_fvs(h);
    row.bound = cert.bound.floor();
    row.achieved = cert.S.size();
    row.verified = audit_fvs_certificate(h, cert).empty();
    cert_text = write_certificate(h, cert);
  }
  if (!row.verified) {
    std::cerr << "certificate failed verification; nothing written\n";
    return kCertification;
  }
  emit(cert_text, out_path);
  std::cout << kReportHeader << format_row(row, false) << "\n";
  return kOk;
}

int cmd_exact(const std::string& input, const std::string& kind, std::optional<std::size_t> limit) {
  Hypergraph h = load(input);
  const OracleLimits limits = limits_from(limit);
  ExactResult r = kind == "fvs" ? exact_fvs(h, limits) : exact_fes(h, limits);
  std::cout << "kind " << kind << "\nsize " << r.size << "\nwitness";
  for (auto x : r.witness) std::cout << ' ' << x;
  std::cout << "\nexplored " << r.explored << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& cert_path) {
  Hypergraph h = load(input);
  CertificateFile file = parse_certificate(read_file(cert_path));
  if (file.instance != instance_hash_hex(h)) {
    std::cerr << "certificate is for instance " << file.instance << ", input is " << instance_hash_hex(h) << "\n";
    return kMismatch;
  }
  if (auto problem = audit_certificate(h, file); !problem.empty()) {
    std::cerr << "invalid certificate: " << problem << "\n";
    return kFailed;
  }
  std::cout << "ok\n";
  return kOk;
}

int cmd_gen(const std::string& family, const std::vector<std::size_t>& params, std::uint64_t seed,
            const std::string& out_path) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw UsageError(family + " takes " + std::to_string(count) + " numeric parameter(s)");
    }
  };
  Hypergraph h;
  if (family == "loose-cycle") {
    need(1);
    h = loose_cycle(params[0]);
  } else if (family == "two-cycle-union") {
    need(1);
    h = two_cycle_union(params[0]);
  } else if (family == "random-hypertree") {
    need(1);
    h = random_hypertree(params[0], seed);
  } else if (family == "random-linear") {
    need(2);
    h = random_linear(params[0], params[1], seed);
  } else if (family == "random-3uniform") {
    need(2);
    h = random_3uniform(params[0], params[1], seed);
  } else if (family == "fano") {
    need(0);
    h = fano();
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  emit(serialize(h), out_path);
  return kOk;
}

int cmd_suite(SuiteConfig config, const std::string& out_path) {
  SuiteResult result = run_suite(config);
  emit(format_summary(config, result), out_path);
  for (const auto& v : result.violations) {
    std::cerr << "# violation " << v.instance << ": " << v.what << "\n" << v.serialized;
  }
  return result.ok() ? kOk : kFailed;
}

int cmd_search(std::size_t m, std::size_t n_max, std::optional<std::size_t> limit, const std::string& out_path) {
  ExtremalReport report = search_extremal(m, n_max, limits_from(limit));
  emit(format_extremal_report(report), out_path);
  if (!report.degree_violations.empty()) {
    std::cerr << report.degree_violations.size() << " extremal instance(s) with maximum degree above 3\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified feedback vertex and edge sets for 3-uniform hypergraphs"};
  app.require_subcommand(1);

  std::string input;
  std::string cert_path;
  std::string out_path;
  std::string mode;
  std::string kind;
  std::string family;
  std::vector<std::size_t> params;
  std::uint64_t seed = 1;
  std::optional<std::size_t> limit;

  auto* solve = app.add_subcommand("solve", "Construct and certify an FVS or FES");
  solve->add_option("input", input, "Hypergraph file")->required();
  solve->add_option("--mode", mode, "fvs-linear | fvs-general | fes")
      ->required()
      ->check(CLI::IsMember({"fvs-linear", "fvs-general", "fes"}));
  solve->add_option("--out", out_path, "Certificate path (default <input>.cert)");

  auto* exact = app.add_subcommand("exact", "Exact minimum FVS or FES by exhaustive search");
  exact->add_option("input", input, "Hypergraph file")->required();
  exact->add_option("--kind", kind, "fvs | fes")->required()->check(CLI::IsMember({"fvs", "fes"}));
  exact->add_option("--limit", limit, "Oracle edge-count guard");

  auto* verify = app.add_subcommand("verify", "Check a certificate against its instance");
  verify->add_option("input", input, "Hypergraph file")->required();
  verify->add_option("certificate", cert_path, "Certificate file")->required();

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", family,
                  "loose-cycle K | two-cycle-union C | random-hypertree M | random-linear N M | "
                  "random-3uniform N M | fano")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  SuiteConfig config;
  std::size_t count = config.random_linear_count;
  auto* suite = app.add_subcommand("suite", "Run the property battery over generated instances");
  suite->add_option("--seed", seed, "PRNG seed");
  suite->add_option("--count", count, "Random instances per random family")->capture_default_str();
  suite->add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
  suite->add_option("--extra", config.extra_files, "Additional instance files");
  suite->add_option("--limit", limit, "Oracle edge-count guard");
  suite->add_flag("--timing", config.timing, "Add an elapsed_ms column (output no longer reproducible)");
  suite->add_option("--out", out_path, "Summary path (default stdout)");

  std::size_t extremal_m = 3;
  std::size_t n_max = 12;
  auto* search = app.add_subcommand("search-extremal", "Enumerate linear hypergraphs with tau_c = m/3");
  search->add_option("--m", extremal_m, "Edge count (3 or 6)")->check(CLI::IsMember({3, 6}))->capture_default_str();
  search->add_option("--n-max", n_max, "Vertex budget")->capture_default_str();
  search->add_option("--limit", limit, "Oracle edge-count guard");
  search->add_option("--out", out_path, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    if (*solve) return cmd_solve(input, mode, out_path);
    if (*exact) return cmd_exact(input, kind, limit);
    if (*verify) return cmd_verify(input, cert_path);
    if (*gen) return cmd_gen(family, params, seed, out_path);
    if (*suite) {
      config.seed = seed;
      config.random_linear_count = count;
      config.random_uniform_count = count;
      config.limits = limits_from(limit);
      return cmd_suite(config, out_path);
    }
    if (*search) return cmd_search(extremal_m, n_max, limit, out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const CertificateFormatError& e) {
    std::cerr << "certificate error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const CertificationError& e) {
    std::cerr << "internal certification failure: " << e.what() << "\n";
    return kCertification;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
