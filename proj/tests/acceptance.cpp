// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hyperfvs/cycles.hpp"
#include "hyperfvs/fes.hpp"
#include "hyperfvs/fvs.hpp"
#include "hyperfvs/gen.hpp"
#include "hyperfvs/hypergraph.hpp"
#include "hyperfvs/oracle.hpp"
#include "hyperfvs/suite.hpp"

using namespace hyperfvs;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::string first_failure;

  void fail(const std::string& instance, const std::string& what) {
    if (pass) first_failure = instance + ": " + what;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail("exception", e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %d %s (checked=%zu, %.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, o.checked, secs,
              o.pass ? "" : " first failure: ", o.first_failure.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::vector<SuiteInstance> of_family(const std::vector<SuiteInstance>& all, std::initializer_list<Family> families) {
  std::vector<SuiteInstance> out;
  for (const auto& inst : all) {
    for (Family f : families) {
      if (inst.family == f) out.push_back(inst);
    }
  }
  return out;
}

std::vector<SuiteInstance> enumerated(std::size_t max_m) {
  std::vector<SuiteInstance> out;
  for (std::size_t m = 1; m <= max_m; ++m) {
    auto all = enumerate_linear(m, 2 * m + 1);
    for (std::size_t i = 0; i < all.size(); ++i) {
      out.push_back({"enumerated-m" + std::to_string(m) + "-" + std::to_string(i), Family::Enumerated, all[i]});
    }
  }
  return out;
}

bool oracle_sized(const Hypergraph& h, const OracleLimits& limits) { return h.num_edges() <= limits.max_edges; }

}  // namespace

int main() {
  const SuiteConfig config;  // 500 random linear, 500 random 3-uniform, fixed seed
  const OracleLimits limits;
  const auto all = suite_instances(config);
  const auto linear_set = of_family(all, {Family::RandomLinear, Family::LooseCycle});
  const auto general_set = of_family(all, {Family::RandomUniform, Family::TwoCycleUnion});

  report(1, "linear_fvs verifies with |S| <= floor(m/3) on random linear and loose cycles", [&] {
    Outcome o;
    std::size_t random_count = 0;
    for (const auto& inst : linear_set) {
      const Hypergraph& h = inst.h;
      if (inst.family == Family::RandomLinear) {
        ++random_count;
        if (h.num_vertices() > 20 || h.num_edges() > 12) o.fail(inst.name, "outside n <= 20, m <= 12");
      }
      auto cert = linear_fvs(h);
      ++o.checked;
      if (!verify_fvs(h, cert.S)) o.fail(inst.name, "H - S has a cycle");
      if (cert.S.size() > h.num_edges() / 3) o.fail(inst.name, "|S| > floor(m/3)");
    }
    if (random_count != 500) o.fail("suite", "expected 500 random linear instances");
    return o;
  });

  const auto small = enumerated(5);
  report(2, "exact tau_c <= floor(m/3) on every connected linear instance with m <= 5", [&] {
    Outcome o;
    for (const auto& inst : small) {
      ++o.checked;
      if (exact_fvs(inst.h, limits).size > inst.h.num_edges() / 3) o.fail(inst.name, "tau_c > floor(m/3)");
    }
    if (small.empty()) o.fail("enumeration", "no instances");
    return o;
  });

  report(3, "general_fvs verifies with |S| <= floor(m/2); 2 tau_c = m iff all components are 2-cycles", [&] {
    Outcome o;
    std::size_t random_count = 0;
    for (const auto& inst : general_set) {
      const Hypergraph& h = inst.h;
      random_count += inst.family == Family::RandomUniform;
      if (h.num_edges() > 8 && inst.family == Family::RandomUniform) o.fail(inst.name, "m > 8");
      auto cert = general_fvs(h);
      ++o.checked;
      if (!verify_fvs(h, cert.S)) o.fail(inst.name, "H - S has a cycle");
      if (cert.S.size() > h.num_edges() / 2) o.fail(inst.name, "|S| > floor(m/2)");
      if (!check_half_equality(h, limits)) o.fail(inst.name, "half equality characterisation fails");
    }
    if (random_count != 500) o.fail("suite", "expected 500 random 3-uniform instances");
    return o;
  });

  report(4, "greedy hyperforest: acyclic remainder, hypertree components, 2|A| = 2m-n+k, |A| <= 2m-n+p", [&] {
    Outcome o;
    auto check = [&](const SuiteInstance& inst) {
      const Hypergraph& h = inst.h;
      auto cert = greedy_hyperforest(h);
      ++o.checked;
      if (!verify_fes(h, cert.A)) o.fail(inst.name, "H - A has a cycle");
      const Hypergraph rest = delete_edges(h, cert.A);
      const auto parts = components(rest);
      const auto stats = component_stats(rest, parts);
      for (const auto& s : stats) {
        if (s.vertices != 2 * s.edges + 1) o.fail(inst.name, "residual component with n_i != 2 m_i + 1");
      }
      const auto n = static_cast<std::int64_t>(h.num_vertices());
      const auto m = static_cast<std::int64_t>(h.num_edges());
      const auto a = static_cast<std::int64_t>(cert.A.size());
      const auto k = static_cast<std::int64_t>(parts.count);
      const auto p = static_cast<std::int64_t>(components(h).count);
      if (2 * a != 2 * m - n + k) o.fail(inst.name, "2|A| != 2m - n + k");
      if (a > 2 * m - n + p) o.fail(inst.name, "|A| > 2m - n + p");
    };
    for (const auto& inst : all) check(inst);
    for (const auto& inst : small) check(inst);
    return o;
  });

  report(5, "connected instances satisfy n <= 2m+1 with equality iff hypertree; random hypertrees are tight", [&] {
    Outcome o;
    auto check = [&](const SuiteInstance& inst) {
      const Hypergraph& h = inst.h;
      if (components(h).count != 1) return;
      ++o.checked;
      const std::size_t n = h.num_vertices(), m = h.num_edges();
      if (n > 2 * m + 1) o.fail(inst.name, "n > 2m + 1");
      if ((n == 2 * m + 1) != is_hypertree(h)) o.fail(inst.name, "equality disagrees with hypertree test");
    };
    for (const auto& inst : all) check(inst);
    for (const auto& inst : small) check(inst);
    for (std::size_t m = 0; m <= 20; ++m) {
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Hypergraph t = random_hypertree(m, seed);
        ++o.checked;
        if (t.num_vertices() != 2 * m + 1 || !is_hypertree(t)) o.fail("random-hypertree", "not tight");
      }
    }
    return o;
  });

  report(6, "exact tau_c <= exact tau'_c on every oracle-sized instance", [&] {
    Outcome o;
    auto check = [&](const SuiteInstance& inst) {
      if (!oracle_sized(inst.h, limits)) return;
      ++o.checked;
      if (exact_fvs(inst.h, limits).size > exact_fes(inst.h, limits).size) o.fail(inst.name, "tau_c > tau'_c");
    };
    for (const auto& inst : all) check(inst);
    for (const auto& inst : small) check(inst);
    return o;
  });

  report(7, "spot values tau_c(Fano) = 2, tau'_c(loose triangle) = 1; constructions never beat the oracles", [&] {
    Outcome o;
    if (exact_fvs(fano(), limits).size != 2) o.fail("fano", "exact tau_c != 2");
    if (exact_fes(loose_cycle(3), limits).size != 1) o.fail("loose-cycle-3", "exact tau'_c != 1");
    auto check = [&](const SuiteInstance& inst) {
      const Hypergraph& h = inst.h;
      if (!oracle_sized(h, limits)) return;
      ++o.checked;
      const std::size_t tau = exact_fvs(h, limits).size;
      const std::size_t tau_e = exact_fes(h, limits).size;
      if (is_linear(h)) {
        auto cert = linear_fvs(h);
        if (!audit_fvs_certificate(h, cert).empty()) o.fail(inst.name, "linear certificate rejected");
        if (cert.S.size() < tau) o.fail(inst.name, "linear_fvs beats the oracle");
      }
      auto general = general_fvs(h);
      if (!audit_fvs_certificate(h, general).empty()) o.fail(inst.name, "general certificate rejected");
      if (general.S.size() < tau) o.fail(inst.name, "general_fvs beats the oracle");
      auto fes = greedy_hyperforest(h);
      if (!audit_fes_certificate(h, fes).empty()) o.fail(inst.name, "fes certificate rejected");
      if (fes.A.size() < tau_e) o.fail(inst.name, "greedy beats the oracle");
    };
    for (const auto& inst : all) check(inst);
    for (const auto& inst : small) check(inst);
    return o;
  });

  report(8, "extremal search: m=3 finds the loose triangle; every extremal instance for m in {3,6} has max degree <= 3",
         [&] {
           Outcome o;
           const auto start = std::chrono::steady_clock::now();
           for (std::size_t m : {3u, 6u}) {
             auto r = search_extremal(m, 12, limits);
             o.checked += r.found.size();
             for (const auto& h : r.found) {
               if (max_degree(h) > 3) o.fail("m=" + std::to_string(m), "maximum degree above 3");
               if (3 * exact_fvs(h, limits).size != m) o.fail("m=" + std::to_string(m), "not extremal");
             }
             if (!r.degree_violations.empty()) o.fail("m=" + std::to_string(m), "report lists degree violations");
             if (m == 3) {
               const Hypergraph triangle = canonical_form(loose_cycle(3));
               if (std::find(r.found.begin(), r.found.end(), triangle) == r.found.end()) {
                 o.fail("m=3", "loose triangle not found");
               }
             }
           }
           if (std::chrono::steady_clock::now() - start > std::chrono::minutes(5)) o.fail("search", "over 5 minutes");
           return o;
         });

  report(9, "suite summary is byte-identical across two runs with the same seed", [&] {
    Outcome o;
    const std::string first = format_summary(config, run_suite(config));
    const std::string second = format_summary(config, run_suite(config));
    o.checked = 2;
    if (first != second) o.fail("suite", "summaries differ");
    if (first.find("violations=0\n") == std::string::npos) o.fail("suite", "suite reported violations");
    return o;
  });

  return failures == 0 ? 0 : 1;
}
