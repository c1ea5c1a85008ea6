#ifndef HYPERFVS_GEN_HPP
#define HYPERFVS_GEN_HPP

#include <cstdint>
#include <stdexcept>

#include "hyperfvs/hypergraph.hpp"

namespace hyperfvs {

/// SplitMix64. Implemented here rather than taken from <random> so that the
/// stream is identical across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// random_linear ran out of draws; retry with another seed.
class RejectionBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// e_i = {v_i, u_i, v_{i+1}} with v_i = 2i-1, u_i = 2i and v_{k+1} = v_1. k >= 3.
Hypergraph loose_cycle(std::size_t k);

/// c disjoint 2-cycles {4i+1, 4i+2, 4i+3}, {4i+1, 4i+2, 4i+4}. c >= 1.
Hypergraph two_cycle_union(std::size_t c);

/// Each new edge takes one uniformly chosen existing vertex and two fresh ones.
Hypergraph random_hypertree(std::size_t m, std::uint64_t seed);

/// Rejection sampling of triples whose pairs are all still uncovered, at most
/// 1000 m draws. Needs m <= n(n-1)/6.
Hypergraph random_linear(std::size_t n, std::size_t m, std::uint64_t seed);

/// m distinct triples chosen uniformly without replacement. Needs m <= C(n,3).
Hypergraph random_3uniform(std::size_t n, std::size_t m, std::uint64_t seed);

/// The Fano plane on 1..7.
Hypergraph fano();

}  // namespace hyperfvs

#endif  // HYPERFVS_GEN_HPP
