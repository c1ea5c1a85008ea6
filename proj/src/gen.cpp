#include "hyperfvs/gen.hpp"

#include <set>
#include <string>
#include <vector>

#include "hyperfvs/cycles.hpp"

namespace hyperfvs {

namespace {

std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

void self_check(bool ok, const char* family) {
  if (!ok) throw std::logic_error(std::string(family) + " generator broke its own contract");
}

}  // namespace

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Hypergraph loose_cycle(std::size_t k) {
  if (k < 3) throw std::invalid_argument("loose cycle needs k >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= k; ++i) {
    auto v = static_cast<VertexId>(2 * i - 1);
    auto next = static_cast<VertexId>(i == k ? 1 : 2 * i + 1);
    edges.push_back(Edge::make(v, v + 1, next));
  }
  Hypergraph h(2 * k, std::move(edges));
  self_check(is_linear(h), "loose_cycle");
  return h;
}

Hypergraph two_cycle_union(std::size_t c) {
  if (c < 1) throw std::invalid_argument("two_cycle_union needs c >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c; ++i) {
    auto b = static_cast<VertexId>(4 * i);
    edges.push_back(Edge::make(b + 1, b + 2, b + 3));
    edges.push_back(Edge::make(b + 1, b + 2, b + 4));
  }
  return Hypergraph(4 * c, std::move(edges));
}

Hypergraph random_hypertree(std::size_t m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    auto anchor = static_cast<VertexId>(1 + rng.below(n));
    edges.push_back(Edge::make(anchor, static_cast<VertexId>(n + 1), static_cast<VertexId>(n + 2)));
    n += 2;
  }
  Hypergraph h(n, std::move(edges));
  self_check(is_hypertree(h), "random_hypertree");
  return h;
}

Hypergraph random_linear(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > 0 && (n < 3 || 6 * m > n * (n - 1))) {
    throw std::invalid_argument("random_linear: m = " + std::to_string(m) + " exceeds n(n-1)/6 for n = " +
                                std::to_string(n));
  }
  SplitMix64 rng(seed);
  std::vector<std::vector<bool>> covered(n + 1, std::vector<bool>(n + 1, false));
  std::vector<Edge> edges;
  const std::uint64_t budget = 1000 * static_cast<std::uint64_t>(m);
  for (std::uint64_t draw = 0; edges.size() < m; ++draw) {
    if (draw == budget) {
      throw RejectionBudgetExhausted("random_linear: no linear instance after " + std::to_string(budget) +
                                     " draws (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
    }
    auto a = static_cast<VertexId>(1 + rng.below(n));
    auto b = static_cast<VertexId>(1 + rng.below(n));
    auto c = static_cast<VertexId>(1 + rng.below(n));
    if (a == b || b == c || a == c) continue;
    if (covered[a][b] || covered[a][c] || covered[b][c]) continue;
    for (VertexId x : {a, b, c}) {
      for (VertexId y : {a, b, c}) covered[x][y] = true;
    }
    edges.push_back(Edge::make(a, b, c));
  }
  Hypergraph h(n, std::move(edges));
  self_check(is_linear(h), "random_linear");
  return h;
}

Hypergraph random_3uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = choose3(n);
  if (m > total) {
    throw std::invalid_argument("random_3uniform: m = " + std::to_string(m) + " exceeds C(n,3) = " +
                                std::to_string(total));
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  if (total <= 200'000) {
    std::vector<Edge> all;
    all.reserve(total);
    for (VertexId a = 1; a <= n; ++a) {
      for (VertexId b = a + 1; b <= n; ++b) {
        for (VertexId c = b + 1; c <= n; ++c) all.push_back(Edge{{a, b, c}});
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t j = i + rng.below(all.size() - i);
      std::swap(all[i], all[j]);
      edges.push_back(all[i]);
    }
  } else {
    std::set<Edge> chosen;
    while (chosen.size() < m) {
      auto a = static_cast<VertexId>(1 + rng.below(n));
      auto b = static_cast<VertexId>(1 + rng.below(n));
      auto c = static_cast<VertexId>(1 + rng.below(n));
      if (a == b || b == c || a == c) continue;
      Edge e = Edge::make(a, b, c);
      if (chosen.insert(e).second) edges.push_back(e);
    }
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph fano() {
  return Hypergraph(7, {Edge::make(1, 2, 3), Edge::make(1, 4, 5), Edge::make(1, 6, 7), Edge::make(2, 4, 6),
                        Edge::make(2, 5, 7), Edge::make(3, 4, 7), Edge::make(3, 5, 6)});
}

}  // namespace hyperfvs
