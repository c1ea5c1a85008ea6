#ifndef HYPERFVS_FES_HPP
#define HYPERFVS_FES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperfvs/hypergraph.hpp"

namespace hyperfvs {

struct FesCertificate {
  std::vector<EdgeId> A;     // the feedback edge set, ascending
  std::vector<EdgeId> kept;  // the spanning hyperforest, ascending
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;  // components of H
  std::size_t k = 0;  // components of H minus A
  std::vector<ComponentStats> per_component;  // of H minus A

  /// 2m - n + p
  std::int64_t bound() const {
    return 2 * static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(p);
  }
};

/// Scans edges in id order and keeps an edge iff its three vertices lie in
/// three different components of the edges kept so far. The rejected edges
/// form A. Throws CertificationError if the result violates any certificate
/// invariant.
FesCertificate greedy_hyperforest(const Hypergraph& h);

/// True iff H minus A has no cycle. Throws std::out_of_range for a bad id.
bool verify_fes(const Hypergraph& h, std::span<const EdgeId> A);

/// Checks every invariant of a certificate against its instance. Empty string
/// when consistent.
std::string audit_fes_certificate(const Hypergraph& h, const FesCertificate& cert);

}  // namespace hyperfvs

#endif  // HYPERFVS_FES_HPP
