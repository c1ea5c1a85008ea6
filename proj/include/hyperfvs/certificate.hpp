#ifndef HYPERFVS_CERTIFICATE_HPP
#define HYPERFVS_CERTIFICATE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "hyperfvs/fes.hpp"
#include "hyperfvs/fvs.hpp"
#include "hyperfvs/hypergraph.hpp"

namespace hyperfvs {

// Certificate files are line oriented:
//
//   # hyperfvs certificate
//   kind fvs-linear | fvs-general | fes
//   instance <16 hex digits>          instance_hash of the solved hypergraph
//   [S] / [A] [KEPT]                  space separated ids, possibly no line
//   [TRACE]                           FVS only: `<Rule> removed=<ids> added=<ids>`
//   [COMPONENTS]                      FES only: `<n_i> <m_i>` per line
//   [BOUND]                           `key value` lines
//
// Id lists inside trace lines are comma separated, `-` when empty.

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CertificateFile {
  std::string instance;  // hex digest
  std::variant<FvsCertificate, FesCertificate> body;

  bool is_fvs() const { return std::holds_alternative<FvsCertificate>(body); }
};

std::string_view mode_name(FvsMode mode);

std::string write_certificate(const Hypergraph& h, const FvsCertificate& cert);
std::string write_certificate(const Hypergraph& h, const FesCertificate& cert);

CertificateFile parse_certificate(std::string_view text);

/// Empty when `file` is a consistent certificate for h. Does not compare the
/// instance digest; callers decide how to report a mismatch.
std::string audit_certificate(const Hypergraph& h, const CertificateFile& file);

}  // namespace hyperfvs

#endif  // HYPERFVS_CERTIFICATE_HPP
