#include "hyperfvs/certificate.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace hyperfvs {

namespace {

template <typename Int>
std::string join(const std::vector<Int>& ids, const char* sep, const char* empty) {
  if (ids.empty()) return empty;
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string header(std::string_view kind, const Hypergraph& h) {
  return "# hyperfvs certificate\nkind " + std::string(kind) + "\ninstance " + instance_hash_hex(h) + "\n";
}

std::string ids_line(const std::vector<std::uint32_t>& ids) {
  return ids.empty() ? std::string{} : join(ids, " ", "") + "\n";
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

template <typename Int>
Int to_int(std::string_view tok, std::string_view what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw CertificateFormatError("bad number '" + std::string(tok) + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::uint32_t> parse_ids(const std::vector<std::string>& lines, std::string_view what) {
  std::vector<std::uint32_t> ids;
  for (const auto& line : lines) {
    for (auto tok : split(line, ' ')) ids.push_back(to_int<std::uint32_t>(tok, what));
  }
  return ids;
}

std::vector<std::uint32_t> parse_id_list(std::string_view list, std::string_view what) {
  std::vector<std::uint32_t> ids;
  if (list == "-") return ids;
  for (auto tok : split(list, ',')) ids.push_back(to_int<std::uint32_t>(tok, what));
  return ids;
}

std::string_view after_prefix(std::string_view tok, std::string_view prefix) {
  if (tok.substr(0, prefix.size()) != prefix) {
    throw CertificateFormatError("expected '" + std::string(prefix) + "' in trace line");
  }
  return tok.substr(prefix.size());
}

}  // namespace

std::string_view mode_name(FvsMode mode) { return mode == FvsMode::Linear ? "fvs-linear" : "fvs-general"; }

std::string write_certificate(const Hypergraph& h, const FvsCertificate& cert) {
  std::string out = header(mode_name(cert.mode), h);
  out += "[S]\n" + ids_line(cert.S);
  out += "[TRACE]\n";
  for (const auto& app : cert.trace) {
    out += std::string(rule_name(app.rule)) + " removed=" + join(app.removed_edges, ",", "-") +
           " added=" + join(app.added_vertices, ",", "-") + "\n";
  }
  out += "[BOUND]\n";
  out += "m0 " + std::to_string(cert.m0) + "\n";
  out += "bound " + cert.bound.str() + "\n";
  out += "floor " + std::to_string(cert.bound.floor()) + "\n";
  out += "size " + std::to_string(cert.S.size()) + "\n";
  return out;
}

std::string write_certificate(const Hypergraph& h, const FesCertificate& cert) {
  std::string out = header("fes", h);
  out += "[A]\n" + ids_line(cert.A);
  out += "[KEPT]\n" + ids_line(cert.kept);
  out += "[COMPONENTS]\n";
  for (const auto& c : cert.per_component) out += std::to_string(c.vertices) + " " + std::to_string(c.edges) + "\n";
  out += "[BOUND]\n";
  out += "n " + std::to_string(cert.n) + "\n";
  out += "m " + std::to_string(cert.m) + "\n";
  out += "p " + std::to_string(cert.p) + "\n";
  out += "k " + std::to_string(cert.k) + "\n";
  out += "bound " + std::to_string(cert.bound()) + "\n";
  out += "size " + std::to_string(cert.A.size()) + "\n";
  return out;
}

CertificateFile parse_certificate(std::string_view text) {
  std::string kind;
  std::string instance;
  std::map<std::string, std::vector<std::string>> sections;
  std::string current;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw CertificateFormatError("malformed section header '" + line + "'");
      current = line.substr(1, line.size() - 2);
      if (!sections.emplace(current, std::vector<std::string>{}).second) {
        throw CertificateFormatError("section [" + current + "] appears twice");
      }
      continue;
    }
    if (current.empty()) {
      auto parts = split(line, ' ');
      if (parts.size() != 2) throw CertificateFormatError("malformed preamble line '" + line + "'");
      if (parts[0] == "kind") {
        kind = parts[1];
      } else if (parts[0] == "instance") {
        instance = parts[1];
      } else {
        throw CertificateFormatError("unknown preamble key '" + std::string(parts[0]) + "'");
      }
      continue;
    }
    sections[current].push_back(line);
  }
  if (instance.empty()) throw CertificateFormatError("missing instance digest");

  auto section = [&](const std::string& name) -> const std::vector<std::string>& {
    auto it = sections.find(name);
    if (it == sections.end()) throw CertificateFormatError("missing section [" + name + "]");
    return it->second;
  };
  auto bound_values = [&]() {
    std::map<std::string, std::string, std::less<>> values;
    for (const auto& l : section("BOUND")) {
      auto parts = split(l, ' ');
      if (parts.size() != 2) throw CertificateFormatError("malformed BOUND line '" + l + "'");
      values.emplace(parts[0], parts[1]);
    }
    return values;
  };
  auto require = [](const auto& values, const char* key) -> const std::string& {
    auto it = values.find(key);
    if (it == values.end()) throw CertificateFormatError(std::string("BOUND lacks '") + key + "'");
    return it->second;
  };

  CertificateFile file;
  file.instance = instance;
  if (kind == "fvs-linear" || kind == "fvs-general") {
    FvsCertificate cert;
    cert.mode = kind == "fvs-linear" ? FvsMode::Linear : FvsMode::General;
    cert.S = parse_ids(section("S"), "[S]");
    for (const auto& l : section("TRACE")) {
      auto parts = split(l, ' ');
      if (parts.size() != 3) throw CertificateFormatError("malformed TRACE line '" + l + "'");
      auto rule = rule_from_name(parts[0]);
      if (!rule) throw CertificateFormatError("unknown rule '" + std::string(parts[0]) + "'");
      RuleApplication app;
      app.rule = *rule;
      app.removed_edges = parse_id_list(after_prefix(parts[1], "removed="), "[TRACE]");
      app.added_vertices = parse_id_list(after_prefix(parts[2], "added="), "[TRACE]");
      cert.trace.push_back(std::move(app));
    }
    auto values = bound_values();
    cert.m0 = to_int<std::size_t>(require(values, "m0"), "m0");
    auto frac = split(require(values, "bound"), '/');
    if (frac.size() != 2) throw CertificateFormatError("bound is not a fraction");
    cert.bound = Rational{to_int<std::int64_t>(frac[0], "bound"), to_int<std::int64_t>(frac[1], "bound")};
    if (cert.bound.den <= 0) throw CertificateFormatError("bound has a non-positive denominator");
    if (to_int<std::int64_t>(require(values, "floor"), "floor") != cert.bound.floor()) {
      throw CertificateFormatError("floor does not match bound");
    }
    if (to_int<std::size_t>(require(values, "size"), "size") != cert.S.size()) {
      throw CertificateFormatError("size does not match [S]");
    }
    file.body = std::move(cert);
  } else if (kind == "fes") {
    FesCertificate cert;
    cert.A = parse_ids(section("A"), "[A]");
    cert.kept = parse_ids(section("KEPT"), "[KEPT]");
    for (const auto& l : section("COMPONENTS")) {
      auto parts = split(l, ' ');
      if (parts.size() != 2) throw CertificateFormatError("malformed COMPONENTS line '" + l + "'");
      cert.per_component.push_back({to_int<std::size_t>(parts[0], "COMPONENTS"),
                                    to_int<std::size_t>(parts[1], "COMPONENTS")});
    }
    auto values = bound_values();
    cert.n = to_int<std::size_t>(require(values, "n"), "n");
    cert.m = to_int<std::size_t>(require(values, "m"), "m");
    cert.p = to_int<std::size_t>(require(values, "p"), "p");
    cert.k = to_int<std::size_t>(require(values, "k"), "k");
    if (to_int<std::int64_t>(require(values, "bound"), "bound") != cert.bound()) {
      throw CertificateFormatError("bound is not 2m - n + p");
    }
    if (to_int<std::size_t>(require(values, "size"), "size") != cert.A.size()) {
      throw CertificateFormatError("size does not match [A]");
    }
    file.body = std::move(cert);
  } else {
    throw CertificateFormatError("unknown certificate kind '" + kind + "'");
  }
  return file;
}

std::string audit_certificate(const Hypergraph& h, const CertificateFile& file) {
  try {
    if (const auto* fvs = std::get_if<FvsCertificate>(&file.body)) return audit_fvs_certificate(h, *fvs);
    return audit_fes_certificate(h, std::get<FesCertificate>(file.body));
  } catch (const std::out_of_range& e) {
    return e.what();
  }
}

}  // namespace hyperfvs
