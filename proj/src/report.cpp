#include "skeinpos/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skeinpos {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  throw std::invalid_argument("unknown output format '" + name + "' (expected text, json or tsv)");
}

std::string emit_report(const SkeinVector& v, Format format) {
  switch (format) {
    case Format::Text: return to_string(v) + "\n";
    case Format::Json: return to_json(v).dump(2) + "\n";
    case Format::Tsv: {
      std::ostringstream os;
      os << "basis\tcoeff\n";
      for (const auto& [b, c] : v.terms()) os << describe(b) << '\t' << c << '\n';
      return os.str();
    }
  }
  throw std::logic_error("unknown format");
}

namespace {

const char* identity_for(const std::string& kind) {
  if (kind == "minimality")
    return "P_1(z') P_n(z) = a P_n(z) + c_0 P_1(z') + sum_k c_k (q^k P_1(z_{1,k}) + q^-k P_1(z_{1,-k})) + d";
  if (kind == "arc") return "Q_n(x) y_n = sum_k c_k q^-kn z_{k,n}  mod (gamma_0, ..., gamma_{n-1})";
  if (kind == "d1") return "Q_1(x) Q_1(y) = a Q_1(x) + a Q_1(y) - a^2  mod all boundary arcs of D_1";
  return "";
}

std::string join_coeffs(const std::vector<LaurentPoly>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
  return s + "]";
}

}  // namespace

std::string emit_report(const ConstraintReport& r, Format format) {
  if (format == Format::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  if (format == Format::Tsv) {
    os << "label\tvalue\trequired\tstatus\n";
    for (const auto& c : r.constraints)
      os << c.label << '\t' << c.value << "\tR_+\t" << (c.satisfied ? "PASS" : "FAIL") << '\n';
    for (const auto& d : r.diagram_checks)
      os << "diagram x^" << d.k << " y_" << d.n << '\t' << to_string(d.engine) << "\tagrees\t"
         << (d.agrees ? "PASS" : "FAIL") << '\n';
    os << "conclusion\t" << to_string(r.conclusion) << "\t\t" << (r.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
  }

  os << r.kind << " constraints for sequence " << r.sequence << ", n = " << r.n;
  if (r.specialized_q1) os << " (specialized at q = 1)";
  os << '\n';
  os << "identity: " << identity_for(r.kind) << '\n';
  os << "a = " << r.a << '\n';
  os << "c = " << join_coeffs(r.c) << '\n';
  std::size_t width = 10;
  for (const auto& c : r.constraints) width = std::max(width, c.label.size());
  for (const auto& c : r.constraints) {
    os << "  " << c.label << std::string(width - c.label.size() + 2, ' ') << (c.satisfied ? "PASS" : "FAIL")
       << "  " << c.value << (c.satisfied ? "" : "  not in R_+") << '\n';
  }
  for (const auto& d : r.diagram_checks) {
    os << "  state sum x^" << d.k << " y_" << d.n << ": " << to_string(d.engine) << "  "
       << (d.agrees ? "PASS" : "FAIL");
    if (!d.agrees) os << " (expected " << to_string(d.expected) << ")";
    os << '\n';
  }
  os << "conclusion: " << to_string(r.conclusion) << '\n';
  for (const auto& fact : r.derived) os << "derived: " << fact << '\n';
  return os.str();
}

std::string emit_report(const std::vector<AuditRow>& rows, Format format) {
  if (format == Format::Json) return to_json(rows).dump(2) + "\n";
  std::ostringstream os;
  if (format == Format::Tsv) {
    os << "m\tn\tall_positive\n";
    for (const auto& row : rows) os << row.m << '\t' << row.n << '\t' << (row.all_positive ? "true" : "false") << '\n';
    return os.str();
  }
  std::size_t failures = 0;
  for (const auto& row : rows) {
    if (row.all_positive) continue;
    ++failures;
    os << "  m=" << row.m << " n=" << row.n << "  FAIL";
    for (const auto& [k, v] : row.negatives) os << "  [" << k << "]: " << v;
    os << '\n';
  }
  os << "structure constants checked: " << rows.size() << ", with negative coefficients: " << failures << '\n';
  return os.str();
}

}  // namespace skeinpos
