#pragma once

#include <string>
#include <vector>

#include "skeinpos/positivity.hpp"
#include "skeinpos/skein.hpp"

namespace skeinpos {

enum class Format { Text, Json, Tsv };

/// Throws std::invalid_argument for names other than text, json, tsv.
Format parse_format(const std::string& name);

// All renderings are deterministic: basis elements in canonical order,
// Laurent exponents ascending. Text and TSV output end with a newline.

std::string emit_report(const SkeinVector& v, Format format);
std::string emit_report(const ConstraintReport& r, Format format);
std::string emit_report(const std::vector<AuditRow>& rows, Format format);

}  // namespace skeinpos
