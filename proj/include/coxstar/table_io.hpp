#pragma once

#include <string>

#include "coxstar/facemonoid.hpp"

namespace coxstar {

enum class OutputFormat { json, csv, md };

OutputFormat parse_format(const std::string& name);

/// Deterministic serialization; entries ordered by (j1 bits, j2 bits),
/// subsets as ascending label arrays, the empty set as "-" in csv/md.
std::string emit_table(const StarTable& t, OutputFormat f);

/// Inverse of emit_table(..., json); used for round-trip checks.
StarTable parse_table_json(const std::string& text);

}  // namespace coxstar
