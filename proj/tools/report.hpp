#pragma once

#include <string>

#include "a1c/json_io.hpp"

namespace report {

/// Aligned text rendering of a report object. Nested objects are flattened
/// to dotted keys; lists of objects become tables.
std::string render_table(const a1c::json::Json& report);

/// Indented JSON with integer vectors and matrices kept on one line.
std::string render_json(const a1c::json::Json& report);

}  // namespace report
