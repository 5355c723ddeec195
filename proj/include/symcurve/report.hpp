#pragma once

#include "symcurve/detect.hpp"

#include <json.hpp>
#include <string>

namespace symcurve {

/// Human-readable summary, one fact per line ("central: no (beta not real)").
std::string format_text(const SymmetryReport& report);

/// Stable keys: class, degrees{r,s,n}, central{...}, mirror{...},
/// oracle_verified, notes. Exact values are strings that parse back with
/// parse_field_element; each has a *_float companion.
nlohmann::json to_json(const SymmetryReport& report);

}  // namespace symcurve
