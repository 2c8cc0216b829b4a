#pragma once

#include <string>
#include <vector>

#include "quml/diagnostics.hpp"

namespace quml {

// Array of {code, severity, message, file, start:{line,col}, end:{line,col},
// related:[{file, start, end, note}]}. `related` is always present.
std::string diagnostics_to_json(const std::vector<Diagnostic>& diags);

}  // namespace quml
