#pragma once

#include <string>

#include "quml/ast.hpp"

namespace quml {

/// Canonical pretty-printer: two-space indent, declaration order preserved,
/// one blank line between top-level declarations except between consecutive
/// type or relationship one-liners. Idempotent: format(parse(format(x)))
/// equals format(x).
std::string format(const ast::ParsedModel& m);

std::string format_type_ref(const ast::TypeRefSyntax& t);

}  // namespace quml
