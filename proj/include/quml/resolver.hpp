#pragma once

#include <optional>

#include "quml/ast.hpp"
#include "quml/model.hpp"

namespace quml {

struct ResolveResult {
  std::optional<Model> model;  // present iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
};

/// Binds every name in the syntax tree: built-in registry, user types,
/// classes, member types, relationship endpoints, lifelines and message
/// endpoints. Emits E010 (unresolved), E011 (duplicates/shadowing), E022
/// (attribute marker disagreeing with its type) and E050 (inheritance
/// cycles). Message operation names stay unbound here; the validator checks
/// them (E033).
ResolveResult resolve(const ast::ParsedModel& parsed);

}  // namespace quml
