#pragma once

#include <string>
#include <string_view>

#include "quml/ast.hpp"

namespace quml {

struct ParseResult {
  ast::ParsedModel model;
  std::vector<Diagnostic> diagnostics;  // E001 syntax errors, E002 bad literals

  bool ok() const { return diagnostics.empty(); }
};

/// Parses Q-UML source. On error the parser recovers at the next top-level
/// keyword (or member/message boundary inside a body) so one pass reports
/// every syntax error; `model` is then partial and callers must treat the
/// result as failed.
ParseResult parse(std::string_view source, const std::string& file);

}  // namespace quml
