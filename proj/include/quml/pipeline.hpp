#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quml/inference.hpp"
#include "quml/parser.hpp"
#include "quml/resolver.hpp"

namespace quml {

// parse -> resolve -> infer -> validate, with every stage's findings merged
// into one ordered diagnostics list.
struct Analysis {
  enum class Status { parse_error, resolve_error, ok };

  Status status = Status::ok;
  ast::ParsedModel parsed;
  std::optional<Model> model;          // set when status >= resolve success
  std::optional<QuantumnessMap> qmap;  // set when status == ok
  std::vector<Diagnostic> diagnostics;
};

Analysis analyze(std::string_view source, const std::string& file);

}  // namespace quml
