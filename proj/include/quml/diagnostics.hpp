#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace quml {

// 1-based position; `col` counts bytes from the start of the line.
struct SourcePos {
  int line = 1;
  int col = 1;
};

// Half-open on columns: `end` points just past the last byte of the range.
struct SourceSpan {
  std::string file;
  SourcePos start;
  SourcePos end;
};

enum class Severity { error, warning };

struct RelatedNote {
  SourceSpan span;
  std::string note;
};

/// A coded finding. Codes (E0xx/W0xx) are stable identifiers; the rule table
/// lives in validator.cpp and is queryable through explain().
struct Diagnostic {
  std::string code;
  Severity severity = Severity::error;
  std::string message;
  SourceSpan span;
  std::vector<RelatedNote> related;
};

Severity severity_for_code(std::string_view code);
Diagnostic make_diag(std::string code, std::string message, SourceSpan span);

bool has_errors(const std::vector<Diagnostic>& diags);
bool has_warnings(const std::vector<Diagnostic>& diags);

// Stable order: (file, start, end, code).
void sort_diagnostics(std::vector<Diagnostic>& diags);

// "<file>:<line>:<col>: <severity>[<code>]: <message>", one line per finding,
// followed by indented note lines for related spans.
std::string to_text(const Diagnostic& d);
std::string to_text(const std::vector<Diagnostic>& diags);

}  // namespace quml
