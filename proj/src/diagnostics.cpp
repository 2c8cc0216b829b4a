#include "quml/diagnostics.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace quml {

Severity severity_for_code(std::string_view code) {
  return (!code.empty() && code[0] == 'W') ? Severity::warning : Severity::error;
}

Diagnostic make_diag(std::string code, std::string message, SourceSpan span) {
  Diagnostic d;
  d.severity = severity_for_code(code);
  d.code = std::move(code);
  d.message = std::move(message);
  d.span = std::move(span);
  return d;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

bool has_warnings(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::warning; });
}

namespace {

auto sort_key(const Diagnostic& d) {
  return std::tie(d.span.file, d.span.start.line, d.span.start.col, d.span.end.line,
                  d.span.end.col, d.code);
}

}  // namespace

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return sort_key(a) < sort_key(b); });
}

std::string to_text(const Diagnostic& d) {
  std::ostringstream os;
  os << d.span.file << ':' << d.span.start.line << ':' << d.span.start.col << ": "
     << (d.severity == Severity::error ? "error" : "warning") << '[' << d.code
     << "]: " << d.message << '\n';
  for (const RelatedNote& r : d.related) {
    os << "  " << r.span.file << ':' << r.span.start.line << ':' << r.span.start.col
       << ": note: " << r.note << '\n';
  }
  return os.str();
}

std::string to_text(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const Diagnostic& d : diags) out += to_text(d);
  return out;
}

}  // namespace quml
