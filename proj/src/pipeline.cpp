#include "quml/pipeline.hpp"

#include "quml/validator.hpp"

namespace quml {

Analysis analyze(std::string_view source, const std::string& file) {
  Analysis a;
  ParseResult parsed = parse(source, file);
  a.parsed = std::move(parsed.model);
  if (!parsed.diagnostics.empty()) {
    a.status = Analysis::Status::parse_error;
    a.diagnostics = std::move(parsed.diagnostics);
    return a;
  }

  ResolveResult resolved = resolve(a.parsed);
  if (!resolved.model) {
    a.status = Analysis::Status::resolve_error;
    a.diagnostics = std::move(resolved.diagnostics);
    return a;
  }
  a.model = std::move(resolved.model);

  a.qmap = infer(*a.model);
  a.diagnostics = validate(*a.model, *a.qmap);
  a.status = Analysis::Status::ok;
  return a;
}

}  // namespace quml
