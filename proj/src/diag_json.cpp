#include "quml/diag_json.hpp"

#include "json.hpp"

namespace quml {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pos_json(const SourcePos& p) { return {{"line", p.line}, {"col", p.col}}; }

}  // namespace

std::string diagnostics_to_json(const std::vector<Diagnostic>& diags) {
  ordered_json arr = ordered_json::array();
  for (const Diagnostic& d : diags) {
    ordered_json entry;
    entry["code"] = d.code;
    entry["severity"] = d.severity == Severity::error ? "error" : "warning";
    entry["message"] = d.message;
    entry["file"] = d.span.file;
    entry["start"] = pos_json(d.span.start);
    entry["end"] = pos_json(d.span.end);
    ordered_json related = ordered_json::array();
    for (const RelatedNote& r : d.related) {
      ordered_json note;
      note["file"] = r.span.file;
      note["start"] = pos_json(r.span.start);
      note["end"] = pos_json(r.span.end);
      note["note"] = r.note;
      related.push_back(std::move(note));
    }
    entry["related"] = std::move(related);
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

}  // namespace quml
