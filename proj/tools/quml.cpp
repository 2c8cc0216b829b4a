#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quml/diag_json.hpp"
#include "quml/formatter.hpp"
#include "quml/pipeline.hpp"
#include "quml/render.hpp"
#include "quml/validator.hpp"

namespace {

using quml::Analysis;
using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 clean (warnings allowed unless --deny-warnings), 1 validation
// errors, 2 parse or IO failure / bad usage.
constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitFailure = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  out.flush();
  return out.good();
}

int run_check(const std::vector<std::string>& files, const std::string& format,
              bool deny_warnings) {
  bool any_failure = false;
  bool any_error = false;
  bool any_warning = false;
  std::vector<quml::Diagnostic> all;

  for (const std::string& path : files) {
    auto source = read_file(path);
    if (!source) {
      std::cerr << "quml: cannot read '" << path << "'\n";
      any_failure = true;
      continue;
    }
    Analysis a = quml::analyze(*source, path);
    if (a.status == Analysis::Status::parse_error) any_failure = true;
    any_error = any_error || quml::has_errors(a.diagnostics);
    any_warning = any_warning || quml::has_warnings(a.diagnostics);
    all.insert(all.end(), a.diagnostics.begin(), a.diagnostics.end());
  }

  if (format == "json") {
    std::cout << quml::diagnostics_to_json(all);
  } else {
    std::cout << quml::to_text(all);
  }

  if (any_failure) return kExitFailure;
  if (any_error) return kExitFindings;
  if (deny_warnings && any_warning) return kExitFindings;
  return kExitClean;
}

// infer stops after inference: parse failures exit 2, resolution errors 1.
int run_infer(const std::string& path, const std::string& format) {
  auto source = read_file(path);
  if (!source) {
    std::cerr << "quml: cannot read '" << path << "'\n";
    return kExitFailure;
  }
  Analysis a = quml::analyze(*source, path);
  if (a.status != Analysis::Status::ok) {
    std::cout << quml::to_text(a.diagnostics);
    return a.status == Analysis::Status::parse_error ? kExitFailure : kExitFindings;
  }

  const quml::Model& m = *a.model;
  const quml::QuantumnessMap& q = *a.qmap;

  if (format == "json") {
    ordered_json doc;
    doc["model"] = m.name;
    ordered_json classes = ordered_json::array();
    for (std::uint32_t c = 0; c < m.classes.size(); ++c) {
      ordered_json entry;
      entry["name"] = m.classes[c].name;
      entry["classification"] = quml::to_string(q.class_of[c]);
      ordered_json chain = ordered_json::array();
      for (const auto& step : q.provenance_chain(c)) {
        chain.push_back(quml::provenance_step_text(m, step));
      }
      entry["provenance"] = std::move(chain);
      classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);

    ordered_json elements = ordered_json::array();
    for (std::uint32_t c = 0; c < m.classes.size(); ++c) {
      for (std::uint32_t i = 0; i < m.classes[c].attributes.size(); ++i) {
        elements.push_back({{"class", m.classes[c].name},
                            {"member", m.classes[c].attributes[i].name},
                            {"kind", "attribute"},
                            {"classification", quml::to_string(q.attribute_of[c][i])}});
      }
      for (std::uint32_t i = 0; i < m.classes[c].operations.size(); ++i) {
        elements.push_back({{"class", m.classes[c].name},
                            {"member", m.classes[c].operations[i].name},
                            {"kind", "operation"},
                            {"classification", quml::to_string(q.operation_of[c][i])}});
      }
    }
    doc["elements"] = std::move(elements);

    ordered_json rels = ordered_json::array();
    for (std::uint32_t i = 0; i < m.relationships.size(); ++i) {
      const quml::Relationship& r = m.relationships[i];
      rels.push_back({{"kind", quml::to_string(r.kind)},
                      {"source", m.classes[r.source].name},
                      {"target", m.classes[r.target].name},
                      {"classification", quml::to_string(q.relationship_of[i])}});
    }
    doc["relationships"] = std::move(rels);
    std::cout << doc.dump(2) << '\n';
    return kExitClean;
  }

  std::cout << "model " << m.name << '\n';
  std::cout << "classes:\n";
  for (std::uint32_t c = 0; c < m.classes.size(); ++c) {
    std::cout << "  " << m.classes[c].name << ": " << quml::to_string(q.class_of[c]);
    const std::string chain = quml::provenance_text(m, q, c);
    if (!chain.empty()) std::cout << "  (" << chain << ")";
    std::cout << '\n';
  }
  std::cout << "elements:\n";
  for (std::uint32_t c = 0; c < m.classes.size(); ++c) {
    for (std::uint32_t i = 0; i < m.classes[c].attributes.size(); ++i) {
      std::cout << "  " << m.classes[c].name << '.' << m.classes[c].attributes[i].name << ": "
                << quml::to_string(q.attribute_of[c][i]) << '\n';
    }
    for (std::uint32_t i = 0; i < m.classes[c].operations.size(); ++i) {
      std::cout << "  " << m.classes[c].name << '.' << m.classes[c].operations[i].name << ": "
                << quml::to_string(q.operation_of[c][i]) << '\n';
    }
  }
  std::cout << "relationships:\n";
  for (std::uint32_t i = 0; i < m.relationships.size(); ++i) {
    const quml::Relationship& r = m.relationships[i];
    const char* verb = r.kind == quml::RelKind::inheritance ? "inherit"
                       : r.kind == quml::RelKind::composition ? "compose"
                       : r.kind == quml::RelKind::aggregation ? "aggregate"
                                                              : "assoc";
    const char* link = r.kind == quml::RelKind::inheritance ? "from"
                       : r.kind == quml::RelKind::association ? "with"
                                                              : "has";
    std::cout << "  " << verb << ' ' << m.classes[r.source].name << ' ' << link << ' '
              << m.classes[r.target].name << ": " << quml::to_string(q.relationship_of[i])
              << '\n';
  }
  return kExitClean;
}

int run_render(const std::string& path, const std::string& diagram, const std::string& out) {
  auto source = read_file(path);
  if (!source) {
    std::cerr << "quml: cannot read '" << path << "'\n";
    return kExitFailure;
  }
  Analysis a = quml::analyze(*source, path);
  if (a.status != Analysis::Status::ok) {
    std::cout << quml::to_text(a.diagnostics);
    return a.status == Analysis::Status::parse_error ? kExitFailure : kExitFindings;
  }

  quml::RenderDoc doc;
  if (diagram == "class") {
    doc = quml::render_class_diagram(*a.model, *a.qmap);
  } else {
    const std::string name = diagram.substr(4);  // "seq:<name>"
    auto rendered = quml::render_sequence_diagram(*a.model, *a.qmap, name);
    if (!rendered) {
      std::cerr << "quml: no sequence diagram named '" << name << "' in '" << path << "'\n";
      return kExitFailure;
    }
    doc = std::move(*rendered);
  }
  if (!write_file(out, doc.content)) {
    std::cerr << "quml: cannot write '" << out << "'\n";
    return kExitFailure;
  }
  return kExitClean;
}

int run_fmt(const std::string& path, bool check_only) {
  auto source = read_file(path);
  if (!source) {
    std::cerr << "quml: cannot read '" << path << "'\n";
    return kExitFailure;
  }
  quml::ParseResult parsed = quml::parse(*source, path);
  if (!parsed.ok()) {
    std::cout << quml::to_text(parsed.diagnostics);
    return kExitFailure;
  }
  const std::string canonical = quml::format(parsed.model);
  if (check_only) {
    if (canonical == *source) return kExitClean;
    std::cout << "would reformat: " << path << '\n';
    return kExitFindings;
  }
  if (canonical != *source && !write_file(path, canonical)) {
    std::cerr << "quml: cannot write '" << path << "'\n";
    return kExitFailure;
  }
  return kExitClean;
}

int run_explain(const std::string& code) {
  auto text = quml::explain(code);
  if (!text) {
    std::cerr << "quml: unknown diagnostic code '" << code << "'\n";
    return kExitFailure;
  }
  std::cout << *text;
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quml — toolchain for the Q-UML quantum software modeling language"};
  app.require_subcommand(1);

  std::vector<std::string> check_files;
  std::string check_format = "text";
  bool deny_warnings = false;
  CLI::App* check = app.add_subcommand("check", "Validate models and print diagnostics");
  check->add_option("files", check_files, "model files (.quml)")->required()->expected(-1);
  check->add_option("--format", check_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--deny-warnings", deny_warnings, "treat warnings as errors");

  std::string infer_file;
  std::string infer_format = "text";
  CLI::App* infer = app.add_subcommand("infer", "Print inferred classifications with provenance");
  infer->add_option("file", infer_file, "model file")->required();
  infer->add_option("--format", infer_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string render_file;
  std::string render_diagram;
  std::string render_out;
  CLI::App* render = app.add_subcommand("render", "Render a diagram (DOT for class, SVG for sequence)");
  render->add_option("file", render_file, "model file")->required();
  render->add_option("--diagram", render_diagram, "'class' or 'seq:<name>'")
      ->required()
      ->check([](const std::string& v) -> std::string {
        if (v == "class" || (v.rfind("seq:", 0) == 0 && v.size() > 4)) return {};
        return "must be 'class' or 'seq:<name>'";
      });
  render->add_option("--out", render_out, "output path")->required();

  std::string fmt_file;
  bool fmt_check = false;
  CLI::App* fmt = app.add_subcommand("fmt", "Rewrite a model file in canonical form");
  fmt->add_option("file", fmt_file, "model file")->required();
  fmt->add_flag("--check", fmt_check, "exit 1 instead of rewriting when not canonical");

  std::string explain_code;
  CLI::App* explain = app.add_subcommand("explain", "Describe a diagnostic code");
  explain->add_option("code", explain_code, "diagnostic code, e.g. E020")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun 'quml --help' for usage.\n";
    return kExitFailure;
  }

  if (check->parsed()) return run_check(check_files, check_format, deny_warnings);
  if (infer->parsed()) return run_infer(infer_file, infer_format);
  if (render->parsed()) return run_render(render_file, render_diagram, render_out);
  if (fmt->parsed()) return run_fmt(fmt_file, fmt_check);
  if (explain->parsed()) return run_explain(explain_code);
  return kExitFailure;
}
