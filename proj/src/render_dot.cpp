#include <sstream>

#include "quml/render.hpp"

namespace quml {
namespace {

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string bold(const std::string& text) { return "<b>" + text + "</b>"; }

std::string attr_line(const Model& m, const Attribute& a, bool quantum) {
  std::string body = html_escape(a.name + ": " + type_ref_name(m, a.dtype));
  return std::string(a.is_private ? "- " : "+ ") + (quantum ? bold(body) : body);
}

// Quantum operations show the name in bold plus each quantum parameter and a
// quantum return type; classical signature parts stay plain.
std::string op_line(const Model& m, const Operation& o, bool quantum) {
  std::string line = o.is_private ? "- " : "+ ";
  line += quantum ? bold(html_escape(o.name)) : html_escape(o.name);
  line += "(";
  for (std::size_t i = 0; i < o.params.size(); ++i) {
    if (i > 0) line += ", ";
    std::string p = html_escape(o.params[i].name + ": " + type_ref_name(m, o.params[i].type));
    line += type_ref_is_quantum(m, o.params[i].type) ? bold(p) : p;
  }
  line += ")";
  if (!type_ref_is_void(m, o.ret)) {
    std::string r = html_escape(type_ref_name(m, o.ret));
    line += " : " + (type_ref_is_quantum(m, o.ret) ? bold(r) : r);
  }
  return line;
}

const char* edge_head(RelKind k) {
  switch (k) {
    case RelKind::inheritance: return "onormal";  // hollow triangle at the superclass
    case RelKind::aggregation: return "odiamond";
    case RelKind::composition: return "diamond";
    case RelKind::association: return "none";
  }
  return "none";
}

}  // namespace

RenderDoc render_class_diagram(const Model& m, const QuantumnessMap& q) {
  std::ostringstream os;
  os << "digraph \"" << m.name << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=none, margin=0, fontname=\"Helvetica\"];\n";
  os << "  edge [fontname=\"Helvetica\"];\n\n";

  for (std::uint32_t c = 0; c < m.classes.size(); ++c) {
    const ClassDef& cls = m.classes[c];
    const bool quantum = q.class_of[c] == Nature::quantum;
    os << "  \"" << cls.name << "\" [label=<";
    os << "<table border=\"1\" cellborder=\"0\" cellspacing=\"0\" cellpadding=\"4\">";
    os << "<tr><td align=\"center\">"
       << (quantum ? bold(html_escape(cls.name)) : html_escape(cls.name)) << "</td></tr>";
    os << "<hr/>";
    if (cls.attributes.empty()) {
      os << "<tr><td align=\"left\">&#160;</td></tr>";
    } else {
      for (std::uint32_t i = 0; i < cls.attributes.size(); ++i) {
        os << "<tr><td align=\"left\">"
           << attr_line(m, cls.attributes[i], q.attribute_of[c][i] == Nature::quantum)
           << "</td></tr>";
      }
    }
    os << "<hr/>";
    if (cls.operations.empty()) {
      os << "<tr><td align=\"left\">&#160;</td></tr>";
    } else {
      for (std::uint32_t i = 0; i < cls.operations.size(); ++i) {
        os << "<tr><td align=\"left\">"
           << op_line(m, cls.operations[i], q.operation_of[c][i] == Nature::quantum)
           << "</td></tr>";
      }
    }
    os << "</table>>];\n";
  }

  if (!m.relationships.empty()) os << '\n';
  for (std::uint32_t i = 0; i < m.relationships.size(); ++i) {
    const Relationship& r = m.relationships[i];
    // The UML glyph sits at the target end of the DOT edge: part -> whole for
    // aggregation/composition, subclass -> superclass for inheritance.
    std::uint32_t tail = r.source;
    std::uint32_t head = r.target;
    if (r.kind == RelKind::composition || r.kind == RelKind::aggregation) {
      tail = r.target;  // part
      head = r.source;  // whole
    }
    os << "  \"" << m.classes[tail].name << "\" -> \"" << m.classes[head].name
       << "\" [arrowhead=" << edge_head(r.kind);
    if (q.relationship_of[i] == Nature::quantum) {
      // Two parallel strokes; machine-checkable double-line idiom.
      os << ", color=\"black:invis:black\"";
    }
    os << "];\n";
  }

  os << "}\n";
  return {RenderDoc::Format::dot, os.str(), "class"};
}

}  // namespace quml
