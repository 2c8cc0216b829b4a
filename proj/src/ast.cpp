#include "quml/ast.hpp"

namespace quml {

const char* to_string(Nature n) { return n == Nature::quantum ? "quantum" : "classical"; }

const char* to_string(RelKind k) {
  switch (k) {
    case RelKind::inheritance: return "inheritance";
    case RelKind::aggregation: return "aggregation";
    case RelKind::composition: return "composition";
    case RelKind::association: return "association";
  }
  return "relationship";
}

namespace ast {
namespace {

bool eq(const Name& a, const Name& b) { return a.text == b.text; }

bool eq(const TypeRefSyntax& a, const TypeRefSyntax& b) {
  return eq(a.base, b.base) && a.array_len == b.array_len;
}

bool eq(const AttrSyntax& a, const AttrSyntax& b) {
  return a.quantum_marker == b.quantum_marker && a.is_private == b.is_private &&
         eq(a.name, b.name) && eq(a.type, b.type);
}

bool eq(const OpSyntax& a, const OpSyntax& b) {
  if (a.quantum_marker != b.quantum_marker || a.is_private != b.is_private ||
      !eq(a.name, b.name) || a.params.size() != b.params.size() ||
      a.ret.has_value() != b.ret.has_value()) {
    return false;
  }
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (!eq(a.params[i].name, b.params[i].name) || !eq(a.params[i].type, b.params[i].type)) {
      return false;
    }
  }
  return !a.ret || eq(*a.ret, *b.ret);
}

bool eq(const MemberSyntax& a, const MemberSyntax& b) {
  if (a.index() != b.index()) return false;
  if (const auto* attr = std::get_if<AttrSyntax>(&a)) return eq(*attr, std::get<AttrSyntax>(b));
  return eq(std::get<OpSyntax>(a), std::get<OpSyntax>(b));
}

bool eq(const ClassSyntax& a, const ClassSyntax& b) {
  if (a.quantum_marker != b.quantum_marker || !eq(a.name, b.name) ||
      a.members.size() != b.members.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (!eq(a.members[i], b.members[i])) return false;
  }
  return true;
}

bool eq(const TypeDeclSyntax& a, const TypeDeclSyntax& b) {
  return a.nature == b.nature && eq(a.name, b.name);
}

bool eq(const RelSyntax& a, const RelSyntax& b) {
  return a.kind == b.kind && eq(a.a, b.a) && eq(a.b, b.b);
}

bool eq(const SequenceSyntax& a, const SequenceSyntax& b) {
  if (!eq(a.name, b.name) || a.lifelines.size() != b.lifelines.size() ||
      a.messages.size() != b.messages.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.lifelines.size(); ++i) {
    if (!eq(a.lifelines[i].alias, b.lifelines[i].alias) ||
        !eq(a.lifelines[i].class_name, b.lifelines[i].class_name)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.messages.size(); ++i) {
    const MessageSyntax& x = a.messages[i];
    const MessageSyntax& y = b.messages[i];
    if (x.kind != y.kind || x.declared != y.declared || !eq(x.from, y.from) ||
        !eq(x.to, y.to) || !eq(x.op, y.op)) {
      return false;
    }
  }
  return true;
}

bool eq(const TopDecl& a, const TopDecl& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return eq(lhs, std::get<T>(b));
      },
      a);
}

}  // namespace

bool structurally_equal(const ParsedModel& a, const ParsedModel& b) {
  if (!eq(a.name, b.name) || a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    if (!eq(a.decls[i], b.decls[i])) return false;
  }
  return true;
}

}  // namespace ast
}  // namespace quml
