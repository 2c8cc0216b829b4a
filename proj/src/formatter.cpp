#include "quml/formatter.hpp"

#include <sstream>

// TODO: preserve // comments through `quml fmt`; tokens carry no trivia yet,
// so formatting is purely structural and comments are dropped.

namespace quml {
namespace {

enum class DeclKind { type, klass, rel, seq };

DeclKind kind_of(const ast::TopDecl& d) {
  switch (d.index()) {
    case 0: return DeclKind::type;
    case 1: return DeclKind::klass;
    case 2: return DeclKind::rel;
    default: return DeclKind::seq;
  }
}

// Consecutive one-liners of the same kind stay in one block; everything else
// is separated by a blank line.
bool blank_line_between(DeclKind prev, DeclKind next) {
  if (prev != next) return true;
  return next == DeclKind::klass || next == DeclKind::seq;
}

void write_member(std::ostringstream& os, const ast::MemberSyntax& member) {
  os << "  ";
  if (const auto* attr = std::get_if<ast::AttrSyntax>(&member)) {
    if (attr->quantum_marker) os << "quantum ";
    if (attr->is_private) os << "private ";
    os << "attr " << attr->name.text << ": " << format_type_ref(attr->type) << '\n';
    return;
  }
  const auto& op = std::get<ast::OpSyntax>(member);
  if (op.quantum_marker) os << "quantum ";
  if (op.is_private) os << "private ";
  os << "op " << op.name.text << '(';
  for (std::size_t i = 0; i < op.params.size(); ++i) {
    if (i > 0) os << ", ";
    os << op.params[i].name.text << ": " << format_type_ref(op.params[i].type);
  }
  os << ')';
  if (op.ret) os << " -> " << format_type_ref(*op.ret);
  os << '\n';
}

void write_decl(std::ostringstream& os, const ast::TopDecl& decl) {
  if (const auto* type = std::get_if<ast::TypeDeclSyntax>(&decl)) {
    os << to_string(type->nature) << " type " << type->name.text << '\n';
    return;
  }
  if (const auto* cls = std::get_if<ast::ClassSyntax>(&decl)) {
    if (cls->quantum_marker) os << "quantum ";
    os << "class " << cls->name.text << " {";
    if (cls->members.empty()) {
      os << "}\n";
      return;
    }
    os << '\n';
    for (const auto& member : cls->members) write_member(os, member);
    os << "}\n";
    return;
  }
  if (const auto* rel = std::get_if<ast::RelSyntax>(&decl)) {
    switch (rel->kind) {
      case RelKind::inheritance:
        os << "inherit " << rel->a.text << " from " << rel->b.text << '\n';
        break;
      case RelKind::composition:
        os << "compose " << rel->a.text << " has " << rel->b.text << '\n';
        break;
      case RelKind::aggregation:
        os << "aggregate " << rel->a.text << " has " << rel->b.text << '\n';
        break;
      case RelKind::association:
        os << "assoc " << rel->a.text << " with " << rel->b.text << '\n';
        break;
    }
    return;
  }
  const auto& seq = std::get<ast::SequenceSyntax>(decl);
  os << "sequence " << seq.name.text << " {";
  if (seq.lifelines.empty() && seq.messages.empty()) {
    os << "}\n";
    return;
  }
  os << '\n';
  for (const auto& life : seq.lifelines) {
    os << "  lifeline " << life.alias.text << ": " << life.class_name.text << '\n';
  }
  for (const auto& msg : seq.messages) {
    os << "  " << (msg.declared == Nature::quantum ? "qmsg" : "msg") << ' ' << msg.from.text
       << (msg.kind == MsgKind::call ? " -> " : " --> ") << msg.to.text << " : " << msg.op.text
       << '\n';
  }
  os << "}\n";
}

}  // namespace

std::string format_type_ref(const ast::TypeRefSyntax& t) {
  std::string out = t.base.text;
  if (t.array_len) out += "[" + std::to_string(*t.array_len) + "]";
  return out;
}

std::string format(const ast::ParsedModel& m) {
  std::ostringstream os;
  os << "model " << m.name.text << '\n';
  for (std::size_t i = 0; i < m.decls.size(); ++i) {
    if (i == 0 || blank_line_between(kind_of(m.decls[i - 1]), kind_of(m.decls[i]))) os << '\n';
    write_decl(os, m.decls[i]);
  }
  return os.str();
}

}  // namespace quml
