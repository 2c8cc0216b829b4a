#include "quml/model.hpp"

#include <deque>

namespace quml {

const TypeDecl* Model::find_type(std::string_view name) const {
  for (const TypeDecl& t : types) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::optional<std::uint32_t> Model::type_index_of(std::string_view name) const {
  for (std::uint32_t i = 0; i < types.size(); ++i) {
    if (types[i].name == name) return i;
  }
  return std::nullopt;
}

const ClassDef* Model::find_class(std::string_view name) const {
  for (const ClassDef& c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::optional<std::uint32_t> Model::class_index_of(std::string_view name) const {
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    if (classes[i].name == name) return i;
  }
  return std::nullopt;
}

const SequenceDiagram* Model::find_sequence(std::string_view name) const {
  for (const SequenceDiagram& s : sequences) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<TypeDecl> builtin_types() {
  return {
      {"int", Nature::classical, TypeOrigin::builtin},
      {"uint", Nature::classical, TypeOrigin::builtin},
      {"float", Nature::classical, TypeOrigin::builtin},
      {"bool", Nature::classical, TypeOrigin::builtin},
      {"string", Nature::classical, TypeOrigin::builtin},
      {"void", Nature::classical, TypeOrigin::builtin},
      {"qubit", Nature::quantum, TypeOrigin::builtin},
      {"qstate", Nature::quantum, TypeOrigin::builtin},
      {"graphstate", Nature::quantum, TypeOrigin::builtin},
  };
}

std::uint32_t void_type_index() { return 5; }

bool type_ref_is_quantum(const Model& m, const TypeRef& t) {
  if (t.kind == TypeRef::Kind::klass) return false;
  return m.types[t.index].nature == Nature::quantum;
}

bool type_ref_is_void(const Model& m, const TypeRef& t) {
  return t.kind == TypeRef::Kind::type && t.index < m.types.size() &&
         m.types[t.index].origin == TypeOrigin::builtin && m.types[t.index].name == "void" &&
         !t.array_len;
}

Nature element_quantumness(const Model& m, const Attribute& a) {
  return type_ref_is_quantum(m, a.dtype) ? Nature::quantum : Nature::classical;
}

Nature element_quantumness(const Model& m, const Operation& o) {
  if (o.internal_quantum) return Nature::quantum;
  if (type_ref_is_quantum(m, o.ret)) return Nature::quantum;
  for (const Param& p : o.params) {
    if (type_ref_is_quantum(m, p.type)) return Nature::quantum;
  }
  return Nature::classical;
}

std::string type_ref_name(const Model& m, const TypeRef& t) {
  std::string name =
      t.kind == TypeRef::Kind::klass ? m.classes[t.index].name : m.types[t.index].name;
  if (t.array_len) name += "[" + std::to_string(*t.array_len) + "]";
  return name;
}

std::string operation_signature(const Model& m, const Operation& o) {
  std::string sig = o.name + "(";
  for (std::size_t i = 0; i < o.params.size(); ++i) {
    if (i > 0) sig += ", ";
    sig += o.params[i].name + ": " + type_ref_name(m, o.params[i].type);
  }
  sig += ")";
  if (!type_ref_is_void(m, o.ret)) sig += " -> " + type_ref_name(m, o.ret);
  return sig;
}

std::vector<std::uint32_t> superclasses_of(const Model& m, std::uint32_t class_index) {
  std::vector<std::uint32_t> supers;
  for (const Relationship& r : m.relationships) {
    if (r.kind == RelKind::inheritance && r.source == class_index) supers.push_back(r.target);
  }
  return supers;
}

const Operation* find_public_operation(const Model& m, std::uint32_t class_index,
                                       std::string_view op_name) {
  std::vector<bool> visited(m.classes.size(), false);
  std::deque<std::uint32_t> queue{class_index};
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    if (c >= m.classes.size() || visited[c]) continue;
    visited[c] = true;
    for (const Operation& op : m.classes[c].operations) {
      if (!op.is_private && op.name == op_name) return &op;
    }
    for (std::uint32_t super : superclasses_of(m, c)) queue.push_back(super);
  }
  return nullptr;
}

std::optional<Nature> message_payload(const Model& m, const SequenceDiagram& seq,
                                      const Message& msg) {
  // Calls name an operation of the receiver; returns name the sender
  // operation whose result flows back.
  const std::uint32_t lifeline = msg.kind == MsgKind::call ? msg.to : msg.from;
  const Operation* op =
      find_public_operation(m, seq.lifelines[lifeline].class_index, msg.op_name);
  if (op == nullptr) return std::nullopt;
  if (msg.kind == MsgKind::call) {
    for (const Param& p : op->params) {
      if (type_ref_is_quantum(m, p.type)) return Nature::quantum;
    }
    return Nature::classical;
  }
  return type_ref_is_quantum(m, op->ret) ? Nature::quantum : Nature::classical;
}

}  // namespace quml
