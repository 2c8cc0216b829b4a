#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quml/ast.hpp"
#include "quml/diagnostics.hpp"

namespace quml {

enum class TypeOrigin { builtin, user };

struct TypeDecl {
  std::string name;
  Nature nature = Nature::classical;
  TypeOrigin origin = TypeOrigin::builtin;
};

// Resolved type reference. A class-typed reference is legal only on
// attributes, where it induces an implicit composition edge during
// inference; at the element level it is not quantum by itself.
struct TypeRef {
  enum class Kind { type, klass };
  Kind kind = Kind::type;
  std::uint32_t index = 0;  // into Model::types or Model::classes
  std::optional<std::uint64_t> array_len;
  SourceSpan span;
};

struct Attribute {
  std::string name;
  TypeRef dtype;
  std::optional<Nature> declared_marker;  // `quantum` prefix, when present
  bool is_private = false;
  SourceSpan span;
  SourceSpan name_span;
};

struct Param {
  std::string name;
  TypeRef type;
};

struct Operation {
  std::string name;
  std::vector<Param> params;
  TypeRef ret;  // classical void when omitted in source
  bool internal_quantum = false;
  bool is_private = false;
  SourceSpan span;
  SourceSpan name_span;
};

struct ClassDef {
  std::string name;
  std::optional<Nature> declared_marker;
  std::vector<Attribute> attributes;
  std::vector<Operation> operations;
  SourceSpan span;
  SourceSpan name_span;
};

// source: whole / subclass / associating class
// target: part / superclass / associated class
struct Relationship {
  RelKind kind = RelKind::association;
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  SourceSpan span;
};

struct Lifeline {
  std::string alias;
  std::uint32_t class_index = 0;
  SourceSpan span;
};

struct Message {
  MsgKind kind = MsgKind::call;
  Nature declared = Nature::classical;
  std::uint32_t from = 0;  // lifeline indices
  std::uint32_t to = 0;
  std::string op_name;
  SourceSpan span;
  SourceSpan op_span;
};

struct SequenceDiagram {
  std::string name;
  std::vector<Lifeline> lifelines;
  std::vector<Message> messages;
  SourceSpan span;
};

// Immutable after resolution; all queries are const.
struct Model {
  std::string name;
  std::vector<TypeDecl> types;  // built-ins first, user declarations appended
  std::vector<ClassDef> classes;
  std::vector<Relationship> relationships;
  std::vector<SequenceDiagram> sequences;

  const TypeDecl* find_type(std::string_view name) const;
  std::optional<std::uint32_t> type_index_of(std::string_view name) const;
  const ClassDef* find_class(std::string_view name) const;
  std::optional<std::uint32_t> class_index_of(std::string_view name) const;
  const SequenceDiagram* find_sequence(std::string_view name) const;
};

// classical: int, uint, float, bool, string, void
// quantum:   qubit, qstate, graphstate
std::vector<TypeDecl> builtin_types();
std::uint32_t void_type_index();

// An array is quantum iff its element type is; class refs are never quantum
// at the element level.
bool type_ref_is_quantum(const Model& m, const TypeRef& t);
bool type_ref_is_void(const Model& m, const TypeRef& t);

/// Pure function of the element's signature and the type registry; never
/// consults class classifications.
Nature element_quantumness(const Model& m, const Attribute& a);
Nature element_quantumness(const Model& m, const Operation& o);

std::string type_ref_name(const Model& m, const TypeRef& t);
// "set(rho: qstate)", "order(a: int, N: int) -> int"; "-> void" omitted.
std::string operation_signature(const Model& m, const Operation& o);

// Direct superclasses (relationship declaration order).
std::vector<std::uint32_t> superclasses_of(const Model& m, std::uint32_t class_index);

/// Looks up a public operation by name on the class or, failing that, its
/// superclasses (breadth-first). Private operations never match.
const Operation* find_public_operation(const Model& m, std::uint32_t class_index,
                                       std::string_view op_name);

/// Payload nature of a message: for calls, quantum iff any parameter of the
/// named operation is quantum (looked up on the receiver's class); for
/// returns, quantum iff the named operation's return type is quantum (looked
/// up on the sender's class). nullopt when the operation cannot be found.
std::optional<Nature> message_payload(const Model& m, const SequenceDiagram& seq,
                                      const Message& msg);

}  // namespace quml
