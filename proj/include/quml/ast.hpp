#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quml/diagnostics.hpp"

namespace quml {

enum class Nature { classical, quantum };
enum class RelKind { inheritance, aggregation, composition, association };
enum class MsgKind { call, ret };

const char* to_string(Nature n);
const char* to_string(RelKind k);

namespace ast {

struct Name {
  std::string text;
  SourceSpan span;
};

struct TypeRefSyntax {
  Name base;
  std::optional<std::uint64_t> array_len;
  SourceSpan span;
};

struct AttrSyntax {
  bool quantum_marker = false;
  bool is_private = false;
  Name name;
  TypeRefSyntax type;
  SourceSpan span;
};

struct ParamSyntax {
  Name name;
  TypeRefSyntax type;
};

// The `quantum` prefix on an operation marks internal quantumness; interface
// quantumness is carried solely by the parameter/return types.
struct OpSyntax {
  bool quantum_marker = false;
  bool is_private = false;
  Name name;
  std::vector<ParamSyntax> params;
  std::optional<TypeRefSyntax> ret;
  SourceSpan span;
};

using MemberSyntax = std::variant<AttrSyntax, OpSyntax>;

struct ClassSyntax {
  bool quantum_marker = false;
  Name name;
  std::vector<MemberSyntax> members;
  SourceSpan span;
};

struct TypeDeclSyntax {
  Nature nature = Nature::classical;
  Name name;
  SourceSpan span;
};

// inherit a from b:            a = subclass,  b = superclass
// compose/aggregate a has b:   a = whole,     b = part
// assoc a with b
struct RelSyntax {
  RelKind kind = RelKind::association;
  Name a;
  Name b;
  SourceSpan span;
};

struct LifelineSyntax {
  Name alias;
  Name class_name;
  SourceSpan span;
};

struct MessageSyntax {
  MsgKind kind = MsgKind::call;      // "->" call, "-->" return
  Nature declared = Nature::classical;  // msg vs qmsg
  Name from;
  Name to;
  Name op;
  SourceSpan span;
};

struct SequenceSyntax {
  Name name;
  std::vector<LifelineSyntax> lifelines;
  std::vector<MessageSyntax> messages;
  SourceSpan span;
};

using TopDecl = std::variant<TypeDeclSyntax, ClassSyntax, RelSyntax, SequenceSyntax>;

// Syntax-tree mirror of the model: unresolved names, declaration order kept.
struct ParsedModel {
  Name name;
  std::vector<TopDecl> decls;
};

/// Structural equality ignoring source spans — the round-trip contract for
/// the formatter (parse(format(parse(s))) equals parse(s) under this).
bool structurally_equal(const ParsedModel& a, const ParsedModel& b);

}  // namespace ast
}  // namespace quml
