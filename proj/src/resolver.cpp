#include "quml/resolver.hpp"

#include <map>
#include <string>
#include <utility>

namespace quml {
namespace {

class Resolver {
 public:
  explicit Resolver(const ast::ParsedModel& parsed) : parsed_(parsed) {}

  ResolveResult run() {
    model_.name = parsed_.name.text;
    model_.types = builtin_types();
    collect_declarations();
    resolve_classes();
    resolve_relationships();
    check_inheritance_cycles();
    resolve_sequences();

    ResolveResult result;
    sort_diagnostics(diags_);
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) result.model = std::move(model_);
    return result;
  }

 private:
  void diag(const char* code, std::string message, SourceSpan span) {
    diags_.push_back(make_diag(code, std::move(message), std::move(span)));
  }

  // Types and class names first, so members and relationships may reference
  // classes declared later in the file.
  void collect_declarations() {
    for (const auto& decl : parsed_.decls) {
      if (const auto* type = std::get_if<ast::TypeDeclSyntax>(&decl)) {
        if (const TypeDecl* existing = model_.find_type(type->name.text)) {
          diag("E011",
               existing->origin == TypeOrigin::builtin
                   ? "type '" + type->name.text + "' shadows a built-in type"
                   : "duplicate type '" + type->name.text + "'",
               type->name.span);
          continue;
        }
        if (model_.find_class(type->name.text) != nullptr) {
          diag("E011", "'" + type->name.text + "' is already the name of a class",
               type->name.span);
          continue;
        }
        model_.types.push_back({type->name.text, type->nature, TypeOrigin::user});
      } else if (const auto* cls = std::get_if<ast::ClassSyntax>(&decl)) {
        if (model_.find_class(cls->name.text) != nullptr) {
          diag("E011", "duplicate class '" + cls->name.text + "'", cls->name.span);
          continue;
        }
        if (model_.find_type(cls->name.text) != nullptr) {
          diag("E011", "'" + cls->name.text + "' is already the name of a type",
               cls->name.span);
          continue;
        }
        ClassDef def;
        def.name = cls->name.text;
        if (cls->quantum_marker) def.declared_marker = Nature::quantum;
        def.span = cls->span;
        def.name_span = cls->name.span;
        class_syntax_.push_back(cls);
        model_.classes.push_back(std::move(def));
      }
    }
  }

  TypeRef resolve_type_ref(const ast::TypeRefSyntax& syntax, bool allow_class,
                           const char* position) {
    TypeRef ref;
    ref.span = syntax.span;
    ref.array_len = syntax.array_len;
    if (auto type_index = model_.type_index_of(syntax.base.text)) {
      ref.kind = TypeRef::Kind::type;
      ref.index = *type_index;
      return ref;
    }
    if (auto class_index = model_.class_index_of(syntax.base.text)) {
      if (allow_class) {
        ref.kind = TypeRef::Kind::klass;
        ref.index = *class_index;
        return ref;
      }
      diag("E010",
           std::string(position) + " types must be data types, but '" + syntax.base.text +
               "' names a class (class types may only type attributes)",
           syntax.base.span);
    } else {
      diag("E010", "unresolved type '" + syntax.base.text + "'", syntax.base.span);
    }
    ref.kind = TypeRef::Kind::type;
    ref.index = void_type_index();  // placeholder; errors block the model anyway
    return ref;
  }

  void resolve_classes() {
    for (std::size_t c = 0; c < class_syntax_.size(); ++c) {
      const ast::ClassSyntax& syntax = *class_syntax_[c];
      ClassDef& def = model_.classes[c];
      std::map<std::string, SourceSpan> member_names;

      auto check_member_name = [&](const ast::Name& name) {
        auto [it, inserted] = member_names.emplace(name.text, name.span);
        if (!inserted) {
          diag("E011", "duplicate member '" + name.text + "' in class '" + def.name + "'",
               name.span);
          return false;
        }
        return true;
      };

      for (const auto& member : syntax.members) {
        if (const auto* attr = std::get_if<ast::AttrSyntax>(&member)) {
          if (!check_member_name(attr->name)) continue;
          Attribute a;
          a.name = attr->name.text;
          a.is_private = attr->is_private;
          a.span = attr->span;
          a.name_span = attr->name.span;
          a.dtype = resolve_type_ref(attr->type, /*allow_class=*/true, "attribute");
          if (attr->quantum_marker) {
            a.declared_marker = Nature::quantum;
            if (!type_ref_is_quantum(model_, a.dtype)) {
              diag("E022",
                   a.dtype.kind == TypeRef::Kind::klass
                       ? "attribute '" + a.name + "' is marked 'quantum' but '" +
                             type_ref_name(model_, a.dtype) +
                             "' is a class reference (class-typed attributes take their "
                             "quantumness from the composed class)"
                       : "attribute '" + a.name + "' is marked 'quantum' but its type '" +
                             type_ref_name(model_, a.dtype) + "' is classical",
                   attr->name.span);
            }
          }
          def.attributes.push_back(std::move(a));
        } else {
          const auto& op_syntax = std::get<ast::OpSyntax>(member);
          if (!check_member_name(op_syntax.name)) continue;
          Operation op;
          op.name = op_syntax.name.text;
          op.internal_quantum = op_syntax.quantum_marker;
          op.is_private = op_syntax.is_private;
          op.span = op_syntax.span;
          op.name_span = op_syntax.name.span;
          for (const auto& param : op_syntax.params) {
            op.params.push_back(
                {param.name.text, resolve_type_ref(param.type, false, "parameter")});
          }
          if (op_syntax.ret) {
            op.ret = resolve_type_ref(*op_syntax.ret, false, "return");
          } else {
            // Omitted return type is classical void.
            op.ret.kind = TypeRef::Kind::type;
            op.ret.index = void_type_index();
            op.ret.span = op_syntax.name.span;
          }
          def.operations.push_back(std::move(op));
        }
      }
    }
  }

  std::optional<std::uint32_t> require_class(const ast::Name& name) {
    if (auto index = model_.class_index_of(name.text)) return index;
    diag("E010", "unknown class '" + name.text + "'", name.span);
    return std::nullopt;
  }

  void resolve_relationships() {
    for (const auto& decl : parsed_.decls) {
      const auto* rel = std::get_if<ast::RelSyntax>(&decl);
      if (rel == nullptr) continue;
      auto a = require_class(rel->a);
      auto b = require_class(rel->b);
      if (!a || !b) continue;
      Relationship r;
      r.kind = rel->kind;
      r.source = *a;
      r.target = *b;
      r.span = rel->span;
      model_.relationships.push_back(r);
    }
  }

  // One E050 per strongly connected inheritance cycle, anchored at the first
  // participating relationship in declaration order.
  void check_inheritance_cycles() {
    const std::size_t n = model_.classes.size();
    if (n == 0) return;
    std::vector<std::vector<std::uint32_t>> supers(n);
    for (const Relationship& r : model_.relationships) {
      if (r.kind == RelKind::inheritance) supers[r.source].push_back(r.target);
    }

    // reach[c] = superclass closure of c.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::uint32_t c = 0; c < n; ++c) {
      std::vector<std::uint32_t> stack{c};
      while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t super : supers[v]) {
          if (!reach[c][super]) {
            reach[c][super] = true;
            stack.push_back(super);
          }
        }
      }
    }

    std::vector<bool> reported(n, false);
    for (std::uint32_t c = 0; c < n; ++c) {
      if (!reach[c][c] || reported[c]) continue;
      // Mutual-reachability group of c, in index order.
      std::vector<std::uint32_t> group;
      for (std::uint32_t d = 0; d < n; ++d) {
        if (reach[c][d] && reach[d][c]) {
          group.push_back(d);
          reported[d] = true;
        }
      }
      reported[c] = true;

      // Walk one concrete cycle for the message.
      std::string path = model_.classes[c].name;
      std::uint32_t v = c;
      std::vector<bool> seen(n, false);
      while (true) {
        seen[v] = true;
        std::uint32_t next = v;
        for (std::uint32_t super : supers[v]) {
          if (reach[super][c] || super == c) {
            next = super;
            break;
          }
        }
        path += " -> " + model_.classes[next].name;
        if (next == c || seen[next]) break;
        v = next;
      }

      const Relationship* anchor = nullptr;
      std::vector<RelatedNote> related;
      auto in_scc = [&](std::uint32_t d) { return reach[c][d] && reach[d][c]; };
      for (const Relationship& r : model_.relationships) {
        if (r.kind != RelKind::inheritance) continue;
        if (!in_scc(r.source) || !in_scc(r.target)) continue;
        if (anchor == nullptr) {
          anchor = &r;
        } else {
          related.push_back({r.span, "also part of the cycle"});
        }
      }
      Diagnostic d = make_diag("E050", "inheritance cycle: " + path,
                               anchor != nullptr ? anchor->span : model_.classes[c].name_span);
      d.related = std::move(related);
      diags_.push_back(std::move(d));
    }
  }

  void resolve_sequences() {
    for (const auto& decl : parsed_.decls) {
      const auto* syntax = std::get_if<ast::SequenceSyntax>(&decl);
      if (syntax == nullptr) continue;
      if (model_.find_sequence(syntax->name.text) != nullptr) {
        diag("E011", "duplicate sequence diagram '" + syntax->name.text + "'",
             syntax->name.span);
        continue;
      }
      SequenceDiagram seq;
      seq.name = syntax->name.text;
      seq.span = syntax->span;

      std::map<std::string, std::uint32_t> aliases;
      for (const auto& life : syntax->lifelines) {
        if (aliases.count(life.alias.text) != 0) {
          diag("E011", "duplicate lifeline alias '" + life.alias.text + "'", life.alias.span);
          continue;
        }
        auto cls = require_class(life.class_name);
        if (!cls) continue;
        aliases[life.alias.text] = static_cast<std::uint32_t>(seq.lifelines.size());
        seq.lifelines.push_back({life.alias.text, *cls, life.span});
      }

      auto lifeline_index = [&](const ast::Name& alias) -> std::optional<std::uint32_t> {
        auto it = aliases.find(alias.text);
        if (it != aliases.end()) return it->second;
        diag("E010", "unknown lifeline '" + alias.text + "'", alias.span);
        return std::nullopt;
      };

      for (const auto& msg : syntax->messages) {
        auto from = lifeline_index(msg.from);
        auto to = lifeline_index(msg.to);
        if (!from || !to) continue;
        Message m;
        m.kind = msg.kind;
        m.declared = msg.declared;
        m.from = *from;
        m.to = *to;
        m.op_name = msg.op.text;  // bound by the validator (E033)
        m.span = msg.span;
        m.op_span = msg.op.span;
        seq.messages.push_back(std::move(m));
      }
      model_.sequences.push_back(std::move(seq));
    }
  }

  const ast::ParsedModel& parsed_;
  Model model_;
  std::vector<const ast::ClassSyntax*> class_syntax_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

ResolveResult resolve(const ast::ParsedModel& parsed) { return Resolver(parsed).run(); }

}  // namespace quml
