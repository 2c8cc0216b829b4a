#include "quml/validator.hpp"

#include <array>
#include <deque>

namespace quml {
namespace {

// Effective public interface: own public members plus inherited ones.
template <typename Fn>
void for_each_public_interface_class(const Model& m, std::uint32_t class_index, Fn&& fn) {
  std::vector<bool> visited(m.classes.size(), false);
  std::deque<std::uint32_t> queue{class_index};
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    if (visited[c]) continue;
    visited[c] = true;
    fn(m.classes[c]);
    for (std::uint32_t super : superclasses_of(m, c)) queue.push_back(super);
  }
}

bool operation_is_classical_interface(const Model& m, const Operation& op) {
  // Internal quantumness is irrelevant here: Quantum Communication only
  // constrains the signature a classical peer can see.
  if (type_ref_is_quantum(m, op.ret)) return false;
  for (const Param& p : op.params) {
    if (type_ref_is_quantum(m, p.type)) return false;
  }
  return true;
}

bool attribute_is_classical_interface(const Model& m, const QuantumnessMap& q,
                                      const Attribute& a) {
  if (type_ref_is_quantum(m, a.dtype)) return false;
  if (a.dtype.kind == TypeRef::Kind::klass && q.class_of[a.dtype.index] == Nature::quantum) {
    return false;
  }
  return true;
}

bool has_classical_interface(const Model& m, const QuantumnessMap& q, std::uint32_t cls) {
  bool found = false;
  for_each_public_interface_class(m, cls, [&](const ClassDef& c) {
    if (found) return;
    for (const Operation& op : c.operations) {
      if (!op.is_private && operation_is_classical_interface(m, op)) {
        found = true;
        return;
      }
    }
    for (const Attribute& a : c.attributes) {
      if (!a.is_private && attribute_is_classical_interface(m, q, a)) {
        found = true;
        return;
      }
    }
  });
  return found;
}

void check_class_markers(const Model& m, const QuantumnessMap& q,
                         std::vector<Diagnostic>& out) {
  for (std::uint32_t c = 0; c < m.classes.size(); ++c) {
    const ClassDef& cls = m.classes[c];
    const bool marked = cls.declared_marker == Nature::quantum;
    const bool inferred = q.class_of[c] == Nature::quantum;
    if (inferred && !marked) {
      Diagnostic d = make_diag(
          "E020", "class '" + cls.name + "' is quantum but not marked 'quantum'",
          cls.name_span);
      const auto chain = q.provenance_chain(c);
      if (!chain.empty()) {
        const ProvenanceStep& first = chain.front();
        SourceSpan anchor = cls.name_span;
        switch (first.kind) {
          case ProvenanceKind::own_attribute:
          case ProvenanceKind::via_attribute:
            anchor = m.classes[first.class_index].attributes[first.element].span;
            break;
          case ProvenanceKind::own_operation:
            anchor = m.classes[first.class_index].operations[first.element].span;
            break;
          default:
            anchor = m.classes[first.via].name_span;
            break;
        }
        d.related.push_back({anchor, provenance_text(m, q, c)});
      }
      out.push_back(std::move(d));
    } else if (!inferred && marked) {
      out.push_back(make_diag(
          "W021",
          "class '" + cls.name +
              "' is marked 'quantum' but has no quantum element, superclass or part",
          cls.name_span));
    }
  }
}

void check_messages(const Model& m, const QuantumnessMap& q, std::vector<Diagnostic>& out) {
  for (const SequenceDiagram& seq : m.sequences) {
    for (const Message& msg : seq.messages) {
      const bool is_call = msg.kind == MsgKind::call;
      const Lifeline& looked_up = seq.lifelines[is_call ? msg.to : msg.from];
      const auto payload = message_payload(m, seq, msg);
      if (!payload) {
        Diagnostic d = make_diag(
            "E033",
            "'" + msg.op_name + "' is not a public operation of class '" +
                m.classes[looked_up.class_index].name + "'" +
                (is_call ? "" : " (return messages name an operation of the sender)"),
            msg.op_span);
        d.related.push_back(
            {m.classes[looked_up.class_index].name_span,
             "operation looked up on lifeline '" + looked_up.alias + "' of this class"});
        out.push_back(std::move(d));
        continue;
      }

      if (*payload == Nature::quantum && msg.declared == Nature::classical) {
        out.push_back(make_diag("E030",
                                "message '" + msg.op_name +
                                    "' carries a quantum payload but is declared classical; "
                                    "use 'qmsg'",
                                msg.span));
      } else if (*payload == Nature::classical && msg.declared == Nature::quantum) {
        out.push_back(make_diag("E031",
                                "message '" + msg.op_name +
                                    "' carries only classical payload and should be "
                                    "communicated classically; use 'msg'",
                                msg.span));
      }

      if (*payload == Nature::quantum) {
        // Quantum data needs quantum endpoints on both sides.
        for (const std::uint32_t lifeline : {msg.from, msg.to}) {
          const Lifeline& endpoint = seq.lifelines[lifeline];
          if (q.class_of[endpoint.class_index] == Nature::quantum) continue;
          Diagnostic d = make_diag(
              "E032",
              "quantum message '" + msg.op_name + "' has classical endpoint '" +
                  endpoint.alias + "' of class '" + m.classes[endpoint.class_index].name +
                  "', which cannot store or transmit quantum data",
              msg.span);
          d.related.push_back({m.classes[endpoint.class_index].name_span,
                               "'" + m.classes[endpoint.class_index].name +
                                   "' is classical"});
          out.push_back(std::move(d));
          if (msg.from == msg.to) break;
        }
      }
    }
  }
}

void check_associations(const Model& m, const QuantumnessMap& q,
                        std::vector<Diagnostic>& out) {
  for (const Relationship& r : m.relationships) {
    if (r.kind != RelKind::association || r.source == r.target) continue;
    const bool source_quantum = q.class_of[r.source] == Nature::quantum;
    const bool target_quantum = q.class_of[r.target] == Nature::quantum;
    if (source_quantum == target_quantum) continue;
    const std::uint32_t quantum_side = source_quantum ? r.source : r.target;
    const std::uint32_t classical_side = source_quantum ? r.target : r.source;
    if (has_classical_interface(m, q, quantum_side)) continue;
    Diagnostic d = make_diag(
        "E040",
        "association between classical '" + m.classes[classical_side].name +
            "' and quantum '" + m.classes[quantum_side].name + "', but '" +
            m.classes[quantum_side].name +
            "' has no public classical operation or attribute to interface with",
        r.span);
    d.related.push_back({m.classes[quantum_side].name_span,
                         "every public element of '" + m.classes[quantum_side].name +
                             "' involves quantum data"});
    out.push_back(std::move(d));
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Model& m, const QuantumnessMap& q) {
  std::vector<Diagnostic> out;
  check_class_markers(m, q, out);
  check_messages(m, q, out);
  check_associations(m, q, out);
  sort_diagnostics(out);
  return out;
}

namespace {

struct RuleText {
  const char* code;
  const char* title;
  const char* body;
};

constexpr std::array<RuleText, 13> kRuleTable = {{
    {"E001", "syntax error",
     "The source text does not match the Q-UML grammar. Declarations are\n"
     "'classical|quantum type', 'class', 'inherit/compose/aggregate/assoc' and\n"
     "'sequence'; run 'quml fmt' on a valid file to see the canonical shape."},
    {"E002", "invalid literal",
     "Array lengths are concrete positive integers, e.g. 'qubit[4]'. Zero,\n"
     "negative or oversized lengths are rejected."},
    {"E010", "unresolved name",
     "Every referenced type, class or lifeline must be declared. Attribute\n"
     "types may name classes (an implicit composition); operation parameter\n"
     "and return types must be data types (Quantum Variables principle: each\n"
     "variable specifies its classical or quantum data type)."},
    {"E011", "duplicate name",
     "Class, type, member, lifeline and sequence names must be unambiguous;\n"
     "user type declarations may not shadow the built-in types."},
    {"E020", "under-marked quantum class",
     "A class that is quantum must be marked 'quantum'. Quantum Supremacy\n"
     "principle: a module with at least one quantum element is a quantum\n"
     "module and must be labelled as such. Quantum Aggregation principle: a\n"
     "module composed of quantum modules is itself quantum, and a subclass of\n"
     "a quantum superclass is quantum."},
    {"W021", "over-marked class",
     "The class is marked 'quantum' but no element, superclass or part makes\n"
     "it quantum (Quantum Supremacy principle: the label mirrors the model's\n"
     "actual quantum elements). Warning rather than error, since the marker\n"
     "may anticipate a quantum implementation not yet modeled."},
    {"E022", "element marker mismatch",
     "Quantum Variables principle: each variable is labelled classical or\n"
     "quantum together with a matching data type. A 'quantum' marker on an\n"
     "attribute whose type is classical contradicts the declaration."},
    {"E030", "under-marked message",
     "Quantum Communication principle: a message whose payload (call\n"
     "arguments or returned value) is quantum information is a quantum\n"
     "message and must be written 'qmsg' (drawn double-lined)."},
    {"E031", "over-marked message",
     "The message payload is entirely classical, so it can and should be\n"
     "communicated classically: write 'msg'. Quantum channels are reserved\n"
     "for payloads that need them."},
    {"E032", "quantum message with classical endpoint",
     "Quantum data can only be stored and transmitted by quantum modules;\n"
     "both the sender and the receiver of a quantum message must be quantum\n"
     "classes (Quantum Communication principle)."},
    {"E033", "unknown operation in message",
     "A call names a public operation of the receiver's class; a return\n"
     "names the public operation of the sender's class whose result flows\n"
     "back. Private operations are not part of the interface."},
    {"E040", "incompatible association",
     "Quantum Communication principle: a quantum class may associate with a\n"
     "classical class only if it exposes classical inputs and/or outputs —\n"
     "at least one public operation with an all-classical signature or one\n"
     "public classical attribute."},
    {"E050", "inheritance cycle",
     "Inheritance must form a hierarchy. A cycle makes superclass\n"
     "propagation (and the classes themselves) meaningless."},
}};

}  // namespace

std::optional<std::string> explain(std::string_view code) {
  for (const RuleText& rule : kRuleTable) {
    if (code == rule.code) {
      std::string out;
      out += rule.code;
      out += severity_for_code(rule.code) == Severity::error ? " (error): " : " (warning): ";
      out += rule.title;
      out += "\n\n";
      out += rule.body;
      out += "\n";
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace quml
