#include "quml/inference.hpp"

#include <deque>

namespace quml {
namespace {

struct Edge {
  std::uint32_t dependent;  // class that becomes quantum when the origin is
  ProvenanceKind kind;
  std::uint32_t element;  // attribute index for via_attribute
};

ProvenanceKind kind_for_relationship(RelKind k) {
  switch (k) {
    case RelKind::inheritance: return ProvenanceKind::via_inheritance;
    case RelKind::composition: return ProvenanceKind::via_composition;
    case RelKind::aggregation: return ProvenanceKind::via_aggregation;
    case RelKind::association: break;
  }
  return ProvenanceKind::via_inheritance;  // unreachable; associations carry no edge
}

}  // namespace

QuantumnessMap infer(const Model& m) {
  const std::size_t n = m.classes.size();
  QuantumnessMap q;
  q.class_of.assign(n, Nature::classical);
  q.reason.assign(n, std::nullopt);
  q.attribute_of.resize(n);
  q.operation_of.resize(n);

  for (std::uint32_t c = 0; c < n; ++c) {
    for (const Attribute& a : m.classes[c].attributes) {
      q.attribute_of[c].push_back(element_quantumness(m, a));
    }
    for (const Operation& o : m.classes[c].operations) {
      q.operation_of[c].push_back(element_quantumness(m, o));
    }
  }

  // Propagation digraph: part -> whole (composition, aggregation, class-typed
  // attributes) and superclass -> subclass. Associations propagate nothing.
  std::vector<std::vector<Edge>> edges(n);
  for (const Relationship& r : m.relationships) {
    if (r.kind == RelKind::association) continue;
    edges[r.target].push_back({r.source, kind_for_relationship(r.kind), 0});
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    const auto& attrs = m.classes[c].attributes;
    for (std::uint32_t i = 0; i < attrs.size(); ++i) {
      if (attrs[i].dtype.kind == TypeRef::Kind::klass) {
        edges[attrs[i].dtype.index].push_back({c, ProvenanceKind::via_attribute, i});
      }
    }
  }

  std::deque<std::uint32_t> worklist;
  auto mark = [&](std::uint32_t c, QuantumnessMap::Reason reason) {
    if (q.class_of[c] == Nature::quantum) return;
    q.class_of[c] = Nature::quantum;
    q.reason[c] = reason;
    worklist.push_back(c);
  };

  // Seeds: classes with their own quantum element (first such member, in
  // declaration order, becomes the recorded justification).
  for (std::uint32_t c = 0; c < n; ++c) {
    bool seeded = false;
    for (std::uint32_t i = 0; i < q.attribute_of[c].size() && !seeded; ++i) {
      if (q.attribute_of[c][i] == Nature::quantum) {
        mark(c, {ProvenanceKind::own_attribute, c, i});
        seeded = true;
      }
    }
    for (std::uint32_t i = 0; i < q.operation_of[c].size() && !seeded; ++i) {
      if (q.operation_of[c][i] == Nature::quantum) {
        mark(c, {ProvenanceKind::own_operation, c, i});
        seeded = true;
      }
    }
  }

  // Monotone boolean fixpoint; each class enters the worklist at most once,
  // so this terminates after |classes| rounds at worst.
  while (!worklist.empty()) {
    const std::uint32_t origin = worklist.front();
    worklist.pop_front();
    for (const Edge& e : edges[origin]) {
      mark(e.dependent, {e.kind, origin, e.element});
    }
  }

  q.relationship_of.reserve(m.relationships.size());
  for (const Relationship& r : m.relationships) {
    q.relationship_of.push_back(classify_relationship(m, r, q));
  }
  return q;
}

Nature classify_relationship(const Model&, const Relationship& r, const QuantumnessMap& q) {
  switch (r.kind) {
    case RelKind::inheritance:    // target is the superclass
    case RelKind::composition:    // target is the part
    case RelKind::aggregation:
      return q.class_of[r.target];
    case RelKind::association:
      break;
  }
  return Nature::classical;
}

std::vector<ProvenanceStep> QuantumnessMap::provenance_chain(std::uint32_t class_index) const {
  std::vector<ProvenanceStep> chain;
  std::uint32_t c = class_index;
  while (reason[c].has_value()) {
    const Reason& r = *reason[c];
    chain.push_back({r.kind, c, r.via, r.element});
    if (r.kind == ProvenanceKind::own_attribute || r.kind == ProvenanceKind::own_operation) {
      break;  // chains terminate at a class with its own quantum element
    }
    c = r.via;
  }
  return chain;
}

std::string provenance_step_text(const Model& m, const ProvenanceStep& s) {
  switch (s.kind) {
    case ProvenanceKind::own_attribute: {
      const Attribute& a = m.classes[s.class_index].attributes[s.element];
      return "quantum attribute '" + a.name + ": " + type_ref_name(m, a.dtype) + "'";
    }
    case ProvenanceKind::own_operation: {
      const Operation& o = m.classes[s.class_index].operations[s.element];
      std::string text = "quantum operation '" + operation_signature(m, o) + "'";
      if (o.internal_quantum) text += " (internally quantum)";
      return text;
    }
    case ProvenanceKind::via_inheritance:
      return "quantum via inheritance from '" + m.classes[s.via].name + "'";
    case ProvenanceKind::via_composition:
      return "quantum via composition of '" + m.classes[s.via].name + "'";
    case ProvenanceKind::via_aggregation:
      return "quantum via aggregation of '" + m.classes[s.via].name + "'";
    case ProvenanceKind::via_attribute: {
      const Attribute& a = m.classes[s.class_index].attributes[s.element];
      return "quantum via attribute '" + a.name + "' of quantum class '" +
             m.classes[s.via].name + "'";
    }
  }
  return "";
}

std::string provenance_text(const Model& m, const QuantumnessMap& q, std::uint32_t class_index) {
  std::string out;
  for (const ProvenanceStep& step : q.provenance_chain(class_index)) {
    if (!out.empty()) out += " <- ";
    out += provenance_step_text(m, step);
  }
  return out;
}

}  // namespace quml
