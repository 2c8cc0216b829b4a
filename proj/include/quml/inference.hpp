#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quml/model.hpp"

namespace quml {

enum class ProvenanceKind {
  own_attribute,
  own_operation,
  via_inheritance,
  via_composition,
  via_aggregation,
  via_attribute,  // class-typed attribute of a quantum class
};

struct ProvenanceStep {
  ProvenanceKind kind = ProvenanceKind::own_attribute;
  std::uint32_t class_index = 0;  // the class this step classifies
  std::uint32_t via = 0;          // propagating neighbour, for via_* kinds
  std::uint32_t element = 0;      // attribute/operation index, when relevant
};

/// Classification of every class, member and relationship, plus one recorded
/// justification per quantum class from which a provenance chain can be
/// walked. Total over the model; immutable once computed.
struct QuantumnessMap {
  std::vector<Nature> class_of;                    // by class index
  std::vector<std::vector<Nature>> attribute_of;   // [class][attribute]
  std::vector<std::vector<Nature>> operation_of;   // [class][operation]
  std::vector<Nature> relationship_of;             // by relationship index

  struct Reason {
    ProvenanceKind kind;
    std::uint32_t via;
    std::uint32_t element;
  };
  std::vector<std::optional<Reason>> reason;  // set iff class is quantum

  bool class_quantum(std::uint32_t c) const { return class_of[c] == Nature::quantum; }

  // Chain from the class down to a class with its own quantum element;
  // empty for classical classes.
  std::vector<ProvenanceStep> provenance_chain(std::uint32_t class_index) const;
};

/// Least fixpoint of the propagation rules: a class is quantum iff it has a
/// quantum element, a quantum superclass, a quantum composed/aggregated part,
/// or a class-typed attribute of a quantum class. Declared markers are never
/// read. Terminates in at most |classes| rounds (monotone boolean lattice).
QuantumnessMap infer(const Model& m);

/// inheritance: quantum iff the superclass is quantum; composition and
/// aggregation: quantum iff the part is quantum; association: classical.
Nature classify_relationship(const Model& m, const Relationship& r, const QuantumnessMap& q);

std::string provenance_step_text(const Model& m, const ProvenanceStep& s);
// Steps joined with " <- "; empty string for classical classes.
std::string provenance_text(const Model& m, const QuantumnessMap& q, std::uint32_t class_index);

}  // namespace quml
