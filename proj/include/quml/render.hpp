#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quml/inference.hpp"

namespace quml {

// Byte-deterministic render target: no timestamps, no randomness, integer
// geometry only.
struct RenderDoc {
  enum class Format { dot, svg };
  Format format = Format::dot;
  std::string content;
  std::string diagram;  // "class" or the sequence diagram name
};

/// DOT digraph, one record-style node per class (name / attributes /
/// operations compartments as an HTML-like table). Quantum class names and
/// quantum members carry <b> markup; quantum relationships render as two
/// parallel strokes (color="black:invis:black"). Edge heads: hollow triangle
/// (inheritance), open diamond (aggregation), filled diamond (composition),
/// plain line (association).
RenderDoc render_class_diagram(const Model& m, const QuantumnessMap& q);

/// Standalone SVG with fixed layout: lifelines 160 units apart in
/// declaration order, messages 40 units apart top-to-bottom. Quantum-payload
/// messages are two parallel lines 2 units apart; returns dashed, calls
/// solid; one <g class="message ..."> group per message. nullopt when the
/// sequence diagram does not exist.
std::optional<RenderDoc> render_sequence_diagram(const Model& m, const QuantumnessMap& q,
                                                 std::string_view name);

}  // namespace quml
