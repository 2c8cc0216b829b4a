#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quml/inference.hpp"

namespace quml {

/// Checks a resolved model plus its quantumness map against the design
/// rules and returns the findings ordered by (file, span):
///
///   E020  class inferred quantum but not marked `quantum`
///   W021  class marked `quantum` with no quantum basis in the model
///   E030  `msg` whose payload is quantum
///   E031  `qmsg` whose payload is entirely classical
///   E032  quantum-payload message with a classical endpoint class
///   E033  message operation not public on the looked-up class
///   E040  classical/quantum association without a classical interface
///
/// E001/E002 (parser), E010/E011/E022/E050 (resolver) surface through the
/// same diagnostics channel upstream.
std::vector<Diagnostic> validate(const Model& m, const QuantumnessMap& q);

/// Rule text for a diagnostic code, citing the design principle it
/// mechanizes. nullopt for unknown codes.
std::optional<std::string> explain(std::string_view code);

}  // namespace quml
