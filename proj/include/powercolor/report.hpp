#pragma once

#include "powercolor/coloring.hpp"
#include "powercolor/group.hpp"
#include "powercolor/perfectness.hpp"

#include "json.hpp"

namespace powercolor {

using Json = nlohmann::ordered_json;

/// order, exponent, full-exponent flag and the element-order histogram.
Json group_summary(const FiniteGroup &g);

/// Coloring report: assignment, palette size, per-color provenance, step log,
/// fallback events and the weak-stability verdict. Field order is fixed.
Json coloring_report(const FiniteGroup &g, const GroupColoring &gc, const WeakStabilityCheck &stability);

Json berge_report_json(const BergeReport &report);

} // namespace powercolor
