#pragma once

#include <string>

#include "kset/instance.hpp"

namespace kset {

enum class View { Primal, Dual };

/// SVG 1.1 figure on an 800x600 canvas with a 5% margin.
///
/// Primal: instance points (class "point"), graph edges ("edge") and the
/// carrying line of the first edge as a k-set witness ("witness").
/// Dual: the n dual lines ("dual-line") clipped to the vertex bounding box
/// grown by 10% per side, one polyline per chain ("chain"), the k-level
/// ("level", heavy stroke) and V_{k-1} vertices as open circles ("turn").
///
/// Output bytes depend only on the input.
std::string render_svg(const Instance& inst, int k, View view);

}  // namespace kset
