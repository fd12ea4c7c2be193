#pragma once

// Deterministic SVG pictures for n ≤ 2. In dimension 1 the unit interval is
// drawn horizontally and each item gets its own row; in dimension 2 the
// unit square is drawn with the second coordinate pointing up.

#include <optional>
#include <string>
#include <vector>

#include "cubeops/approximation.hpp"

namespace cubeops::harness {

std::string render_configuration(const Configuration& c);

/// Frames of the expansion path of c about p at the given times.
std::string render_expansion(const LittleCube& c, const Coords& p, const std::vector<Rational>& times);

/// A shaded support rectangle with its center marked; `label` annotates the picture.
std::string render_support(std::size_t dim, const std::optional<Rect>& support, const std::string& label);

/// Dispatches on {"kind": "configuration" | "expansion" | "support", ...}:
///   configuration: {"config": {...}}
///   expansion:     {"c": [[lo, hi], ..], "p": [..], "times": [..]}
///   support:       {"element": term, "budget": k}
std::string render_json(const Json& input);

}  // namespace cubeops::harness
