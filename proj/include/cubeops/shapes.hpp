#pragma once

// Named concrete loops, maps and elements over the unit interval and the
// three-point space. The CLI term language and the sample generators both
// build on these.

#include <cstddef>
#include <string>

#include "cubeops/approximation.hpp"

namespace cubeops {

/// s ↦ 2 min_i min(s_i, 1 - s_i) in [0,1] pointed at 0.
LoopMap<UnitPoint> tent_loop(std::size_t dim);

/// s ↦ v · tent(s) if s_k < cut, * otherwise. Interior cut in (0,1).
LoopMap<UnitPoint> cut_tent_loop(std::size_t dim, std::size_t axis, const Rational& cut, const Rational& scale);

/// Pointed self-maps of [0,1] by name: "half" (x/2), "square" (x²), "shift" (max(0, x - 1/8)).
/// The first two reflect the basepoint.
PointedMap<UnitPoint, UnitPoint> unit_map(const std::string& name);

/// c ↦ v if Im(c) ⊇ R, * otherwise. R must have positive width in every coordinate.
CnElem<UnitPoint> box_element(const Rect& r, const Rational& value);

/// The three-point space {*, 1, 2}.
inline constexpr unsigned kThreePoints = 3;

/// Σ^n(3-point) loop s ↦ [s, z] for s_k < cut and [s, w] otherwise (either label may be 0).
LoopMap<Suspension<FinitePoint>> piecewise_loop(std::size_t dim, std::size_t axis, const Rational& cut, unsigned z,
                                                unsigned w);

/// Pointed self-maps of the three-point space given by the images of 1 and 2.
PointedMap<FinitePoint, FinitePoint> finite_map(unsigned image_of_1, unsigned image_of_2);

}  // namespace cubeops
