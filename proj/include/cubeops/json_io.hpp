#pragma once

// JSON encodings. Rationals are "p/q" strings (integers may also be given
// as JSON numbers on input). A configuration is
//   {"dim": n, "cubes": [[["lo","hi"], ...], ...]}
// and a cube or rectangle is its list of [lo, hi] intervals.
//
// Element terms over the unit interval [0,1] pointed at 0:
//   {"kind": "trivial", "dim": n}
//   {"kind": "peaked", "t": [..], "loop": {"kind": "tent" | "constant"}}
//   {"kind": "threshold", "a": "3/4"}
//   {"kind": "box", "rect": [[lo, hi], ..], "value": "1/2"}
//   {"kind": "precomposed", "cube": [[lo, hi], ..], "base": term}
//   {"kind": "postmapped", "map": "half" | "square" | "shift", "base": term}
//   {"kind": "expanded", "time": "1/2", "base": term}

#include <stdexcept>

#include "cubeops/approximation.hpp"
#include "cubeops/cubes.hpp"
#include "cubeops/points.hpp"

namespace cubeops {

struct JsonFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Rational rational_from_json(const Json& j);
Coords coords_from_json(const Json& j);

Json rect_to_json(const Rect& r);
Rect rect_from_json(const Json& j);

Json cube_to_json(const LittleCube& c);
LittleCube cube_from_json(const Json& j);

Json config_to_json(const Configuration& c);
Configuration config_from_json(const Json& j);

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

/// A point of S^n: "base" or a coordinate list.
SpherePoint sphere_point_from_json(const Json& j);

CnElem<UnitPoint> unit_element_from_json(const Json& j);

/// Comma-separated rationals, e.g. "1/4,1/2".
Coords parse_coords(const std::string& text);

/// A cube as JSON text or as comma-separated "lo:hi" intervals, e.g. "1/4:1/2,0:1".
LittleCube parse_cube(const std::string& text);

}  // namespace cubeops
