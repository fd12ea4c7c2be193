#pragma once

#include <stdexcept>
#include <string>

namespace cubeops {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Raised when inverting a cube (or affine component) at a point outside its image.
struct NotInImage : std::domain_error {
    NotInImage() : std::domain_error("point not in cube image") {}
};

/// Little cubes in a configuration whose open images overlap.
struct OverlappingCubes : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two wedge slots are simultaneously non-base: the element is not in C_n(X).
struct PropertyDViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact cubical support is not available for this term; use the oracle.
struct UnsupportedTerm : std::logic_error {
    UnsupportedTerm() : std::logic_error("exact cubical support unavailable for term; use csupp_oracle") {}
};

}  // namespace cubeops
