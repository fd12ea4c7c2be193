#pragma once

// Deterministic sample generators. Every stream starts with a fixed
// catalogue of corner cases (identity cube, boundary-touching cubes,
// shared-face pairs, equator points) and continues with seeded values
// whose rationals have denominators at most 2^bits.

#include <cstddef>
#include <string>
#include <vector>

#include "cubeops/approximation.hpp"
#include "cubeops/cubes.hpp"
#include "cubeops/rng.hpp"
#include "cubeops/shapes.hpp"

namespace cubeops::harness {

/// Element constructors over the unit interval.
enum class ElementKind { Trivial, Peaked, Precomposed, PostMapped, Threshold, Box, Expanded };

std::string kind_name(ElementKind k);

/// All kinds available in dimension n (Threshold needs n = 1).
std::vector<ElementKind> element_kinds(std::size_t dim);

class Generator {
public:
    Generator(std::size_t dim, unsigned bits, std::uint64_t seed) : dim_(dim), bits_(bits), rng_(seed) {}

    std::size_t dim() const { return dim_; }
    unsigned bits() const { return bits_; }
    SplitMix64& rng() { return rng_; }

    /// Rational in (0,1) with denominator ≤ 2^bits.
    Rational interior();
    /// Rational in (lo, hi) with denominator ≤ 2^bits; lo < hi.
    Rational between(const Rational& lo, const Rational& hi);
    /// a ∈ [1/2, 1).
    Rational threshold_level();
    std::size_t index_below(std::size_t bound) { return static_cast<std::size_t>(rng_.below(bound)); }

    /// The `index`-th value of each stream: catalogue entries first, then random values.
    Coords point(std::size_t index);
    LittleCube cube(std::size_t index);
    /// Disjoint configuration of arity r, built by recursive splitting, shrinking and shuffling.
    Configuration configuration(std::size_t r, std::size_t index);
    Permutation permutation(std::size_t r);

    /// Rect with positive width in every coordinate.
    Rect box();

    LoopMap<UnitPoint> unit_loop(std::size_t index);
    LoopMap<Suspension<FinitePoint>> suspension_loop(std::size_t index);
    Suspension<FinitePoint> suspension_point(std::size_t index);
    FinitePoint finite_point();
    PointedMap<FinitePoint, FinitePoint> finite_self_map();

    /// `exact_center` restricts to elements whose support (and so center) is computed exactly.
    CnElem<UnitPoint> element(ElementKind kind, bool exact_center = true);

    static std::vector<Coords> point_catalogue(std::size_t dim);
    static std::vector<LittleCube> cube_catalogue(std::size_t dim);
    static std::vector<Configuration> configuration_catalogue(std::size_t dim, std::size_t r);

private:
    LittleCube random_cube();
    Configuration random_configuration(std::size_t r);
    CnElem<UnitPoint> leaf_element(bool allow_threshold);

    std::size_t dim_;
    unsigned bits_;
    SplitMix64 rng_;
};

}  // namespace cubeops::harness
