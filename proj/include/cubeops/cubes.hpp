#pragma once

// The little n-cubes operad C_n.
//
// A little cube is a rectilinear embedding I^n -> I^n; an arity-r element
// (a configuration) is an ordered r-tuple of little cubes with pairwise
// disjoint open images. All slot indices in this API are 0-based.

#include <cstddef>
#include <span>
#include <vector>

#include "cubeops/geometry.hpp"

namespace cubeops {

class LittleCube {
public:
    explicit LittleCube(std::vector<AffineComponent> components);

    static LittleCube identity(std::size_t dim);
    /// The cube whose image is r; r must be non-degenerate in every coordinate.
    static LittleCube from_image(const Rect& r);

    std::size_t dim() const { return components_.size(); }
    const AffineComponent& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<AffineComponent>& components() const { return components_; }

    Rect image() const;
    Coords apply(const Coords& x) const;
    /// Throws NotInImage when y lies outside the closed image.
    Coords invert(const Coords& y) const;

    bool contains_open(const Coords& y) const;
    bool contains_closed(const Coords& y) const;

    friend bool operator==(const LittleCube&, const LittleCube&) = default;

private:
    std::vector<AffineComponent> components_;
};

/// (outer ∘ inner): re-scale inner into outer.
LittleCube compose(const LittleCube& outer, const LittleCube& inner);

/// Identity cube of dimension n.
LittleCube operad_unit(std::size_t n);

/// Bijection of {0, ..., r-1}; `image(i)` is σ(i).
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t r);
    static Permutation transposition(std::size_t r, std::size_t i, std::size_t j);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }
    const std::vector<std::size_t>& images() const { return images_; }
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// Functional composition (σ ∘ τ)(i) = σ(τ(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// Block sum τ_1 ⊕ ... ⊕ τ_r acting on consecutive blocks.
Permutation block_sum(std::span<const Permutation> blocks);

/// The permutation of sum(sizes) elements moving block j (of length sizes[j]) to block position σ(j).
Permutation block_permutation(const Permutation& sigma, std::span<const std::size_t> sizes);

/// An element of C_n(r). Construction rejects overlapping open images.
class Configuration {
public:
    Configuration(std::size_t dim, std::vector<LittleCube> cubes);

    /// The unique arity-0 element.
    static Configuration empty(std::size_t dim) { return Configuration(dim, {}); }
    static Configuration unit(std::size_t dim);
    /// The arity-1 configuration holding c.
    static Configuration single(LittleCube c);
    /// Slabs [k/r, (k+1)/r] x I^{n-1}; r = 2 is the pinch configuration.
    static Configuration slabs(std::size_t dim, std::size_t r);

    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return cubes_.size(); }
    const LittleCube& operator[](std::size_t i) const { return cubes_[i]; }
    const std::vector<LittleCube>& cubes() const { return cubes_; }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::size_t dim_;
    std::vector<LittleCube> cubes_;
};

/// c ∘_i d: replaces cube i by the composites c_i ∘ d_k, order preserved.
Configuration partial_compose(const Configuration& c, std::size_t i, const Configuration& d);

/// γ(c; d_0, ..., d_{r-1}).
Configuration full_compose(const Configuration& c, std::span<const Configuration> ds);

/// (c_0, ..., c_{r-1}) · σ = (c_{σ⁻¹(0)}, ..., c_{σ⁻¹(r-1)}).
/// With this formula act(act(c, τ), σ) == act(c, compose(σ, τ)).
Configuration act(const Configuration& c, const Permutation& sigma);

/// The restriction operator d_i: insert the arity-0 element at slot i.
Configuration restrict(const Configuration& c, std::size_t i);

/// D_i: the i-th little cube.
const LittleCube& extract(const Configuration& c, std::size_t i);

}  // namespace cubeops
