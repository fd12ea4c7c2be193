#pragma once

// Ω^n X: pointed maps S^n -> X, represented as evaluable closures.
//
// Equality of loops is never decided intensionally. Two loops are equal
// when they agree exactly on the map test set of their dimension: the
// grid {1/4, 1/2, 3/4}^n, the basepoint, and a fixed list of seeded
// pseudorandom interior points.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "cubeops/points.hpp"

namespace cubeops {

/// Number of seeded pseudorandom interior points appended to the grid.
inline constexpr std::size_t kMapTestRandomPoints = 8;

/// The deterministic sphere test set of dimension n (cached; thread-safe).
const std::vector<SpherePoint>& map_test_points(std::size_t n);

template <class X>
class LoopMap {
public:
    /// Evaluated only at interior points; the basepoint always goes to *.
    using Fn = std::function<X(const SpherePoint&)>;

    /// The constant loop at the basepoint. dim 0 means "any dimension".
    static LoopMap constant(std::size_t dim = 0) { return LoopMap(dim, nullptr, Json{{"kind", "constant"}}); }

    /// `probes` are extra interior points consulted, with the map test set, by the basepoint and equality tests.
    static LoopMap custom(std::size_t dim, Fn fn, Json description = Json{{"kind", "custom"}},
                          std::vector<SpherePoint> probes = {})
    {
        return LoopMap(dim, std::make_shared<const Fn>(std::move(fn)), std::move(description), std::move(probes));
    }

    X operator()(const SpherePoint& s) const
    {
        if (s.is_base() || !fn_) {
            return base_point<X>();
        }
        if (dim_ != 0 && s.coords().size() != dim_) {
            throw DimensionMismatch("loop evaluated at a point of the wrong dimension");
        }
        return (*fn_)(s);
    }

    X at(const Coords& s) const { return (*this)(SpherePoint::at(s)); }

    std::size_t dim() const { return dim_; }
    bool structurally_constant() const { return fn_ == nullptr; }
    const Json& description() const { return description_; }
    const std::vector<SpherePoint>& probes() const { return probes_; }

private:
    LoopMap(std::size_t dim, std::shared_ptr<const Fn> fn, Json description, std::vector<SpherePoint> probes = {})
        : dim_(dim), fn_(std::move(fn)), description_(std::move(description)), probes_(std::move(probes))
    {
    }

    std::size_t dim_;
    std::shared_ptr<const Fn> fn_;
    Json description_;
    std::vector<SpherePoint> probes_;
};

template <class X>
struct PointTraits<LoopMap<X>> {
    static LoopMap<X> base() { return LoopMap<X>::constant(); }

    static bool is_base(const LoopMap<X>& l)
    {
        if (l.structurally_constant() || l.dim() == 0) {
            return true;
        }
        for (const auto& s : map_test_points(l.dim())) {
            if (!cubeops::is_base(l(s))) {
                return false;
            }
        }
        for (const auto& s : l.probes()) {
            if (!cubeops::is_base(l(s))) {
                return false;
            }
        }
        return true;
    }

    static bool equal(const LoopMap<X>& a, const LoopMap<X>& b)
    {
        const std::size_t n = a.dim() != 0 ? a.dim() : b.dim();
        if (n == 0) {
            return true;
        }
        if (a.dim() != 0 && b.dim() != 0 && a.dim() != b.dim()) {
            return false;
        }
        const auto agree = [&](const SpherePoint& s) { return same_point(a(s), b(s)); };
        for (const auto& s : map_test_points(n)) {
            if (!agree(s)) {
                return false;
            }
        }
        for (const auto& s : a.probes()) {
            if (!agree(s)) {
                return false;
            }
        }
        for (const auto& s : b.probes()) {
            if (!agree(s)) {
                return false;
            }
        }
        return true;
    }

    static Json describe(const LoopMap<X>& l) { return l.description(); }
};

/// Generator loop s ↦ [s, z] in Ω^n Σ^n Z; this is the adjunction unit η_Z(z).
template <class Z>
LoopMap<Suspension<Z>> generator_loop(std::size_t dim, const Z& z)
{
    if (is_base(z)) {
        return LoopMap<Suspension<Z>>::constant(dim);
    }
    return LoopMap<Suspension<Z>>::custom(
        dim, [z](const SpherePoint& s) { return Suspension<Z>::make(s.coords(), z); },
        Json{{"kind", "generator"}, {"x", describe(z)}});
}

/// η_Z : Z -> Ω^n Σ^n Z.
template <class Z>
LoopMap<Suspension<Z>> adjunction_unit(std::size_t dim, const Z& z)
{
    return generator_loop(dim, z);
}

/// The identity S^n -> S^n as an element of Ω^n S^n.
LoopMap<SpherePoint> identity_loop(std::size_t dim);

/// ℓ̄ : s ↦ [s, ℓ] in Ω^n Σ^n Ω^n X.
template <class X>
LoopMap<Suspension<LoopMap<X>>> bar_loop(const LoopMap<X>& l, std::size_t dim)
{
    if (is_base(l)) {
        return LoopMap<Suspension<LoopMap<X>>>::constant(dim);
    }
    return LoopMap<Suspension<LoopMap<X>>>::custom(
        dim, [l](const SpherePoint& s) { return Suspension<LoopMap<X>>::make(s.coords(), l); },
        Json{{"kind", "bar"}, {"loop", l.description()}});
}

/// Ω^n φ: post-composition with a pointed map.
template <class X, class Y>
LoopMap<Y> loop_map(const PointedMap<X, Y>& phi, const LoopMap<X>& l)
{
    return LoopMap<Y>::custom(
        l.dim(), [phi, l](const SpherePoint& s) { return phi(l(s)); },
        Json{{"kind", "postcomposed"}, {"map", phi.label()}, {"loop", l.description()}}, l.probes());
}

/// ℓ ∈ Eq(f, g), decided pointwise on `samples`.
template <class X, class Y>
bool equalizer_member(const LoopMap<X>& l, const PointedMap<X, Y>& f, const PointedMap<X, Y>& g,
                      std::span<const SpherePoint> samples)
{
    for (const auto& s : samples) {
        const X x = l(s);
        if (!same_point(f(x), g(x))) {
            return false;
        }
    }
    return true;
}

/// As above, on the map test set of the loop's dimension (or `dim` for constant loops).
template <class X, class Y>
bool equalizer_member(const LoopMap<X>& l, const PointedMap<X, Y>& f, const PointedMap<X, Y>& g, std::size_t dim)
{
    return equalizer_member(l, f, g, std::span<const SpherePoint>(map_test_points(l.dim() != 0 ? l.dim() : dim)));
}

}  // namespace cubeops
