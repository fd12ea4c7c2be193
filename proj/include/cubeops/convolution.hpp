#pragma once

// Convolution algebras: a coalgebra structure on X and fold maps on Y make
// the pointed maps X -> Y an algebra over C_n. For X = S^n this is the
// classical little-cubes action on Ω^n Y.

#include <span>
#include <vector>

#include "cubeops/coalgebra.hpp"

namespace cubeops {

/// The canonical fold maps μ_r; every pointed space is a commutative fold algebra.
template <class Y>
struct FoldAlgebra {
    Y operator()(const WedgePoint<Y>& w) const { return fold(w); }
};

/// x ↦ μ_r((f_0 ∨ ... ∨ f_{r-1})(Δ_r(θ, x))).
template <class X, class Y>
PointedMap<X, Y> convolution(const Configuration& theta, std::shared_ptr<const CoalgebraStructure<X>> delta,
                             std::vector<PointedMap<X, Y>> maps, FoldAlgebra<Y> mu = {})
{
    if (maps.size() != theta.arity()) {
        throw DimensionMismatch("convolution: expected one map per cube");
    }
    if (delta->dim() != theta.dim()) {
        throw DimensionMismatch("convolution: dimension mismatch");
    }
    return PointedMap<X, Y>(
        [theta, delta, maps = std::move(maps), mu](const X& x) {
            return mu(wedge_map(std::span<const PointedMap<X, Y>>(maps), delta->apply(theta, x)));
        },
        false, "convolution");
}

/// θ · (ℓ_0, ..., ℓ_{r-1}) : s ↦ μ_r((ℓ_0 ∨ ... ∨ ℓ_{r-1})(∇_r(θ)(s))).
template <class X>
LoopMap<X> may_action(const Configuration& theta, std::vector<LoopMap<X>> loops)
{
    if (loops.size() != theta.arity()) {
        throw DimensionMismatch("may_action: expected one loop per cube");
    }
    Json parts = Json::array();
    std::vector<SpherePoint> probes;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        parts.push_back(loops[i].description());
        for (const auto& p : loops[i].probes()) {
            probes.push_back(SpherePoint::at(theta[i].apply(p.coords())));
        }
    }
    return LoopMap<X>::custom(
        theta.dim(),
        [theta, loops = std::move(loops)](const SpherePoint& s) {
            const WedgePoint<SpherePoint> w = nabla_sphere(theta, s);
            return w.is_base() ? base_point<X>() : loops[w.slot()](w.x());
        },
        Json{{"kind", "may_action"}, {"arity", theta.arity()}, {"loops", parts}}, std::move(probes));
}

}  // namespace cubeops
