#pragma once

// C_n-coalgebras in the coendomorphism sense: families of maps
// Δ_r : C_n(r) × X -> X^{∨r}. The sphere S^n carries the structure ∇
// (c, t) ↦ (i, c_i⁻¹(t)) for t ∈ c̊_i, which smashes with Y to give every
// iterated suspension Σ^n Y its coalgebra structure; the arity-2 face at
// the halves configuration is the pinch map.

#include <cstddef>
#include <memory>
#include <string>

#include "cubeops/comonad.hpp"

namespace cubeops {

template <class X>
class CoalgebraStructure {
public:
    virtual ~CoalgebraStructure() = default;

    virtual std::size_t dim() const = 0;
    virtual std::string name() const = 0;
    /// Δ_r(c, x) for a configuration c of arity r.
    virtual WedgePoint<X> apply(const Configuration& c, const X& x) const = 0;
    /// Exact cubical support of the arity-one slice d ↦ Δ_1(e ∘ d, x), when known.
    virtual SupportResult slice_support_within(const X& x, const LittleCube& e) const
    {
        (void)x;
        (void)e;
        return SupportResult::unsupported();
    }
    /// Whether every arity-one slice is peak-determined (see CnTerm::peak_determined).
    virtual bool slices_peak_determined() const { return false; }
};

/// ∇_r(c)(t): (i, c_i⁻¹(t)) when t is interior to c_i, the basepoint otherwise.
WedgePoint<SpherePoint> nabla_sphere(const Configuration& c, const SpherePoint& t);

/// ((S^n)^{∨r}) ∧ Y ≅ (Σ^n Y)^{∨r}: ((i, s), y) ↦ (i, [s, y]).
template <class Y>
WedgePoint<Suspension<Y>> smash_distribute(const WedgePoint<SpherePoint>& w, const Y& y)
{
    if (w.is_base()) {
        return WedgePoint<Suspension<Y>>::base();
    }
    return WedgePoint<Suspension<Y>>::at(w.slot(), Suspension<Y>::make(w.x(), y));
}

/// ∇ on Σ^n Y, the composite of ∇_r(c) ∧ id_Y with the distributivity isomorphism.
template <class Y>
WedgePoint<Suspension<Y>> nabla_suspension(const Configuration& c, const Suspension<Y>& p)
{
    if (p.is_base()) {
        return WedgePoint<Suspension<Y>>::base();
    }
    return smash_distribute(nabla_sphere(c, p.sphere()), p.x());
}

/// The pinch map Σ^n Y -> Σ^n Y ∨ Σ^n Y.
template <class Y>
WedgePoint<Suspension<Y>> pinch(std::size_t dim, const Suspension<Y>& p)
{
    return nabla_suspension(Configuration::slabs(dim, 2), p);
}

namespace detail {

inline SupportResult peak_support_within(const Coords& t, const LittleCube& e)
{
    if (!e.contains_open(t)) {
        return SupportResult::exact(std::nullopt);
    }
    return SupportResult::exact(Rect::point(e.invert(t)));
}

}  // namespace detail

class SphereCoalgebra final : public CoalgebraStructure<SpherePoint> {
public:
    explicit SphereCoalgebra(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const override { return dim_; }
    std::string name() const override { return "sphere"; }
    WedgePoint<SpherePoint> apply(const Configuration& c, const SpherePoint& t) const override
    {
        return nabla_sphere(c, t);
    }
    SupportResult slice_support_within(const SpherePoint& t, const LittleCube& e) const override
    {
        if (t.is_base()) {
            return SupportResult::exact(std::nullopt);
        }
        return detail::peak_support_within(t.coords(), e);
    }
    bool slices_peak_determined() const override { return true; }

private:
    std::size_t dim_;
};

template <class Y>
class SuspensionCoalgebra final : public CoalgebraStructure<Suspension<Y>> {
public:
    explicit SuspensionCoalgebra(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const override { return dim_; }
    std::string name() const override { return "suspension"; }
    WedgePoint<Suspension<Y>> apply(const Configuration& c, const Suspension<Y>& p) const override
    {
        return nabla_suspension(c, p);
    }
    SupportResult slice_support_within(const Suspension<Y>& p, const LittleCube& e) const override
    {
        if (p.is_base()) {
            return SupportResult::exact(std::nullopt);
        }
        return detail::peak_support_within(p.t(), e);
    }
    bool slices_peak_determined() const override { return true; }

private:
    std::size_t dim_;
};

/// ρ(x) = (θ ↦ μ_1(Δ_1(θ, x))): the comonadic structure of a coendomorphism coalgebra.
template <class X>
CnElem<X> coend_to_comonadic(std::shared_ptr<const CoalgebraStructure<X>> delta, const X& x)
{
    if (is_base(x)) {
        return trivial<X>(delta->dim());
    }
    const std::size_t n = delta->dim();
    return custom<X>(
        n, [delta, x](const LittleCube& c) { return fold(delta->apply(Configuration::single(c), x)); },
        [delta, x](const LittleCube& e) { return delta->slice_support_within(x, e); },
        Json{{"kind", "coend_slice"}, {"structure", delta->name()}, {"x", describe(x)}}, delta->slices_peak_determined());
}

/// The coendomorphism coalgebra of a comonadic structure map: Δ_r(θ, x) = ρ(x)_r(θ).
template <class X>
class ComonadicCoalgebra final : public CoalgebraStructure<X> {
public:
    ComonadicCoalgebra(std::size_t dim, CoalgebraMap<X> structure, std::string name = "comonadic")
        : dim_(dim), structure_(std::move(structure)), name_(std::move(name))
    {
    }

    std::size_t dim() const override { return dim_; }
    std::string name() const override { return name_; }
    WedgePoint<X> apply(const Configuration& theta, const X& x) const override
    {
        return expand_to_sequence(structure_(x), theta);
    }
    SupportResult slice_support_within(const X& x, const LittleCube& e) const override
    {
        return structure_(x).term().support_within(e);
    }

private:
    std::size_t dim_;
    CoalgebraMap<X> structure_;
    std::string name_;
};

template <class X>
std::shared_ptr<const CoalgebraStructure<X>> comonadic_to_coend(std::size_t dim, CoalgebraMap<X> structure)
{
    return std::make_shared<const ComonadicCoalgebra<X>>(dim, std::move(structure));
}

}  // namespace cubeops
