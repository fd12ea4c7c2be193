#pragma once

// Recognition: from a C_n-coalgebra back to a suspension.
//
// S(X) is the set of points whose structure value has a single-point
// cubical support. On S(X) the structure factors through α via
// c′(x) = Ψ(c(x)) = [t, s ↦ c(x)(c_{s,t})], and r = ε∘α∘Ψ∘c retracts X
// onto S(X) through the homotopy ε∘H(c(x), τ).

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cubeops/approximation.hpp"
#include "cubeops/coalgebra.hpp"

namespace cubeops {

/// A C_n-coalgebra in comonadic form.
template <class X>
struct CnCoalgebra {
    std::size_t dim;
    std::string name;
    CoalgebraMap<X> structure;
};

/// A Σ^n Ω^n-coalgebra.
template <class X>
struct SigmaOmegaCoalgebra {
    std::size_t dim;
    std::string name;
    std::function<Suspension<LoopMap<X>>(const X&)> structure;
};

// ---------------------------------------------------------------------------
// Shipped instances

CnCoalgebra<SpherePoint> sphere_cn_coalgebra(std::size_t dim);
SigmaOmegaCoalgebra<SpherePoint> sphere_sigma_omega(std::size_t dim);

/// Σ^n Y with the ∇-induced structure.
template <class Y>
CnCoalgebra<Suspension<Y>> suspension_cn_coalgebra(std::size_t dim)
{
    auto delta = std::make_shared<const SuspensionCoalgebra<Y>>(dim);
    return {dim, "suspension", [delta](const Suspension<Y>& p) { return coend_to_comonadic<Suspension<Y>>(delta, p); }};
}

/// Σ^n Y with γ = Σ^n η_Y : [t, y] ↦ [t, s ↦ [s, y]].
template <class Y>
SigmaOmegaCoalgebra<Suspension<Y>> suspension_sigma_omega(std::size_t dim)
{
    return {dim, "suspension", [dim](const Suspension<Y>& p) {
                if (p.is_base()) {
                    return Suspension<LoopMap<Suspension<Y>>>::base();
                }
                return Suspension<LoopMap<Suspension<Y>>>::make(p.t(), generator_loop(dim, p.x()));
            }};
}

// ---------------------------------------------------------------------------
// Change of coalgebra along α

/// α_*: x ↦ α(γ(x)).
template <class X>
CnCoalgebra<X> pushforward_structure(const SigmaOmegaCoalgebra<X>& g)
{
    return {g.dim, g.name + "/pushforward", [g](const X& x) { return alpha(g.structure(x), g.dim); }};
}

// ---------------------------------------------------------------------------
// Cosplit equalizers

struct CosplitReport {
    std::size_t checked = 0;
    std::vector<Json> failures;
    bool ok() const { return failures.empty(); }
};

/// With p = γ, f = C(γ), g = Δ, h = ε_X and s = ε_{C(X)}, checks hp = id on
/// `points` and sg = id, sf = ph on `elements`.
template <class X>
CosplitReport cosplit_check(const CnCoalgebra<X>& a, std::span<const X> points, std::span<const CnElem<X>> elements)
{
    CosplitReport report;
    const PointedMap<X, CnElem<X>> gamma(a.structure, false, a.name);
    for (const auto& x : points) {
        ++report.checked;
        if (!same_point(counit(a.structure(x)), x)) {
            report.failures.push_back(Json{{"identity", "hp = id"}, {"x", describe(x)}});
        }
    }
    for (const auto& f : elements) {
        ++report.checked;
        if (!same_point(counit(comultiply(f)), f)) {
            report.failures.push_back(Json{{"identity", "sg = id"}, {"element", f.describe()}});
        }
        const CnElem<X> sf = counit(functor_map(gamma, f));
        const CnElem<X> ph = a.structure(counit(f));
        if (!same_point(sf, ph)) {
            report.failures.push_back(Json{{"identity", "sf = ph"}, {"element", f.describe()}});
        }
    }
    return report;
}

/// The same identities for the comonad Σ^n Ω^n.
template <class X>
CosplitReport cosplit_check(const SigmaOmegaCoalgebra<X>& a, std::span<const X> points,
                            std::span<const Suspension<LoopMap<X>>> elements)
{
    CosplitReport report;
    const PointedMap<X, Suspension<LoopMap<X>>> gamma(a.structure, false, a.name);
    for (const auto& x : points) {
        ++report.checked;
        if (!same_point(sigma_omega_counit(a.structure(x)), x)) {
            report.failures.push_back(Json{{"identity", "hp = id"}, {"x", describe(x)}});
        }
    }
    for (const auto& e : elements) {
        ++report.checked;
        if (!same_point(sigma_omega_counit(sigma_omega_comultiply(e)), e)) {
            report.failures.push_back(Json{{"identity", "sg = id"}, {"element", describe(e)}});
        }
        const auto sf = sigma_omega_counit(sigma_omega_map(gamma, e));
        const auto ph = a.structure(sigma_omega_counit(e));
        if (!same_point(sf, ph)) {
            report.failures.push_back(Json{{"identity", "sf = ph"}, {"element", describe(e)}});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// S(X), the retraction and the induced Σ^n Ω^n-structure

struct Membership {
    bool member = false;
    /// The support came from csupp_oracle rather than an exact computation.
    bool oracle_based = false;
    std::size_t budget = 0;
};

template <class X>
Membership in_S(const X& x, const CnCoalgebra<X>& a, std::size_t budget = kDefaultOracleBudget)
{
    if (is_base(x)) {
        return {true, false, 0};
    }
    const CnElem<X> f = a.structure(x);
    const SupportResult s = f.support();
    if (s.is_exact()) {
        return {s.rect().has_value() && s.rect()->is_point(), false, 0};
    }
    const OracleSupport o = csupp_oracle(f, budget);
    return {o.rect.has_value() && o.rect->is_point(), true, budget};
}

/// r(x) = ε(α(Ψ(c(x)))).
template <class X>
X retraction(const X& x, const CnCoalgebra<X>& a)
{
    return counit(alpha(psi(a.structure(x)), a.dim));
}

/// ε(H(c(x), τ)): x at τ = 0, r(x) at τ = 1.
template <class X>
X retraction_homotopy(const X& x, const CnCoalgebra<X>& a, const Rational& time)
{
    return counit(homotopy_H(a.structure(x), time));
}

/// c′(x) = Ψ(c(x)) for x ∈ S(X). Throws std::domain_error outside S(X).
template <class X>
Suspension<LoopMap<X>> induced_structure(const X& x, const CnCoalgebra<X>& a)
{
    if (!in_S(x, a).member) {
        throw std::domain_error("induced_structure: point is not in S(X)");
    }
    return psi(a.structure(x));
}

/// ℓ ∈ P_n(X): Ω^n γ(ℓ) and η(ℓ) agree, i.e. γ(ℓ(s)) = [s, ℓ] on the map test set.
template <class X>
bool pn_membership(const LoopMap<X>& l, const SigmaOmegaCoalgebra<X>& g)
{
    const std::size_t n = l.dim() != 0 ? l.dim() : g.dim;
    const PointedMap<X, Suspension<LoopMap<X>>> gamma(g.structure, false, g.name);
    const auto eta_l = bar_loop(l, n);
    for (const auto& s : map_test_points(n)) {
        if (!same_point(gamma(l(s)), eta_l(s))) {
            return false;
        }
    }
    return true;
}

}  // namespace cubeops
