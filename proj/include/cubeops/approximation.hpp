#pragma once

// The approximation map α : Σ^n Ω^n -> C_n, its retraction Ψ, and the
// homotopy H between id and α∘Ψ built from rectilinear expansion.
//
// Cubical support: CSupp(f) is the intersection of Im(c) over all cubes c
// with f(c) != *. It is exact for symbolic terms and over-approximated by
// a sampling oracle otherwise. Cent(f) is the midpoint of the support.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubeops/comonad.hpp"

namespace cubeops {

// ---------------------------------------------------------------------------
// α

/// α[t, ℓ] = (c ↦ ℓ(c⁻¹(t)) if t ∈ c̊, * otherwise).
template <class X>
CnElem<X> alpha(const Coords& t, const LoopMap<X>& loop)
{
    return peaked(t, loop);
}

/// α on a point of Σ^n Ω^n X; the basepoint goes to the trivial element of dimension `dim`.
template <class X>
CnElem<X> alpha(const Suspension<LoopMap<X>>& p, std::size_t dim)
{
    if (p.is_base()) {
        return trivial<X>(dim);
    }
    return peaked(p.t(), p.x());
}

// ---------------------------------------------------------------------------
// The comonad Σ^n Ω^n

/// ε′[t, ℓ] = ℓ(t).
template <class X>
X sigma_omega_counit(const Suspension<LoopMap<X>>& p)
{
    if (p.is_base()) {
        return base_point<X>();
    }
    return p.x().at(p.t());
}

/// Δ′[t, ℓ] = [t, ℓ̄] with ℓ̄(s) = [s, ℓ].
template <class X>
Suspension<LoopMap<Suspension<LoopMap<X>>>> sigma_omega_comultiply(const Suspension<LoopMap<X>>& p)
{
    using Outer = Suspension<LoopMap<Suspension<LoopMap<X>>>>;
    if (p.is_base()) {
        return Outer::base();
    }
    return Outer::make(p.t(), bar_loop(p.x(), p.t().size()));
}

/// Σ^n Ω^n φ : [t, ℓ] ↦ [t, φ ∘ ℓ].
template <class X, class Y>
Suspension<LoopMap<Y>> sigma_omega_map(const PointedMap<X, Y>& phi, const Suspension<LoopMap<X>>& p)
{
    if (p.is_base()) {
        return Suspension<LoopMap<Y>>::base();
    }
    return Suspension<LoopMap<Y>>::make(p.t(), loop_map(phi, p.x()));
}

// ---------------------------------------------------------------------------
// Cubical support

/// Exact support; throws UnsupportedTerm for opaque terms.
template <class X>
std::optional<Rect> csupp(const CnElem<X>& f)
{
    return f.support().rect();
}

struct OracleSupport {
    std::optional<Rect> rect;    ///< intersection of the witness images; absent when no witness was seen
    std::size_t dim = 0;
    unsigned grid_level = 0;     ///< dyadic resolution 2^-grid_level of the grid part
    std::size_t evaluations = 0;
    std::size_t witnesses = 0;

    /// The over-approximation proper: a witness-free run bounds nothing tighter than I^n.
    Rect bound() const { return rect ? *rect : Rect::unit(dim); }
};

inline constexpr std::uint64_t kOracleSeed = 0x6f7261636c652d31ULL;  // "oracle-1"

/// Cube family used by csupp_oracle: every dyadic cube at the finest level
/// whose count fits in half the budget, then seeded random cubes.
std::vector<LittleCube> oracle_cubes(std::size_t dim, std::size_t budget, unsigned* grid_level = nullptr,
                                     std::uint64_t seed = kOracleSeed);

/// Intersection of Im(c) over the witnesses among the oracle cubes. It contains the
/// true support once some witness is found; bound() is safe in every case.
template <class X>
OracleSupport csupp_oracle(const CnElem<X>& f, std::size_t budget, std::uint64_t seed = kOracleSeed)
{
    OracleSupport out;
    out.dim = f.dim();
    if (f.dim() == 0) {
        return out;
    }
    const auto cubes = oracle_cubes(f.dim(), budget, &out.grid_level, seed);
    for (const auto& c : cubes) {
        ++out.evaluations;
        if (is_base(f(c))) {
            continue;
        }
        ++out.witnesses;
        if (!out.rect) {
            out.rect = c.image();
        } else {
            out.rect = rect_intersect(*out.rect, c.image());
            if (!out.rect) {
                // Impossible for elements satisfying property (D); report the empty intersection.
                break;
            }
        }
    }
    return out;
}

/// The support used by Ψ and H: exact when available, the oracle otherwise.
struct ResolvedSupport {
    std::optional<Rect> rect;
    bool exact = true;
};

inline constexpr std::size_t kDefaultOracleBudget = 10000;

template <class X>
ResolvedSupport resolve_support(const CnElem<X>& f, std::size_t budget = kDefaultOracleBudget)
{
    const SupportResult s = f.support();
    if (s.is_exact()) {
        return {s.rect(), true};
    }
    return {csupp_oracle(f, budget).rect, false};
}

/// Cent(f); throws UnsupportedTerm for opaque terms.
template <class X>
std::optional<Coords> center(const CnElem<X>& f)
{
    const auto r = csupp(f);
    if (!r) {
        return std::nullopt;
    }
    return rect_center(*r);
}

// ---------------------------------------------------------------------------
// c_{s,t} and Ψ

/// The boundary-touching cube with c(s) = t. t must be interior; s ∈ [0,1]^n.
LittleCube cube_st(const Coords& s, const Coords& t);

/// ℓ(s) = f(c_{s,p}). The loop probes p, where ℓ(p) = f(id), and the peak
/// probes of f, which carry over unchanged when f is peak-determined.
template <class X>
LoopMap<X> psi_loop(const CnElem<X>& f, const Coords& p)
{
    std::vector<SpherePoint> probes = f.term().probes();
    probes.push_back(SpherePoint::at(p));
    return LoopMap<X>::custom(
        p.size(), [f, p](const SpherePoint& s) { return f(cube_st(s.coords(), p)); },
        Json{{"kind", "psi"}, {"center", to_json(p)}, {"element", f.describe()}}, probes);
}

/// Ψ(f) = [Cent(f), s ↦ f(c_{s,Cent(f)})]; the basepoint when the support is empty.
template <class X>
Suspension<LoopMap<X>> psi(const CnElem<X>& f, std::size_t budget = kDefaultOracleBudget)
{
    const ResolvedSupport support = resolve_support(f, budget);
    if (!support.rect) {
        return Suspension<LoopMap<X>>::base();
    }
    const Coords p = rect_center(*support.rect);
    if (!strictly_interior(p)) {
        return Suspension<LoopMap<X>>::base();
    }
    return Suspension<LoopMap<X>>::make(p, psi_loop(f, p));
}

// ---------------------------------------------------------------------------
// Rectilinear expansion and the homotopy H

/// Path of cubes from c to c_{z,p}, z = c⁻¹(p), interpolating the interval
/// endpoints linearly; every cube on the path maps z to p.
class ExpansionPath {
public:
    /// p must lie in the closed image of c and strictly inside I^n.
    ExpansionPath(LittleCube source, Coords p);

    const LittleCube& source() const { return source_; }
    const Coords& fixed_point() const { return p_; }
    const Coords& preimage() const { return z_; }
    const LittleCube& target() const { return target_; }

    /// The cube at time τ ∈ [0,1].
    LittleCube at(const Rational& time) const;

private:
    LittleCube source_;
    Coords p_;
    Coords z_;
    LittleCube target_;
};

inline ExpansionPath expansion(const LittleCube& c, const Coords& p) { return ExpansionPath(c, p); }

namespace terms {

/// H(f, τ): c ↦ f(expansion(c, p)(τ)) when p = Cent(f) ∈ Im(c), * otherwise.
template <class X>
class Expanded final : public CnTerm<X> {
public:
    Expanded(CnElem<X> base, Rational time, Coords p, bool exact_center)
        : base_(std::move(base)), time_(std::move(time)), p_(std::move(p)), exact_center_(exact_center)
    {
    }

    std::size_t dim() const override { return base_.dim(); }

    X eval(const LittleCube& c) const override
    {
        if (!c.contains_closed(p_)) {
            return base_point<X>();
        }
        return base_(ExpansionPath(c, p_).at(time_));
    }

    SupportResult support_within(const LittleCube& e) const override
    {
        // H(f, 0) agrees with f once the center is exact; so does H(f, τ) for peak-determined f.
        if (exact_center_ && (time_.is_zero() || base_.term().peak_determined())) {
            return base_.term().support_within(e);
        }
        return SupportResult::unsupported();
    }

    Json describe() const override
    {
        return Json{{"kind", "expanded"}, {"time", time_.to_string()}, {"center", to_json(p_)}, {"base", base_.describe()}};
    }
    bool peak_determined() const override { return exact_center_ && base_.term().peak_determined(); }
    std::vector<SpherePoint> probes() const override { return base_.term().probes(); }

private:
    CnElem<X> base_;
    Rational time_;
    Coords p_;
    bool exact_center_;
};

}  // namespace terms

template <class X>
CnElem<X> homotopy_H(const CnElem<X>& f, const Rational& time, std::size_t budget = kDefaultOracleBudget)
{
    if (time < Rational(0) || time > Rational(1)) {
        throw std::invalid_argument("homotopy time outside [0,1]");
    }
    const ResolvedSupport support = resolve_support(f, budget);
    if (!support.rect) {
        return f;
    }
    Coords p = rect_center(*support.rect);
    if (!strictly_interior(p)) {
        throw std::domain_error("homotopy_H: center " + to_string(p) + " lies on the boundary of I^n");
    }
    return CnElem<X>(std::make_shared<const terms::Expanded<X>>(f, time, std::move(p), support.exact));
}

// ---------------------------------------------------------------------------
// α as a morphism of comonads

/// α² = α_{C(X)} ∘ Σ^n Ω^n(α_X) : Σ^n Ω^n Σ^n Ω^n X -> C_n C_n X.
template <class X>
CnElem<CnElem<X>> alpha_squared(const Suspension<LoopMap<Suspension<LoopMap<X>>>>& p, std::size_t dim)
{
    if (p.is_base()) {
        return trivial<CnElem<X>>(dim);
    }
    const LoopMap<Suspension<LoopMap<X>>> outer = p.x();
    const LoopMap<CnElem<X>> pushed = LoopMap<CnElem<X>>::custom(
        dim, [outer, dim](const SpherePoint& s) { return alpha(outer(s), dim); },
        Json{{"kind", "alpha_of"}, {"loop", outer.description()}});
    return peaked(p.t(), pushed);
}

template <class X>
struct MorphismSample {
    Coords t;
    LoopMap<X> loop;
    LittleCube c;
    LittleCube d;
};

struct MorphismReport {
    std::size_t checked = 0;
    std::vector<Json> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Evaluates both sides of ε∘α = ε′ and α²∘Δ′ = Δ∘α at every sample; the
/// comultiplication side is also compared with the closed form ℓ(γ(c; d)⁻¹(t)).
template <class X>
MorphismReport check_comonad_morphism(std::span<const MorphismSample<X>> samples)
{
    MorphismReport report;
    for (const auto& smp : samples) {
        ++report.checked;
        const std::size_t n = smp.t.size();
        const auto point = Suspension<LoopMap<X>>::make(smp.t, smp.loop);
        const CnElem<X> a = alpha(point, n);

        const X counit_lhs = counit(a);
        const X counit_rhs = sigma_omega_counit(point);

        const X comult_lhs = alpha_squared(sigma_omega_comultiply(point), n)(smp.c)(smp.d);
        const X comult_rhs = comultiply(a, smp.c)(smp.d);
        const LittleCube cd = compose(smp.c, smp.d);
        const X closed_form = cd.contains_open(smp.t) ? smp.loop.at(cd.invert(smp.t)) : base_point<X>();

        const bool counit_ok = same_point(counit_lhs, counit_rhs);
        const bool comult_ok = same_point(comult_lhs, comult_rhs) && same_point(comult_rhs, closed_form);
        if (!counit_ok || !comult_ok) {
            report.counterexamples.push_back(Json{
                {"t", to_json(smp.t)},
                {"loop", smp.loop.description()},
                {"counit", counit_ok},
                {"comultiplication", comult_ok},
                {"lhs", describe(comult_lhs)},
                {"rhs", describe(comult_rhs)},
            });
        }
    }
    return report;
}

}  // namespace cubeops
