#pragma once

// The comonad C_n on pointed spaces.
//
// An element f ∈ C_n(X) is a map C_n(1) -> X satisfying property (D): on
// two cubes with disjoint interiors at most one value is away from the
// basepoint. Elements are symbolic terms that can be evaluated on any
// little cube; the term structure is what makes the cubical support
// exactly computable for the shipped constructors.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubeops/cubes.hpp"
#include "cubeops/loops.hpp"
#include "cubeops/operad.hpp"
#include "cubeops/points.hpp"

namespace cubeops {

/// Outcome of an exact cubical-support computation.
class SupportResult {
public:
    static SupportResult exact(std::optional<Rect> rect) { return SupportResult(true, std::move(rect)); }
    static SupportResult unsupported() { return SupportResult(false, std::nullopt); }

    bool is_exact() const { return exact_; }
    /// The support (absent = empty). Throws UnsupportedTerm when not exact.
    const std::optional<Rect>& rect() const
    {
        if (!exact_) {
            throw UnsupportedTerm();
        }
        return rect_;
    }

private:
    SupportResult(bool exact, std::optional<Rect> rect) : exact_(exact), rect_(std::move(rect)) {}

    bool exact_;
    std::optional<Rect> rect_;
};

/// A term denoting an element of C_n(X).
template <class X>
class CnTerm {
public:
    virtual ~CnTerm() = default;

    /// 0 for the dimension-agnostic trivial term.
    virtual std::size_t dim() const = 0;
    virtual X eval(const LittleCube& c) const = 0;
    /// Cubical support of d ↦ eval(e ∘ d). Exact where the term shape allows it.
    virtual SupportResult support_within(const LittleCube& e) const
    {
        (void)e;
        return SupportResult::unsupported();
    }
    virtual Json describe() const = 0;
    /// True when the value at c is * unless a fixed t lies in c̊, and otherwise depends only on c⁻¹(t).
    /// Rectilinear expansion about t leaves such elements unchanged.
    virtual bool peak_determined() const { return false; }
    /// Sphere points where the peak loop of a peak-determined term is known to leave the basepoint.
    virtual std::vector<SpherePoint> probes() const { return {}; }
};

template <class X>
class CnElem {
public:
    explicit CnElem(std::shared_ptr<const CnTerm<X>> term) : term_(std::move(term)) {}

    X operator()(const LittleCube& c) const
    {
        if (dim() != 0 && c.dim() != dim()) {
            throw DimensionMismatch("C_n element evaluated on a cube of the wrong dimension");
        }
        return term_->eval(c);
    }

    std::size_t dim() const { return term_->dim(); }
    const CnTerm<X>& term() const { return *term_; }
    Json describe() const { return term_->describe(); }

    /// Exact cubical support, or unsupported for opaque terms.
    SupportResult support() const
    {
        if (dim() == 0) {
            return SupportResult::exact(std::nullopt);
        }
        return term_->support_within(LittleCube::identity(dim()));
    }

private:
    std::shared_ptr<const CnTerm<X>> term_;
};

/// Deterministic cube test set for comparing elements of C_n(X) (cached; thread-safe).
const std::vector<LittleCube>& map_test_cubes(std::size_t n);

template <class X>
struct PointTraits<CnElem<X>>;

// ---------------------------------------------------------------------------
// Term constructors

namespace terms {

template <class X>
class Trivial final : public CnTerm<X> {
public:
    explicit Trivial(std::size_t dim) : dim_(dim) {}
    std::size_t dim() const override { return dim_; }
    X eval(const LittleCube&) const override { return base_point<X>(); }
    SupportResult support_within(const LittleCube&) const override { return SupportResult::exact(std::nullopt); }
    Json describe() const override { return Json{{"kind", "trivial"}, {"dim", dim_}}; }
    bool peak_determined() const override { return true; }

private:
    std::size_t dim_;
};

/// α[t, ℓ]: c ↦ ℓ(c⁻¹(t)) if t ∈ c̊, * otherwise.
template <class X>
class Peaked final : public CnTerm<X> {
public:
    Peaked(Coords t, LoopMap<X> loop) : t_(std::move(t)), loop_(std::move(loop))
    {
        if (!strictly_interior(t_)) {
            throw std::invalid_argument("peaked element needs an interior center");
        }
    }

    std::size_t dim() const override { return t_.size(); }

    X eval(const LittleCube& c) const override
    {
        if (!c.contains_open(t_)) {
            return base_point<X>();
        }
        return loop_(SpherePoint::at(c.invert(t_)));
    }

    SupportResult support_within(const LittleCube& e) const override
    {
        if (!e.contains_open(t_) || is_base(loop_)) {
            return SupportResult::exact(std::nullopt);
        }
        return SupportResult::exact(Rect::point(e.invert(t_)));
    }

    Json describe() const override { return Json{{"kind", "peaked"}, {"t", to_json(t_)}, {"loop", loop_.description()}}; }
    bool peak_determined() const override { return true; }
    std::vector<SpherePoint> probes() const override { return loop_.probes(); }

    const Coords& center() const { return t_; }
    const LoopMap<X>& loop() const { return loop_; }

private:
    Coords t_;
    LoopMap<X> loop_;
};

/// d ↦ f(c ∘ d); the value of Δ(f) at c.
template <class X>
class Precomposed final : public CnTerm<X> {
public:
    Precomposed(CnElem<X> base, LittleCube cube) : base_(std::move(base)), cube_(std::move(cube))
    {
        if (base_.dim() != 0 && base_.dim() != cube_.dim()) {
            throw DimensionMismatch("precomposition: dimension mismatch");
        }
    }

    std::size_t dim() const override { return cube_.dim(); }
    X eval(const LittleCube& d) const override { return base_(compose(cube_, d)); }
    SupportResult support_within(const LittleCube& e) const override
    {
        return base_.term().support_within(compose(cube_, e));
    }
    Json describe() const override
    {
        Json cube = Json::array();
        const Rect image = cube_.image();
        for (const auto& iv : image.intervals()) {
            cube.push_back(Json::array({iv.lo().to_string(), iv.hi().to_string()}));
        }
        return Json{{"kind", "precomposed"}, {"base", base_.describe()}, {"cube", cube}};
    }
    bool peak_determined() const override { return base_.term().peak_determined(); }
    std::vector<SpherePoint> probes() const override { return base_.term().probes(); }

private:
    CnElem<X> base_;
    LittleCube cube_;
};

/// c ↦ φ(f(c)); the functor action C_n(φ).
template <class X, class Y>
class PostMapped final : public CnTerm<Y> {
public:
    PostMapped(PointedMap<X, Y> phi, CnElem<X> base) : phi_(std::move(phi)), base_(std::move(base)) {}

    std::size_t dim() const override { return base_.dim(); }
    Y eval(const LittleCube& c) const override { return phi_(base_(c)); }
    SupportResult support_within(const LittleCube& e) const override
    {
        // Post-composition can enlarge the vanishing set unless φ reflects the basepoint.
        if (!phi_.base_reflecting()) {
            return SupportResult::unsupported();
        }
        return base_.term().support_within(e);
    }
    Json describe() const override { return Json{{"kind", "postmapped"}, {"map", phi_.label()}, {"base", base_.describe()}}; }
    bool peak_determined() const override { return base_.term().peak_determined(); }
    std::vector<SpherePoint> probes() const override { return base_.term().probes(); }

private:
    PointedMap<X, Y> phi_;
    CnElem<X> base_;
};

/// n = 1, valued in [0,1] pointed at 0: c ↦ max(0, width(c) − a), a ∈ [1/2, 1).
class Threshold final : public CnTerm<UnitPoint> {
public:
    explicit Threshold(Rational a);

    std::size_t dim() const override { return 1; }
    UnitPoint eval(const LittleCube& c) const override;
    SupportResult support_within(const LittleCube& e) const override;
    Json describe() const override { return Json{{"kind", "threshold"}, {"a", a_.to_string()}}; }

    const Rational& a() const { return a_; }

private:
    Rational a_;
};

/// Opaque evaluable element; property (D) is the caller's responsibility and is checked by the law suites.
template <class X>
class Custom final : public CnTerm<X> {
public:
    using Fn = std::function<X(const LittleCube&)>;
    using SupportFn = std::function<SupportResult(const LittleCube&)>;

    Custom(std::size_t dim, Fn fn, SupportFn support, Json description, bool peak_determined = false)
        : dim_(dim),
          fn_(std::move(fn)),
          support_(std::move(support)),
          description_(std::move(description)),
          peak_determined_(peak_determined)
    {
    }

    std::size_t dim() const override { return dim_; }
    X eval(const LittleCube& c) const override { return fn_(c); }
    SupportResult support_within(const LittleCube& e) const override
    {
        return support_ ? support_(e) : SupportResult::unsupported();
    }
    Json describe() const override { return description_; }
    bool peak_determined() const override { return peak_determined_; }

private:
    std::size_t dim_;
    Fn fn_;
    SupportFn support_;
    Json description_;
    bool peak_determined_;
};

}  // namespace terms

template <class X>
CnElem<X> trivial(std::size_t dim = 0)
{
    return CnElem<X>(std::make_shared<const terms::Trivial<X>>(dim));
}

template <class X>
CnElem<X> peaked(Coords t, LoopMap<X> loop)
{
    return CnElem<X>(std::make_shared<const terms::Peaked<X>>(std::move(t), std::move(loop)));
}

template <class X>
CnElem<X> precomposed(CnElem<X> f, LittleCube c)
{
    return CnElem<X>(std::make_shared<const terms::Precomposed<X>>(std::move(f), std::move(c)));
}

template <class X, class Y>
CnElem<Y> post_mapped(PointedMap<X, Y> phi, CnElem<X> f)
{
    return CnElem<Y>(std::make_shared<const terms::PostMapped<X, Y>>(std::move(phi), std::move(f)));
}

CnElem<UnitPoint> threshold(Rational a);

/// Without a support callback the exact support is unavailable and the oracle applies.
template <class X>
CnElem<X> custom(std::size_t dim, typename terms::Custom<X>::Fn fn,
                 typename terms::Custom<X>::SupportFn support = nullptr, Json description = Json{{"kind", "custom"}},
                 bool peak_determined = false)
{
    return CnElem<X>(std::make_shared<const terms::Custom<X>>(dim, std::move(fn), std::move(support),
                                                              std::move(description), peak_determined));
}

// ---------------------------------------------------------------------------
// Comonad structure

template <class X>
X eval(const CnElem<X>& f, const LittleCube& c)
{
    return f(c);
}

/// ε_X(f) = f(id).
template <class X>
X counit(const CnElem<X>& f)
{
    if (f.dim() == 0) {
        return base_point<X>();
    }
    return f(LittleCube::identity(f.dim()));
}

/// Δ_X(f)(c) = (d ↦ f(c ∘ d)).
template <class X>
CnElem<X> comultiply(const CnElem<X>& f, const LittleCube& c)
{
    if (f.dim() == 0) {
        return trivial<X>(c.dim());
    }
    return precomposed(f, c);
}

/// Δ_X(f) as an element of C_n(C_n(X)).
template <class X>
CnElem<CnElem<X>> comultiply(const CnElem<X>& f)
{
    const std::size_t n = f.dim();
    return custom<CnElem<X>>(
        n, [f](const LittleCube& c) { return comultiply(f, c); }, nullptr,
        Json{{"kind", "comultiplied"}, {"base", f.describe()}});
}

/// C_n(φ)(f) = φ ∘ f.
template <class X, class Y>
CnElem<Y> functor_map(const PointedMap<X, Y>& phi, const CnElem<X>& f)
{
    return post_mapped(phi, f);
}

/// f_r(θ) = (f(D_0 θ), ..., f(D_{r-1} θ)) as a point of the wedge. Throws
/// PropertyDViolation when two slots are non-base.
template <class X>
WedgePoint<X> expand_to_sequence(const CnElem<X>& f, const Configuration& theta)
{
    if (f.dim() != 0 && f.dim() != theta.dim()) {
        throw DimensionMismatch("expand_to_sequence: dimension mismatch");
    }
    std::optional<std::size_t> hit;
    X value = base_point<X>();
    for (std::size_t i = 0; i < theta.arity(); ++i) {
        X v = f(theta[i]);
        if (is_base(v)) {
            continue;
        }
        if (hit) {
            throw PropertyDViolation("slots " + std::to_string(*hit) + " and " + std::to_string(i) +
                                     " are both non-base");
        }
        hit = i;
        value = std::move(v);
    }
    if (!hit) {
        return WedgePoint<X>::base();
    }
    return WedgePoint<X>::at(*hit, std::move(value));
}

/// The C_n-coalgebra structure of an object A, as a map A -> C_n(A).
template <class A>
using CoalgebraMap = std::function<CnElem<A>(const A&)>;

/// Cofree adjunction: a pointed map φ: A -> X lifts to the coalgebra map a ↦ C(φ)(structure(a)).
template <class A, class X>
std::function<CnElem<X>(const A&)> cofree_lift(const PointedMap<A, X>& phi, CoalgebraMap<A> structure)
{
    return [phi, structure = std::move(structure)](const A& a) { return functor_map(phi, structure(a)); };
}

/// Inverse direction of the adjunction: ψ ↦ ε ∘ ψ.
template <class A, class X>
PointedMap<A, X> cofree_unlift(std::function<CnElem<X>(const A&)> psi)
{
    return PointedMap<A, X>([psi = std::move(psi)](const A& a) { return counit(psi(a)); }, false, "ε∘ψ");
}

// ---------------------------------------------------------------------------
// Equality in C_n(X): agreement on the cube test set

template <class X>
struct PointTraits<CnElem<X>> {
    static CnElem<X> base() { return trivial<X>(); }

    static bool is_base(const CnElem<X>& f)
    {
        if (f.dim() == 0) {
            return true;
        }
        for (const auto& c : map_test_cubes(f.dim())) {
            if (!cubeops::is_base(f(c))) {
                return false;
            }
        }
        return true;
    }

    static bool equal(const CnElem<X>& a, const CnElem<X>& b)
    {
        const std::size_t n = a.dim() != 0 ? a.dim() : b.dim();
        if (n == 0) {
            return true;
        }
        if (a.dim() != 0 && b.dim() != 0 && a.dim() != b.dim()) {
            return false;
        }
        for (const auto& c : map_test_cubes(n)) {
            if (!same_point(a(c), b(c))) {
                return false;
            }
        }
        return true;
    }

    static Json describe(const CnElem<X>& f) { return f.describe(); }
};

// ---------------------------------------------------------------------------
// The comonad of a general unitary operad, on arity-1 data

/// An element of C_P(X) given by its arity-1 component f_1; f_r is f_1 applied to each D_i.
template <AbstractOperad P, class X>
class GenericComonadElem {
public:
    using Element = typename P::Element;
    using Fn = std::function<X(const Element&)>;

    GenericComonadElem(P operad, Fn first) : operad_(std::move(operad)), first_(std::move(first)) {}

    X first(const Element& e) const { return first_(e); }

    /// f_r(θ); throws PropertyDViolation if two components are non-base.
    WedgePoint<X> operator()(const Element& theta) const
    {
        std::optional<std::size_t> hit;
        X value = base_point<X>();
        for (std::size_t i = 0; i < operad_.arity(theta); ++i) {
            X v = first_(operad_.extract(theta, i));
            if (is_base(v)) {
                continue;
            }
            if (hit) {
                throw PropertyDViolation("components " + std::to_string(*hit) + " and " + std::to_string(i) +
                                         " are both non-base");
            }
            hit = i;
            value = std::move(v);
        }
        return hit ? WedgePoint<X>::at(*hit, std::move(value)) : WedgePoint<X>::base();
    }

private:
    P operad_;
    Fn first_;
};

/// Builds the element with first component f_1 iff the family {f_1 D_i} lands in the
/// wedge and satisfies π_i f_r = f_{r-1} d_i on every sampled operation.
template <AbstractOperad P, class X>
std::optional<GenericComonadElem<P, X>> generic_comonad_element(const P& operad,
                                                                typename GenericComonadElem<P, X>::Fn first,
                                                                std::span<const typename P::Element> samples)
{
    GenericComonadElem<P, X> candidate(operad, std::move(first));
    for (const auto& theta : samples) {
        const std::size_t r = operad.arity(theta);
        try {
            const WedgePoint<X> full = candidate(theta);
            for (std::size_t i = 0; i < r; ++i) {
                if (!same_point(wedge_collapse(full, r, i), candidate(operad.restrict(theta, i)))) {
                    return std::nullopt;
                }
            }
        } catch (const PropertyDViolation&) {
            return std::nullopt;
        }
    }
    return candidate;
}

}  // namespace cubeops
