#pragma once

// Pointed-space vocabulary.
//
// A pointed space is modelled by its point type X together with a
// PointTraits<X> specialization giving the basepoint, a basepoint test,
// exact point equality and a JSON description for reports. Points never
// hide a basepoint: constructors normalize [t, *], [∂I^n, x] and
// (slot, *) to the basepoint, so the quotients are baked into equality.

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubeops/cubes.hpp"
#include "cubeops/errors.hpp"
#include "cubeops/rational.hpp"

namespace cubeops {

using Json = nlohmann::json;

template <class X>
struct PointTraits;

template <class X>
concept PointedSpace = requires(const X& a, const X& b) {
    { PointTraits<X>::base() } -> std::same_as<X>;
    { PointTraits<X>::is_base(a) } -> std::same_as<bool>;
    { PointTraits<X>::equal(a, b) } -> std::same_as<bool>;
    { PointTraits<X>::describe(a) } -> std::same_as<Json>;
};

template <class X>
X base_point()
{
    return PointTraits<X>::base();
}

template <class X>
bool is_base(const X& x)
{
    return PointTraits<X>::is_base(x);
}

template <class X>
bool same_point(const X& a, const X& b)
{
    return PointTraits<X>::equal(a, b);
}

template <class X>
Json describe(const X& x)
{
    return PointTraits<X>::describe(x);
}

Json to_json(const Rational& r);
Json to_json(const Coords& x);

/// True iff every coordinate lies in the open interval (0, 1).
bool strictly_interior(const Coords& t);

// ---------------------------------------------------------------------------
// Spheres S^n = I^n / ∂I^n

class SpherePoint {
public:
    SpherePoint() = default;

    static SpherePoint base() { return {}; }
    /// Coordinates must lie in [0,1]; any coordinate on {0, 1} yields the basepoint.
    static SpherePoint at(Coords t);

    bool is_base() const { return coords_.empty(); }
    /// Interior coordinates; throws std::logic_error on the basepoint.
    const Coords& coords() const;

    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

private:
    explicit SpherePoint(Coords t) : coords_(std::move(t)) {}
    Coords coords_;
};

template <>
struct PointTraits<SpherePoint> {
    static SpherePoint base() { return SpherePoint::base(); }
    static bool is_base(const SpherePoint& p) { return p.is_base(); }
    static bool equal(const SpherePoint& a, const SpherePoint& b) { return a == b; }
    static Json describe(const SpherePoint& p);
};

// ---------------------------------------------------------------------------
// The unit interval pointed at 0

struct UnitPoint {
    UnitPoint() = default;
    explicit UnitPoint(Rational v);

    Rational value;

    friend bool operator==(const UnitPoint&, const UnitPoint&) = default;
};

template <>
struct PointTraits<UnitPoint> {
    static UnitPoint base() { return UnitPoint{}; }
    static bool is_base(const UnitPoint& p) { return p.value.is_zero(); }
    static bool equal(const UnitPoint& a, const UnitPoint& b) { return a == b; }
    static Json describe(const UnitPoint& p) { return to_json(p.value); }
};

// ---------------------------------------------------------------------------
// Finite pointed sets {0 = *, 1, ..., k-1}

struct FinitePoint {
    unsigned label = 0;

    friend bool operator==(const FinitePoint&, const FinitePoint&) = default;
};

template <>
struct PointTraits<FinitePoint> {
    static FinitePoint base() { return {}; }
    static bool is_base(const FinitePoint& p) { return p.label == 0; }
    static bool equal(const FinitePoint& a, const FinitePoint& b) { return a == b; }
    static Json describe(const FinitePoint& p) { return p.label; }
};

// ---------------------------------------------------------------------------
// Iterated suspensions Σ^n Y = S^n ∧ Y, points [t, y]

template <class Y>
class Suspension {
public:
    static Suspension base() { return Suspension(); }

    /// [t, y]; normalized to the basepoint when t ∈ ∂I^n or y is the basepoint of Y.
    static Suspension make(Coords t, Y y)
    {
        const SpherePoint s = SpherePoint::at(std::move(t));
        if (s.is_base() || cubeops::is_base(y)) {
            return base();
        }
        return Suspension(s.coords(), std::move(y));
    }

    /// [s, y] for a sphere point s.
    static Suspension make(const SpherePoint& s, Y y)
    {
        if (s.is_base()) {
            return base();
        }
        return make(s.coords(), std::move(y));
    }

    bool is_base() const { return !pair_.has_value(); }
    const Coords& t() const { return checked().first; }
    const Y& x() const { return checked().second; }
    SpherePoint sphere() const { return is_base() ? SpherePoint::base() : SpherePoint::at(t()); }

private:
    Suspension() = default;
    Suspension(Coords t, Y y) : pair_(std::in_place, std::move(t), std::move(y)) {}

    const std::pair<Coords, Y>& checked() const
    {
        if (!pair_) {
            throw std::logic_error("suspension basepoint has no coordinates");
        }
        return *pair_;
    }

    std::optional<std::pair<Coords, Y>> pair_;
};

template <class Y>
struct PointTraits<Suspension<Y>> {
    static Suspension<Y> base() { return Suspension<Y>::base(); }
    static bool is_base(const Suspension<Y>& p) { return p.is_base(); }
    static bool equal(const Suspension<Y>& a, const Suspension<Y>& b)
    {
        if (a.is_base() || b.is_base()) {
            return a.is_base() && b.is_base();
        }
        return a.t() == b.t() && same_point(a.x(), b.x());
    }
    static Json describe(const Suspension<Y>& p)
    {
        if (p.is_base()) {
            return Json{{"base", true}};
        }
        return Json{{"t", to_json(p.t())}, {"x", cubeops::describe(p.x())}};
    }
};

// ---------------------------------------------------------------------------
// Wedges X ∨ ... ∨ X (r copies), as the subspace of X^r with at most one
// non-base coordinate. Points are Base or (slot, x) with x non-base.

template <class X>
class WedgePoint {
public:
    static WedgePoint base() { return WedgePoint(); }

    /// Inclusion of the slot-th summand; normalized to the basepoint when x is.
    static WedgePoint at(std::size_t slot, X x)
    {
        if (cubeops::is_base(x)) {
            return base();
        }
        return WedgePoint(slot, std::move(x));
    }

    bool is_base() const { return !pair_.has_value(); }
    std::size_t slot() const { return checked().first; }
    const X& x() const { return checked().second; }

private:
    WedgePoint() = default;
    WedgePoint(std::size_t slot, X x) : pair_(std::in_place, slot, std::move(x)) {}

    const std::pair<std::size_t, X>& checked() const
    {
        if (!pair_) {
            throw std::logic_error("wedge basepoint has no slot");
        }
        return *pair_;
    }

    std::optional<std::pair<std::size_t, X>> pair_;
};

template <class X>
struct PointTraits<WedgePoint<X>> {
    static WedgePoint<X> base() { return WedgePoint<X>::base(); }
    static bool is_base(const WedgePoint<X>& p) { return p.is_base(); }
    static bool equal(const WedgePoint<X>& a, const WedgePoint<X>& b)
    {
        if (a.is_base() || b.is_base()) {
            return a.is_base() && b.is_base();
        }
        return a.slot() == b.slot() && same_point(a.x(), b.x());
    }
    static Json describe(const WedgePoint<X>& p)
    {
        if (p.is_base()) {
            return Json{{"base", true}};
        }
        return Json{{"slot", p.slot()}, {"x", cubeops::describe(p.x())}};
    }
};

// ---------------------------------------------------------------------------
// Pointed maps

template <class X, class Y>
class PointedMap {
public:
    using Fn = std::function<Y(const X&)>;

    /// `base_reflecting` declares φ(x) = * ⟹ x = *; it is trusted, not checked.
    explicit PointedMap(Fn fn, bool base_reflecting = false, std::string label = "map")
        : fn_(std::make_shared<const Fn>(std::move(fn))), base_reflecting_(base_reflecting), label_(std::move(label))
    {
    }

    static PointedMap identity()
        requires std::same_as<X, Y>
    {
        return PointedMap([](const X& x) { return x; }, true, "id");
    }

    static PointedMap constant_base()
    {
        return PointedMap([](const X&) { return base_point<Y>(); }, false, "const*");
    }

    Y operator()(const X& x) const
    {
        if (cubeops::is_base(x)) {
            return base_point<Y>();
        }
        return (*fn_)(x);
    }

    bool base_reflecting() const { return base_reflecting_; }
    const std::string& label() const { return label_; }

private:
    std::shared_ptr<const Fn> fn_;
    bool base_reflecting_;
    std::string label_;
};

/// (g ∘ f)(x) = g(f(x)).
template <class X, class Y, class Z>
PointedMap<X, Z> compose(const PointedMap<Y, Z>& g, const PointedMap<X, Y>& f)
{
    return PointedMap<X, Z>([g, f](const X& x) { return g(f(x)); }, g.base_reflecting() && f.base_reflecting(),
                            g.label() + "∘" + f.label());
}

// ---------------------------------------------------------------------------
// Wedge operations. `arity` is the number r of wedge summands.

namespace detail {

inline void check_wedge_index(std::size_t arity, std::size_t i, const char* op)
{
    if (i >= arity) {
        throw IndexOutOfRange(std::string(op) + ": slot " + std::to_string(i) + " out of range for wedge of " +
                              std::to_string(arity));
    }
}

template <class X>
void check_wedge_point(const WedgePoint<X>& w, std::size_t arity, const char* op)
{
    if (!w.is_base()) {
        check_wedge_index(arity, w.slot(), op);
    }
}

}  // namespace detail

/// π_i : X^{∨r} -> X^{∨(r-1)}, collapsing the i-th summand.
template <class X>
WedgePoint<X> wedge_collapse(const WedgePoint<X>& w, std::size_t arity, std::size_t i)
{
    detail::check_wedge_index(arity, i, "wedge_collapse");
    detail::check_wedge_point(w, arity, "wedge_collapse");
    if (w.is_base() || w.slot() == i) {
        return WedgePoint<X>::base();
    }
    return WedgePoint<X>::at(w.slot() < i ? w.slot() : w.slot() - 1, w.x());
}

/// q_i : X^{∨r} -> X, the projection onto the i-th summand.
template <class X>
X wedge_project(const WedgePoint<X>& w, std::size_t arity, std::size_t i)
{
    detail::check_wedge_index(arity, i, "wedge_project");
    detail::check_wedge_point(w, arity, "wedge_project");
    if (w.is_base() || w.slot() != i) {
        return base_point<X>();
    }
    return w.x();
}

/// μ_r : X^{∨r} -> X.
template <class X>
X fold(const WedgePoint<X>& w)
{
    return w.is_base() ? base_point<X>() : w.x();
}

/// σ · w: the summand at slot j moves to slot σ(j).
template <class X>
WedgePoint<X> permute_slots(const WedgePoint<X>& w, const Permutation& sigma)
{
    detail::check_wedge_point(w, sigma.size(), "permute_slots");
    if (w.is_base()) {
        return w;
    }
    return WedgePoint<X>::at(sigma(w.slot()), w.x());
}

/// f_0 ∨ ... ∨ f_{r-1}.
template <class X, class Y>
WedgePoint<Y> wedge_map(std::span<const PointedMap<X, Y>> maps, const WedgePoint<X>& w)
{
    detail::check_wedge_point(w, maps.size(), "wedge_map");
    if (w.is_base()) {
        return WedgePoint<Y>::base();
    }
    return WedgePoint<Y>::at(w.slot(), maps[w.slot()](w.x()));
}

// ---------------------------------------------------------------------------
// Suspension functor and the distributivity isomorphism

/// Σ^n φ : [t, x] ↦ [t, φ(x)].
template <class X, class Y>
PointedMap<Suspension<X>, Suspension<Y>> suspend_map(const PointedMap<X, Y>& phi)
{
    return PointedMap<Suspension<X>, Suspension<Y>>(
        [phi](const Suspension<X>& p) { return Suspension<Y>::make(p.t(), phi(p.x())); }, phi.base_reflecting(),
        "Σ" + phi.label());
}

/// S^n ∧ (Y ∨ ... ∨ Y) ≅ (S^n ∧ Y) ∨ ... ∨ (S^n ∧ Y): [t, (i, y)] ↦ (i, [t, y]).
template <class Y>
WedgePoint<Suspension<Y>> distribute(const Suspension<WedgePoint<Y>>& p)
{
    if (p.is_base()) {
        return WedgePoint<Suspension<Y>>::base();
    }
    return WedgePoint<Suspension<Y>>::at(p.x().slot(), Suspension<Y>::make(p.t(), p.x().x()));
}

template <class Y>
Suspension<WedgePoint<Y>> undistribute(const WedgePoint<Suspension<Y>>& w)
{
    if (w.is_base()) {
        return Suspension<WedgePoint<Y>>::base();
    }
    return Suspension<WedgePoint<Y>>::make(w.x().t(), WedgePoint<Y>::at(w.slot(), w.x().x()));
}

}  // namespace cubeops
