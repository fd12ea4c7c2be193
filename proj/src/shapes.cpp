#include "cubeops/shapes.hpp"

#include <stdexcept>

namespace cubeops {

namespace {

Rational tent_value(const Coords& s)
{
    Rational m(1);
    for (const auto& x : s) {
        m = min(m, min(x, Rational(1) - x));
    }
    return m * Rational(2);
}

Json rect_json(const Rect& r)
{
    Json out = Json::array();
    for (const auto& iv : r.intervals()) {
        out.push_back(Json::array({iv.lo().to_string(), iv.hi().to_string()}));
    }
    return out;
}

}  // namespace

LoopMap<UnitPoint> tent_loop(std::size_t dim)
{
    return LoopMap<UnitPoint>::custom(
        dim, [](const SpherePoint& s) { return UnitPoint(tent_value(s.coords())); }, Json{{"kind", "tent"}});
}

LoopMap<UnitPoint> cut_tent_loop(std::size_t dim, std::size_t axis, const Rational& cut, const Rational& scale)
{
    if (axis >= dim) {
        throw IndexOutOfRange("cut_tent_loop: axis out of range");
    }
    Coords probe(dim, Rational(1, 2));
    probe[axis] = cut / Rational(2);
    return LoopMap<UnitPoint>::custom(
        dim,
        [axis, cut, scale](const SpherePoint& s) {
            if (s.coords()[axis] >= cut) {
                return UnitPoint{};
            }
            return UnitPoint(scale * tent_value(s.coords()));
        },
        Json{{"kind", "cut_tent"}, {"axis", axis}, {"cut", cut.to_string()}, {"scale", scale.to_string()}},
        // The grid can miss a thin nonbase slab, so name one of its points.
        {SpherePoint::at(probe)});
}

PointedMap<UnitPoint, UnitPoint> unit_map(const std::string& name)
{
    if (name == "half") {
        return PointedMap<UnitPoint, UnitPoint>([](const UnitPoint& x) { return UnitPoint(x.value / Rational(2)); },
                                                true, "half");
    }
    if (name == "square") {
        return PointedMap<UnitPoint, UnitPoint>([](const UnitPoint& x) { return UnitPoint(x.value * x.value); }, true,
                                                "square");
    }
    if (name == "shift") {
        return PointedMap<UnitPoint, UnitPoint>(
            [](const UnitPoint& x) { return UnitPoint(max(Rational(0), x.value - Rational(1, 8))); }, false, "shift");
    }
    throw std::invalid_argument("unknown unit map: " + name);
}

CnElem<UnitPoint> box_element(const Rect& r, const Rational& value)
{
    for (const auto& iv : r.intervals()) {
        if (iv.width() <= Rational(0)) {
            throw std::invalid_argument("box element needs a rectangle of positive width");
        }
    }
    if (value <= Rational(0) || value > Rational(1)) {
        throw std::invalid_argument("box element value must lie in (0,1]");
    }
    const UnitPoint v(value);
    return custom<UnitPoint>(
        r.dim(), [r, v](const LittleCube& c) { return c.image().contains(r) ? v : UnitPoint{}; },
        [r](const LittleCube& e) {
            // d ↦ f(e ∘ d) is the box at e⁻¹(R) when R ⊆ Im(e), and trivial otherwise.
            if (!e.image().contains(r)) {
                return SupportResult::exact(std::nullopt);
            }
            std::vector<Interval> ivs;
            for (std::size_t i = 0; i < r.dim(); ++i) {
                ivs.emplace_back(e[i].invert(r[i].lo()), e[i].invert(r[i].hi()));
            }
            return SupportResult::exact(Rect(std::move(ivs)));
        },
        Json{{"kind", "box"}, {"rect", rect_json(r)}, {"value", value.to_string()}});
}

LoopMap<Suspension<FinitePoint>> piecewise_loop(std::size_t dim, std::size_t axis, const Rational& cut, unsigned z,
                                                unsigned w)
{
    if (axis >= dim) {
        throw IndexOutOfRange("piecewise_loop: axis out of range");
    }
    if (z >= kThreePoints || w >= kThreePoints) {
        throw std::invalid_argument("piecewise_loop: label outside the three-point space");
    }
    Coords below(dim, Rational(1, 2));
    Coords above(dim, Rational(1, 2));
    below[axis] = cut / Rational(2);
    above[axis] = (cut + Rational(1)) / Rational(2);
    return LoopMap<Suspension<FinitePoint>>::custom(
        dim,
        [axis, cut, z, w](const SpherePoint& s) {
            const unsigned label = s.coords()[axis] < cut ? z : w;
            return Suspension<FinitePoint>::make(s.coords(), FinitePoint{label});
        },
        Json{{"kind", "piecewise"}, {"axis", axis}, {"cut", cut.to_string()}, {"below", z}, {"above", w}},
        {SpherePoint::at(below), SpherePoint::at(above)});
}

PointedMap<FinitePoint, FinitePoint> finite_map(unsigned image_of_1, unsigned image_of_2)
{
    if (image_of_1 >= kThreePoints || image_of_2 >= kThreePoints) {
        throw std::invalid_argument("finite_map: label outside the three-point space");
    }
    const bool reflecting = image_of_1 != 0 && image_of_2 != 0;
    return PointedMap<FinitePoint, FinitePoint>(
        [image_of_1, image_of_2](const FinitePoint& x) { return FinitePoint{x.label == 1 ? image_of_1 : image_of_2}; },
        reflecting, "f" + std::to_string(image_of_1) + std::to_string(image_of_2));
}

}  // namespace cubeops
