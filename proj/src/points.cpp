#include "cubeops/points.hpp"

#include <stdexcept>

namespace cubeops {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Coords& x)
{
    Json out = Json::array();
    for (const auto& xi : x) {
        out.push_back(xi.to_string());
    }
    return out;
}

bool strictly_interior(const Coords& t)
{
    for (const auto& ti : t) {
        if (ti <= Rational(0) || ti >= Rational(1)) {
            return false;
        }
    }
    return !t.empty();
}

SpherePoint SpherePoint::at(Coords t)
{
    if (t.empty()) {
        throw std::invalid_argument("sphere point needs at least one coordinate");
    }
    for (const auto& ti : t) {
        if (ti < Rational(0) || ti > Rational(1)) {
            throw std::invalid_argument("sphere coordinate " + ti.to_string() + " outside [0,1]");
        }
    }
    if (!strictly_interior(t)) {
        return base();
    }
    return SpherePoint(std::move(t));
}

const Coords& SpherePoint::coords() const
{
    if (is_base()) {
        throw std::logic_error("sphere basepoint has no interior coordinates");
    }
    return coords_;
}

Json PointTraits<SpherePoint>::describe(const SpherePoint& p)
{
    if (p.is_base()) {
        return Json{{"base", true}};
    }
    return Json{{"coords", to_json(p.coords())}};
}

UnitPoint::UnitPoint(Rational v) : value(std::move(v))
{
    if (value < Rational(0) || value > Rational(1)) {
        throw std::invalid_argument("unit interval point " + value.to_string() + " outside [0,1]");
    }
}

}  // namespace cubeops
