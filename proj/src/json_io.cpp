#include "cubeops/json_io.hpp"

#include <sstream>

#include "cubeops/shapes.hpp"

namespace cubeops {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw JsonFormatError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    throw JsonFormatError("expected a rational \"p/q\", got " + j.dump());
}

Coords coords_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw JsonFormatError("expected a coordinate list, got " + j.dump());
    }
    Coords out;
    for (const auto& x : j) {
        out.push_back(rational_from_json(x));
    }
    return out;
}

Json rect_to_json(const Rect& r)
{
    Json out = Json::array();
    for (const auto& iv : r.intervals()) {
        out.push_back(Json::array({iv.lo().to_string(), iv.hi().to_string()}));
    }
    return out;
}

Rect rect_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) {
        throw JsonFormatError("expected a list of [lo, hi] intervals, got " + j.dump());
    }
    std::vector<Interval> ivs;
    for (const auto& iv : j) {
        if (!iv.is_array() || iv.size() != 2) {
            throw JsonFormatError("expected an interval [lo, hi], got " + iv.dump());
        }
        ivs.emplace_back(rational_from_json(iv[0]), rational_from_json(iv[1]));
    }
    return Rect(std::move(ivs));
}

Json cube_to_json(const LittleCube& c) { return rect_to_json(c.image()); }

LittleCube cube_from_json(const Json& j) { return LittleCube::from_image(rect_from_json(j)); }

Json config_to_json(const Configuration& c)
{
    Json cubes = Json::array();
    for (const auto& cube : c.cubes()) {
        cubes.push_back(cube_to_json(cube));
    }
    return Json{{"dim", c.dim()}, {"cubes", cubes}};
}

Configuration config_from_json(const Json& j)
{
    const std::size_t dim = field(j, "dim").get<std::size_t>();
    std::vector<LittleCube> cubes;
    for (const auto& c : field(j, "cubes")) {
        LittleCube cube = cube_from_json(c);
        if (cube.dim() != dim) {
            throw DimensionMismatch("configuration cube has the wrong dimension");
        }
        cubes.push_back(std::move(cube));
    }
    return Configuration(dim, std::move(cubes));
}

Json permutation_to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const Json& j) { return Permutation(j.get<std::vector<std::size_t>>()); }

SpherePoint sphere_point_from_json(const Json& j)
{
    if (j.is_string() && j.get<std::string>() == "base") {
        return SpherePoint::base();
    }
    return SpherePoint::at(coords_from_json(j));
}

CnElem<UnitPoint> unit_element_from_json(const Json& j)
{
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "trivial") {
        return trivial<UnitPoint>(j.value("dim", std::size_t{0}));
    }
    if (kind == "peaked") {
        const Coords t = coords_from_json(field(j, "t"));
        const Json& loop = field(j, "loop");
        const std::string lk = loop.is_string() ? loop.get<std::string>() : field(loop, "kind").get<std::string>();
        if (lk == "tent") {
            return peaked(t, tent_loop(t.size()));
        }
        if (lk == "constant") {
            return peaked(t, LoopMap<UnitPoint>::constant(t.size()));
        }
        throw JsonFormatError("unknown loop kind: " + lk);
    }
    if (kind == "threshold") {
        return threshold(rational_from_json(field(j, "a")));
    }
    if (kind == "box") {
        return box_element(rect_from_json(field(j, "rect")), rational_from_json(field(j, "value")));
    }
    if (kind == "precomposed") {
        return precomposed(unit_element_from_json(field(j, "base")), cube_from_json(field(j, "cube")));
    }
    if (kind == "postmapped") {
        return post_mapped(unit_map(field(j, "map").get<std::string>()), unit_element_from_json(field(j, "base")));
    }
    if (kind == "expanded") {
        return homotopy_H(unit_element_from_json(field(j, "base")), rational_from_json(field(j, "time")));
    }
    throw JsonFormatError("unknown element kind: " + kind);
}

Coords parse_coords(const std::string& text)
{
    Coords out;
    for (const auto& part : split(text, ',')) {
        out.push_back(Rational::parse(part));
    }
    return out;
}

LittleCube parse_cube(const std::string& text)
{
    if (!text.empty() && text.front() == '[') {
        return cube_from_json(Json::parse(text));
    }
    std::vector<Interval> ivs;
    for (const auto& part : split(text, ',')) {
        const auto ends = split(part, ':');
        if (ends.size() != 2) {
            throw JsonFormatError("expected lo:hi, got \"" + part + "\"");
        }
        ivs.emplace_back(Rational::parse(ends[0]), Rational::parse(ends[1]));
    }
    return LittleCube::from_image(Rect(std::move(ivs)));
}

}  // namespace cubeops
