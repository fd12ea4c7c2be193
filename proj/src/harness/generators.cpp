#include "cubeops/harness/generators.hpp"

#include <algorithm>

namespace cubeops::harness {

namespace {

Rect slab(std::size_t dim, std::size_t axis, const Rational& lo, const Rational& hi)
{
    std::vector<Interval> ivs(dim, Interval::unit());
    ivs[axis] = Interval(lo, hi);
    return Rect(std::move(ivs));
}

Rect cube_rect(std::size_t dim, const Rational& lo, const Rational& hi)
{
    return Rect(std::vector<Interval>(dim, Interval(lo, hi)));
}

LittleCube cube_of(const Rect& r) { return LittleCube::from_image(r); }

}  // namespace

std::string kind_name(ElementKind k)
{
    switch (k) {
        case ElementKind::Trivial: return "trivial";
        case ElementKind::Peaked: return "peaked";
        case ElementKind::Precomposed: return "precomposed";
        case ElementKind::PostMapped: return "postmapped";
        case ElementKind::Threshold: return "threshold";
        case ElementKind::Box: return "box";
        case ElementKind::Expanded: return "expanded";
    }
    return "unknown";
}

std::vector<ElementKind> element_kinds(std::size_t dim)
{
    std::vector<ElementKind> out{ElementKind::Trivial, ElementKind::Peaked, ElementKind::Precomposed,
                                 ElementKind::PostMapped};
    if (dim == 1) {
        out.push_back(ElementKind::Threshold);
    }
    out.push_back(ElementKind::Box);
    out.push_back(ElementKind::Expanded);
    return out;
}

Rational Generator::interior() { return rng_.interior_rational(bits_); }

Rational Generator::between(const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) {
        throw std::invalid_argument("Generator::between: empty range");
    }
    const std::int64_t qmax = std::int64_t{1} << bits_;
    for (int attempt = 0; attempt < 16; ++attempt) {
        const std::int64_t q = rng_.between(2, qmax);
        const mpq_class lq = lo.raw() * q;
        const mpq_class hq = hi.raw() * q;
        mpz_class pmin;
        mpz_class pmax;
        mpz_fdiv_q(pmin.get_mpz_t(), lq.get_num_mpz_t(), lq.get_den_mpz_t());
        pmin += 1;
        mpz_cdiv_q(pmax.get_mpz_t(), hq.get_num_mpz_t(), hq.get_den_mpz_t());
        pmax -= 1;
        if (pmin <= pmax) {
            const mpz_class span = pmax - pmin + 1;
            const auto offset = static_cast<std::int64_t>(rng_.below(span.get_ui()));
            const mpz_class p = pmin + offset;
            return Rational(mpq_class(p, q));
        }
    }
    return midpoint(lo, hi);
}

Rational Generator::threshold_level()
{
    // a = 1/2 + u/2 with u ∈ [0, 1).
    const Rational u = rng_.below(4) == 0 ? Rational(0) : interior();
    return Rational(1, 2) + u / Rational(2);
}

std::vector<Coords> Generator::point_catalogue(std::size_t dim)
{
    std::vector<Coords> out;
    out.emplace_back(dim, Rational(1, 2));
    out.emplace_back(dim, Rational(1, 4));
    out.emplace_back(dim, Rational(3, 4));
    if (dim >= 2) {
        Coords equator(dim, Rational(1, 4));
        equator[0] = Rational(1, 2);
        out.push_back(equator);
        equator[0] = Rational(3, 4);
        equator[dim - 1] = Rational(1, 2);
        out.push_back(equator);
    }
    out.emplace_back(dim, Rational(1, 4096));
    out.emplace_back(dim, Rational(4095, 4096));
    return out;
}

std::vector<LittleCube> Generator::cube_catalogue(std::size_t dim)
{
    return {
        LittleCube::identity(dim),
        cube_of(slab(dim, 0, Rational(0), Rational(1, 2))),
        cube_of(slab(dim, 0, Rational(1, 2), Rational(1))),
        cube_of(cube_rect(dim, Rational(1, 4), Rational(3, 4))),
        cube_of(cube_rect(dim, Rational(0), Rational(1, 4))),
        cube_of(cube_rect(dim, Rational(3, 4), Rational(1))),
        cube_of(cube_rect(dim, Rational(0), Rational(1, 2))),
    };
}

std::vector<Configuration> Generator::configuration_catalogue(std::size_t dim, std::size_t r)
{
    std::vector<Configuration> out;
    if (r == 0) {
        out.push_back(Configuration::empty(dim));
    } else if (r == 1) {
        out.push_back(Configuration::unit(dim));
        out.push_back(Configuration::single(cube_of(slab(dim, 0, Rational(0), Rational(1, 2)))));
        out.push_back(Configuration::single(cube_of(cube_rect(dim, Rational(1, 4), Rational(3, 4)))));
    } else if (r == 2) {
        out.push_back(Configuration::slabs(dim, 2));
        out.emplace_back(dim, std::vector<LittleCube>{cube_of(slab(dim, 0, Rational(1, 4), Rational(1, 2))),
                                                      cube_of(slab(dim, 0, Rational(1, 2), Rational(3, 4)))});
        out.emplace_back(dim, std::vector<LittleCube>{cube_of(slab(dim, 0, Rational(1, 2), Rational(1))),
                                                      cube_of(slab(dim, 0, Rational(0), Rational(1, 2)))});
        if (dim >= 2) {
            out.emplace_back(dim, std::vector<LittleCube>{cube_of(cube_rect(dim, Rational(0), Rational(1, 2))),
                                                          cube_of(cube_rect(dim, Rational(1, 2), Rational(1)))});
        }
    } else {
        const Configuration s = Configuration::slabs(dim, r);
        out.push_back(s);
        std::vector<LittleCube> reversed(s.cubes().rbegin(), s.cubes().rend());
        out.emplace_back(dim, std::move(reversed));
    }
    return out;
}

Coords Generator::point(std::size_t index)
{
    const auto cat = point_catalogue(dim_);
    if (index < cat.size()) {
        return cat[index];
    }
    Coords out;
    for (std::size_t i = 0; i < dim_; ++i) {
        out.push_back(interior());
    }
    return out;
}

LittleCube Generator::random_cube()
{
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < dim_; ++i) {
        Rational lo = rng_.below(6) == 0 ? Rational(0) : interior();
        Rational hi = rng_.below(5) == 0 ? Rational(1) : between(lo, Rational(1));
        if (!(lo < hi)) {
            hi = Rational(1);
        }
        ivs.emplace_back(lo, hi);
    }
    return LittleCube::from_image(Rect(std::move(ivs)));
}

LittleCube Generator::cube(std::size_t index)
{
    const auto cat = cube_catalogue(dim_);
    if (index < cat.size()) {
        return cat[index];
    }
    return random_cube();
}

Configuration Generator::random_configuration(std::size_t r)
{
    std::vector<Rect> rects;
    if (r > 0) {
        rects.push_back(Rect::unit(dim_));
    }
    const Rational min_width(1, std::int64_t{1} << (bits_ > 3 ? bits_ - 3 : 0));
    while (rects.size() < r) {
        const std::size_t k = index_below(rects.size());
        std::size_t axis = index_below(dim_);
        // Prefer an axis wide enough to split with bounded denominators.
        for (std::size_t tries = 0; tries < dim_ && rects[k][axis].width() < min_width; ++tries) {
            axis = (axis + 1) % dim_;
        }
        const Interval iv = rects[k][axis];
        const Rational cut = between(iv.lo(), iv.hi());
        std::vector<Interval> left = rects[k].intervals();
        std::vector<Interval> right = left;
        left[axis] = Interval(iv.lo(), cut);
        right[axis] = Interval(cut, iv.hi());
        rects[k] = Rect(std::move(left));
        rects.emplace_back(std::move(right));
    }
    std::vector<LittleCube> cubes;
    for (const auto& rect : rects) {
        std::vector<Interval> ivs = rect.intervals();
        for (auto& iv : ivs) {
            if (rng_.below(3) == 0) {
                const Rational a = rng_.coin() ? iv.lo() : between(iv.lo(), iv.hi());
                const Rational b = rng_.coin() ? iv.hi() : between(a, iv.hi());
                iv = Interval(a, b);
            }
        }
        cubes.push_back(LittleCube::from_image(Rect(std::move(ivs))));
    }
    const Permutation shuffle = permutation(cubes.size());
    return act(Configuration(dim_, std::move(cubes)), shuffle);
}

Configuration Generator::configuration(std::size_t r, std::size_t index)
{
    const auto cat = configuration_catalogue(dim_, r);
    if (index < cat.size()) {
        return cat[index];
    }
    return random_configuration(r);
}

Permutation Generator::permutation(std::size_t r)
{
    std::vector<std::size_t> images(r);
    for (std::size_t i = 0; i < r; ++i) {
        images[i] = i;
    }
    for (std::size_t i = r; i > 1; --i) {
        std::swap(images[i - 1], images[index_below(i)]);
    }
    return Permutation(std::move(images));
}

Rect Generator::box()
{
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < dim_; ++i) {
        const Rational a = rng_.below(8) == 0 ? Rational(0) : interior();
        const Rational b = between(a, Rational(1));
        ivs.emplace_back(a, b);
    }
    return Rect(std::move(ivs));
}

LoopMap<UnitPoint> Generator::unit_loop(std::size_t index)
{
    if (index == 0) {
        return tent_loop(dim_);
    }
    if (index == 1) {
        return LoopMap<UnitPoint>::constant(dim_);
    }
    switch (rng_.below(8)) {
        case 0: return LoopMap<UnitPoint>::constant(dim_);
        case 1:
        case 2: return tent_loop(dim_);
        default: return cut_tent_loop(dim_, index_below(dim_), interior(), interior());
    }
}

LoopMap<Suspension<FinitePoint>> Generator::suspension_loop(std::size_t index)
{
    if (index == 0) {
        return generator_loop(dim_, FinitePoint{1});
    }
    if (index == 1) {
        return generator_loop(dim_, FinitePoint{2});
    }
    if (index == 2) {
        return LoopMap<Suspension<FinitePoint>>::constant(dim_);
    }
    switch (rng_.below(8)) {
        case 0: return LoopMap<Suspension<FinitePoint>>::constant(dim_);
        case 1:
        case 2:
        case 3: return generator_loop(dim_, FinitePoint{static_cast<unsigned>(1 + rng_.below(2))});
        default: {
            const auto z = static_cast<unsigned>(rng_.below(kThreePoints));
            const auto w = static_cast<unsigned>(rng_.below(kThreePoints));
            return piecewise_loop(dim_, index_below(dim_), interior(), z, w);
        }
    }
}

FinitePoint Generator::finite_point() { return FinitePoint{static_cast<unsigned>(rng_.below(kThreePoints))}; }

Suspension<FinitePoint> Generator::suspension_point(std::size_t index)
{
    if (index == 0) {
        return Suspension<FinitePoint>::base();
    }
    if (index <= 2) {
        return Suspension<FinitePoint>::make(Coords(dim_, Rational(1, 2)), FinitePoint{static_cast<unsigned>(index)});
    }
    if (rng_.below(10) == 0) {
        return Suspension<FinitePoint>::base();
    }
    return Suspension<FinitePoint>::make(point(index), FinitePoint{static_cast<unsigned>(1 + rng_.below(2))});
}

PointedMap<FinitePoint, FinitePoint> Generator::finite_self_map()
{
    const auto a = static_cast<unsigned>(rng_.below(kThreePoints));
    const auto b = static_cast<unsigned>(rng_.below(kThreePoints));
    return finite_map(a, b);
}

CnElem<UnitPoint> Generator::leaf_element(bool allow_threshold)
{
    const std::size_t choices = allow_threshold && dim_ == 1 ? 3 : 2;
    switch (rng_.below(choices)) {
        case 0: {
            const Coords t = point(point_catalogue(dim_).size());
            return peaked(t, unit_loop(2 + rng_.below(8)));
        }
        case 1: return box_element(box(), interior());
        default: return threshold(threshold_level());
    }
}

CnElem<UnitPoint> Generator::element(ElementKind kind, bool exact_center)
{
    switch (kind) {
        case ElementKind::Trivial: return trivial<UnitPoint>(dim_);
        case ElementKind::Peaked: {
            const Coords t = point(index_below(2 * point_catalogue(dim_).size()));
            return peaked(t, unit_loop(rng_.below(12)));
        }
        case ElementKind::Threshold:
            if (dim_ != 1) {
                throw DimensionMismatch("threshold elements exist only in dimension 1");
            }
            return threshold(threshold_level());
        case ElementKind::Box: return box_element(box(), interior());
        case ElementKind::Precomposed: {
            CnElem<UnitPoint> base = leaf_element(true);
            return precomposed(std::move(base), cube(index_below(2 * cube_catalogue(dim_).size())));
        }
        case ElementKind::PostMapped: {
            static const char* const kMaps[] = {"half", "square", "shift"};
            const std::size_t m = index_below(exact_center ? 2 : 3);
            return post_mapped(unit_map(kMaps[m]), leaf_element(true));
        }
        case ElementKind::Expanded: {
            CnElem<UnitPoint> base = exact_center ? (rng_.coin() ? element(ElementKind::Peaked)
                                                                 : precomposed(element(ElementKind::Peaked),
                                                                               random_cube()))
                                                  : leaf_element(true);
            const std::uint64_t pick = rng_.below(6);
            const Rational time = pick == 0 ? Rational(0) : (pick == 1 ? Rational(1) : interior());
            return homotopy_H(base, time);
        }
    }
    throw std::logic_error("unknown element kind");
}

}  // namespace cubeops::harness
