#include <doctest.h>

#include "cubeops/errors.hpp"
#include "cubeops/geometry.hpp"

using namespace cubeops;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

// Sample grid of k/12 in [0, 1], used as a pointwise oracle.
std::vector<Rational> grid()
{
    std::vector<Rational> g;
    for (int k = 0; k <= 12; ++k) {
        g.emplace_back(k, 12);
    }
    return g;
}

}  // namespace

TEST_CASE("interval validation")
{
    CHECK_NOTHROW(Interval(q(1, 2), q(1, 2)));
    CHECK_THROWS(Interval(q(3, 4), q(1, 4)));
    CHECK_THROWS(Interval(q(-1, 4), q(1, 4)));
    CHECK_THROWS(Interval(q(1, 4), q(5, 4)));
}

TEST_CASE("interval intersection matches pointwise membership")
{
    const auto g = grid();
    for (std::size_t a = 0; a < g.size(); a += 2) {
        for (std::size_t b = a; b < g.size(); b += 3) {
            for (std::size_t c = 0; c < g.size(); c += 3) {
                for (std::size_t d = c; d < g.size(); d += 2) {
                    const Interval x(g[a], g[b]);
                    const Interval y(g[c], g[d]);
                    const auto meet = interval_intersect(x, y);
                    bool open_meet = false;
                    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
                        // Midpoints of grid cells witness overlapping interiors.
                        const Rational m = midpoint(g[k], g[k + 1]);
                        open_meet = open_meet || (x.contains_open(m) && y.contains_open(m));
                    }
                    CHECK(interiors_meet(x, y) == open_meet);
                    for (const auto& t : g) {
                        const bool both = x.contains_closed(t) && y.contains_closed(t);
                        CHECK(both == (meet && meet->contains_closed(t)));
                    }
                }
            }
        }
    }
}

TEST_CASE("rect basics")
{
    const Rect r({Interval(q(1, 4), q(3, 4)), Interval(q(0), q(1, 2))});
    CHECK(r.dim() == 2);
    CHECK(rect_center(r) == Coords{q(1, 2), q(1, 4)});
    CHECK(r.contains_closed({q(1, 4), q(0)}));
    CHECK_FALSE(r.contains_open({q(1, 4), q(1, 4)}));
    CHECK(r.contains_open({q(1, 3), q(1, 4)}));
    CHECK(Rect::unit(2).contains(r));
    CHECK_FALSE(r.contains(Rect::unit(2)));
    CHECK(Rect::point({q(1, 3), q(2, 3)}).is_point());
    CHECK_FALSE(r.is_point());
    CHECK_THROWS_AS(rect_intersect(r, Rect::unit(3)), DimensionMismatch);
}

TEST_CASE("rect intersection of touching rects is a face")
{
    const Rect a({Interval(q(0), q(1, 2)), Interval::unit()});
    const Rect b({Interval(q(1, 2), q(1)), Interval::unit()});
    const auto m = rect_intersect(a, b);
    REQUIRE(m.has_value());
    CHECK((*m)[0].degenerate());
    CHECK_FALSE(interiors_meet(a, b));
    const Rect c({Interval(q(3, 4), q(1)), Interval(q(0), q(1, 4))});
    CHECK_FALSE(rect_intersect(a, c).has_value());
}

TEST_CASE("affine components")
{
    const AffineComponent h(q(1, 3), q(1, 2));
    CHECK(h.image() == Interval(q(1, 2), q(5, 6)));
    CHECK(h.apply(q(1, 2)) == q(2, 3));
    CHECK(h.invert(q(2, 3)) == q(1, 2));
    CHECK_THROWS_AS(h.invert(q(1, 4)), NotInImage);
    CHECK_THROWS(AffineComponent(q(0), q(0)));
    CHECK_THROWS(AffineComponent(q(1, 2), q(3, 4)));
    CHECK(AffineComponent::from_image(Interval(q(1, 4), q(1, 2))) == AffineComponent(q(1, 4), q(1, 4)));
}

TEST_CASE("affine composition is function composition")
{
    const auto g = grid();
    const std::vector<AffineComponent> maps{AffineComponent::identity(), {q(1, 2), q(0)}, {q(1, 3), q(1, 2)},
                                            {q(3, 4), q(1, 4)}, {q(1, 12), q(11, 12)}};
    for (const auto& f : maps) {
        for (const auto& h : maps) {
            const AffineComponent fh = affine_compose(f, h);
            for (const auto& t : g) {
                CHECK(fh.apply(t) == f.apply(h.apply(t)));
                CHECK(fh.invert(fh.apply(t)) == t);
            }
        }
    }
}
