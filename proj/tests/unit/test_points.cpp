#include <doctest.h>

#include "cubeops/errors.hpp"
#include "cubeops/loops.hpp"
#include "cubeops/shapes.hpp"

using namespace cubeops;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

using Susp = Suspension<FinitePoint>;

}  // namespace

TEST_CASE("sphere points collapse the boundary")
{
    CHECK(SpherePoint::at({q(0), q(1, 2)}).is_base());
    CHECK(SpherePoint::at({q(1, 2), q(1)}).is_base());
    CHECK_FALSE(SpherePoint::at({q(1, 3), q(1, 2)}).is_base());
    CHECK_THROWS(SpherePoint::base().coords());
    CHECK(strictly_interior({q(1, 3)}));
    CHECK_FALSE(strictly_interior({q(1)}));
}

TEST_CASE("suspension normalization")
{
    CHECK(Susp::make({q(1, 2)}, FinitePoint{0}).is_base());
    CHECK(Susp::make({q(0)}, FinitePoint{1}).is_base());
    const Susp p = Susp::make({q(1, 2)}, FinitePoint{2});
    REQUIRE_FALSE(p.is_base());
    CHECK(p.x().label == 2);
    CHECK(same_point(Susp::make({q(1, 2)}, FinitePoint{2}), p));
    CHECK_FALSE(same_point(Susp::make({q(1, 3)}, FinitePoint{2}), p));
    CHECK(same_point(Susp::make({q(1)}, FinitePoint{1}), Susp::make({q(1, 2)}, FinitePoint{0})));
}

TEST_CASE("wedge operations")
{
    const auto w = WedgePoint<FinitePoint>::at(2, FinitePoint{1});
    CHECK(WedgePoint<FinitePoint>::at(1, FinitePoint{0}).is_base());
    CHECK(fold(w).label == 1);
    CHECK(wedge_project(w, 3, 2).label == 1);
    CHECK(wedge_project(w, 3, 0).label == 0);
    CHECK(wedge_collapse(w, 3, 2).is_base());
    CHECK(wedge_collapse(w, 3, 0).slot() == 1);
    CHECK(wedge_collapse(w, 3, 1).slot() == 1);
    CHECK(permute_slots(w, Permutation({2, 0, 1})).slot() == 1);
    CHECK_THROWS_AS(wedge_collapse(w, 2, 0), IndexOutOfRange);
    CHECK_THROWS_AS(wedge_project(w, 3, 3), IndexOutOfRange);
}

TEST_CASE("pointed maps send the basepoint to the basepoint")
{
    const PointedMap<FinitePoint, FinitePoint> f([](const FinitePoint&) { return FinitePoint{2}; }, false, "c2");
    CHECK(f(FinitePoint{0}).label == 0);
    CHECK(f(FinitePoint{1}).label == 2);
    const auto sf = suspend_map(f);
    CHECK(sf(Susp::make({q(1, 3)}, FinitePoint{1})).x().label == 2);
    CHECK(sf(Susp::base()).is_base());
    const auto g = finite_map(0, 1);
    CHECK_FALSE(g.base_reflecting());
    CHECK(g(FinitePoint{1}).label == 0);
    CHECK(finite_map(2, 1).base_reflecting());
    CHECK(compose(g, f)(FinitePoint{1}).label == 1);
}

TEST_CASE("distribute and undistribute are inverse")
{
    const auto p = Suspension<WedgePoint<FinitePoint>>::make({q(1, 4), q(2, 3)},
                                                             WedgePoint<FinitePoint>::at(1, FinitePoint{2}));
    const auto d = distribute(p);
    REQUIRE_FALSE(d.is_base());
    CHECK(d.slot() == 1);
    CHECK(d.x().t() == Coords{q(1, 4), q(2, 3)});
    CHECK(same_point(undistribute(d), p));
}

TEST_CASE("map test points")
{
    const auto& pts = map_test_points(2);
    // 3x3 grid, the basepoint and the seeded extras.
    CHECK(pts.size() == 9 + 1 + kMapTestRandomPoints);
    CHECK(&map_test_points(2) == &pts);
    std::size_t base = 0;
    for (const auto& p : pts) {
        base += p.is_base() ? 1 : 0;
    }
    CHECK(base == 1);
}

TEST_CASE("loops: basepoint and equality tests")
{
    const auto tent = tent_loop(1);
    CHECK_FALSE(is_base(tent));
    CHECK(is_base(LoopMap<UnitPoint>::constant(1)));
    CHECK(tent.at({q(1, 2)}).value > q(0));
    CHECK(tent(SpherePoint::base()).value == q(0));
    CHECK(same_point(tent, tent_loop(1)));
    CHECK_FALSE(same_point(tent, cut_tent_loop(1, 0, q(1, 2), q(1))));
}

TEST_CASE("probes expose a loop the grid misses")
{
    // Non-base only on s < 1/100, far from every grid point.
    const auto thin = cut_tent_loop(1, 0, q(1, 100), q(1));
    CHECK_FALSE(is_base(thin));
    const auto bare = LoopMap<UnitPoint>::custom(1, [&thin](const SpherePoint& s) { return thin(s); });
    CHECK(bare.at({q(1, 200)}).value > q(0));
    CHECK(thin.probes().size() == 1);
}

TEST_CASE("generator loops and post-composition")
{
    const auto g = generator_loop(2, FinitePoint{1});
    CHECK(g.at({q(1, 3), q(1, 2)}).t() == Coords{q(1, 3), q(1, 2)});
    CHECK(is_base(generator_loop(2, FinitePoint{0})));
    const auto h = loop_map(suspend_map(finite_map(2, 2)), g);
    CHECK(h.at({q(1, 3), q(1, 2)}).x().label == 2);
    const auto killed = loop_map(suspend_map(finite_map(0, 0)), g);
    CHECK(is_base(killed));
    CHECK(identity_loop(1).at({q(1, 3)}) == SpherePoint::at({q(1, 3)}));
}

TEST_CASE("equalizer membership")
{
    const auto g = generator_loop(1, FinitePoint{1});
    const auto f1 = suspend_map(finite_map(1, 2));
    const auto f2 = suspend_map(finite_map(1, 1));
    CHECK(equalizer_member(g, f1, f2, 1));
    CHECK_FALSE(equalizer_member(generator_loop(1, FinitePoint{2}), f1, f2, 1));
}
