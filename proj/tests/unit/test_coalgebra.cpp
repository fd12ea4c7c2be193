#include <doctest.h>

#include "cubeops/coalgebra.hpp"
#include "cubeops/shapes.hpp"

using namespace cubeops;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }
using Susp = Suspension<FinitePoint>;

}  // namespace

TEST_CASE("nabla on the sphere rescales the hit cube")
{
    const Configuration halves = Configuration::slabs(2, 2);
    const auto w = nabla_sphere(halves, SpherePoint::at({q(3, 4), q(1, 3)}));
    REQUIRE_FALSE(w.is_base());
    CHECK(w.slot() == 1);
    CHECK(w.x().coords() == Coords{q(1, 2), q(1, 3)});
    // On the shared face no cube holds the point in its interior.
    CHECK(nabla_sphere(halves, SpherePoint::at({q(1, 2), q(1, 3)})).is_base());
    CHECK(nabla_sphere(halves, SpherePoint::base()).is_base());
    CHECK(nabla_sphere(Configuration::empty(2), SpherePoint::at({q(1, 2), q(1, 3)})).is_base());
}

TEST_CASE("pinch on a suspension")
{
    const Susp p = Susp::make({q(1, 8)}, FinitePoint{2});
    const auto w = pinch(1, p);
    REQUIRE_FALSE(w.is_base());
    CHECK(w.slot() == 0);
    CHECK(w.x().t() == Coords{q(1, 4)});
    CHECK(w.x().x().label == 2);
}

TEST_CASE("coend and comonadic forms agree")
{
    const auto delta = std::make_shared<const SuspensionCoalgebra<FinitePoint>>(1);
    const Susp p = Susp::make({q(2, 5)}, FinitePoint{1});
    const CnElem<Susp> f = coend_to_comonadic<Susp>(delta, p);
    CHECK(same_point(counit(f), p));
    CHECK(f.support().rect() == Rect::point({q(2, 5)}));
    const auto back = comonadic_to_coend<Susp>(1, [delta](const Susp& x) { return coend_to_comonadic<Susp>(delta, x); });
    const Configuration thirds(1, {LittleCube::from_image(Rect({Interval(q(0), q(1, 3))})),
                                   LittleCube::from_image(Rect({Interval(q(1, 3), q(2, 3))})),
                                   LittleCube::from_image(Rect({Interval(q(2, 3), q(1))}))});
    CHECK(same_point(back->apply(thirds, p), delta->apply(thirds, p)));
    CHECK(back->apply(thirds, p).slot() == 1);
    CHECK(coend_to_comonadic<Susp>(delta, Susp::base()).support().rect() == std::nullopt);
}

TEST_CASE("nabla is equivariant")
{
    const Configuration thirds(1, {LittleCube::from_image(Rect({Interval(q(0), q(1, 3))})),
                                   LittleCube::from_image(Rect({Interval(q(1, 3), q(2, 3))})),
                                   LittleCube::from_image(Rect({Interval(q(2, 3), q(1))}))});
    const Permutation s({2, 0, 1});
    for (const auto& t : {q(1, 6), q(1, 2), q(5, 6)}) {
        const SpherePoint x = SpherePoint::at({t});
        CHECK(same_point(nabla_sphere(act(thirds, s), x), permute_slots(nabla_sphere(thirds, x), s)));
    }
}
