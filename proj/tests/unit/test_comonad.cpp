#include <doctest.h>

#include "cubeops/comonad.hpp"
#include "cubeops/errors.hpp"
#include "cubeops/shapes.hpp"

using namespace cubeops;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

LittleCube seg(std::int64_t a, std::int64_t b, std::int64_t d)
{
    return LittleCube::from_image(Rect({Interval(q(a, d), q(b, d))}));
}

// tent(s) = 2 min(s, 1 - s) in one dimension.
Rational tent1(const Rational& s) { return q(2) * cubeops::min(s, q(1) - s); }

}  // namespace

TEST_CASE("peaked elements evaluate the loop at the preimage of the peak")
{
    const auto f = peaked<UnitPoint>({q(1, 3)}, tent_loop(1));
    CHECK(counit(f).value == tent1(q(1, 3)));
    // [1/4, 1/2] maps 1/3 back to 1/3.
    CHECK(f(seg(1, 2, 4)).value == tent1(q(1, 3)));
    CHECK(f(seg(0, 1, 2)).value == tent1(q(2, 3)));
    CHECK(f(seg(1, 2, 2)).value == q(0));
    // The peak on the boundary of the cube counts as outside.
    CHECK(f(seg(1, 3, 3)).value == q(0));
    CHECK_THROWS(peaked<UnitPoint>({q(1)}, tent_loop(1)));
}

TEST_CASE("threshold elements")
{
    const auto f = threshold(q(3, 4));
    CHECK(f(LittleCube::identity(1)).value == q(1, 4));
    CHECK(f(seg(0, 7, 8)).value == q(1, 8));
    CHECK(f(seg(0, 3, 4)).value == q(0));
    CHECK_THROWS(threshold(q(1, 4)));
    CHECK_THROWS(threshold(q(1)));
}

TEST_CASE("comonad structure on a peaked element")
{
    const auto f = peaked<UnitPoint>({q(1, 3)}, tent_loop(1));
    const LittleCube c = seg(0, 1, 2);
    const LittleCube d = seg(1, 3, 4);
    CHECK(comultiply(f, c)(d).value == f(compose(c, d)).value);
    CHECK(counit(comultiply(f, c)).value == f(c).value);
    CHECK(same_point(counit(comultiply(f)), f));
    const auto phi = unit_map("half");
    CHECK(functor_map(phi, f)(c).value == f(c).value / q(2));
}

TEST_CASE("exact supports of the symbolic constructors")
{
    const auto f = peaked<UnitPoint>({q(1, 3), q(1, 2)}, tent_loop(2));
    CHECK(f.support().rect() == Rect::point({q(1, 3), q(1, 2)}));
    CHECK_FALSE(trivial<UnitPoint>(2).support().rect().has_value());
    CHECK_FALSE(peaked<UnitPoint>({q(1, 3)}, LoopMap<UnitPoint>::constant(1)).support().rect().has_value());
    CHECK(threshold(q(2, 3)).support().rect() == Rect({Interval(q(1, 3), q(2, 3))}));

    const LittleCube c = LittleCube::from_image(Rect({Interval(q(0), q(1, 2)), Interval(q(1, 4), q(3, 4))}));
    // Peak at (1/3, 1/2) pulls back to (2/3, 1/2).
    CHECK(precomposed(f, c).support().rect() == Rect::point({q(2, 3), q(1, 2)}));
    const LittleCube away = LittleCube::from_image(Rect({Interval(q(1, 2), q(1)), Interval::unit()}));
    CHECK_FALSE(precomposed(f, away).support().rect().has_value());

    CHECK(post_mapped(unit_map("square"), f).support().rect() == Rect::point({q(1, 3), q(1, 2)}));
    CHECK_FALSE(post_mapped(unit_map("shift"), f).support().is_exact());
    CHECK_THROWS_AS(post_mapped(unit_map("shift"), f).support().rect(), UnsupportedTerm);
    CHECK_FALSE(custom<UnitPoint>(1, [](const LittleCube&) { return UnitPoint{}; }).support().is_exact());
}

TEST_CASE("box elements")
{
    const Rect r({Interval(q(1, 4), q(1, 2))});
    const auto f = box_element(r, q(1, 2));
    CHECK(f(seg(0, 1, 2)).value == q(1, 2));
    CHECK(f(seg(1, 3, 8)).value == q(0));
    CHECK(f.support().rect() == r);
    CHECK(precomposed(f, seg(0, 1, 2)).support().rect() == Rect({Interval(q(1, 2), q(1))}));
}

TEST_CASE("expanding to a sequence finds the one non-base slot")
{
    const auto f = peaked<UnitPoint>({q(1, 3)}, tent_loop(1));
    const Configuration thirds(1, {seg(0, 1, 3), seg(1, 2, 3), seg(2, 3, 3)});
    CHECK(expand_to_sequence(f, thirds).is_base());
    const Configuration halves = Configuration::slabs(1, 2);
    const auto w = expand_to_sequence(f, halves);
    REQUIRE_FALSE(w.is_base());
    CHECK(w.slot() == 0);
    CHECK(w.x().value == tent1(q(2, 3)));

    const auto everywhere = custom<UnitPoint>(1, [](const LittleCube&) { return UnitPoint(q(1, 2)); });
    CHECK_THROWS_AS(expand_to_sequence(everywhere, halves), PropertyDViolation);
}

TEST_CASE("element equality uses the cube test set")
{
    const auto f = peaked<UnitPoint>({q(1, 3)}, tent_loop(1));
    const auto g = precomposed(peaked<UnitPoint>({q(2, 3)}, tent_loop(1)), seg(0, 1, 2));
    // g(d) = tent(d⁻¹(c⁻¹(2/3))) needs 1/3 in d; the peaks differ, so the elements do too.
    CHECK_FALSE(same_point(f, g));
    const auto h = precomposed(peaked<UnitPoint>({q(1, 6)}, tent_loop(1)), seg(0, 1, 2));
    CHECK(same_point(f, h));
    CHECK(is_base(trivial<UnitPoint>(1)));
    CHECK_FALSE(is_base(f));
    CHECK(map_test_cubes(2).size() > 16);
}

TEST_CASE("cofree adjunction round trip")
{
    const CoalgebraMap<UnitPoint> structure = [](const UnitPoint& x) {
        return x.value.is_zero() ? trivial<UnitPoint>(1) : box_element(Rect({Interval(q(1, 4), q(3, 4))}), x.value);
    };
    const auto phi = unit_map("half");
    const auto lifted = cofree_lift(phi, structure);
    const auto back = cofree_unlift<UnitPoint, UnitPoint>(lifted);
    for (const auto& v : {q(0), q(1, 3), q(1)}) {
        CHECK(back(UnitPoint(v)).value == phi(UnitPoint(v)).value);
    }
}

TEST_CASE("generic comonad over the one-point operad keeps only the trivial element")
{
    const OnePointOperad one;
    std::vector<OnePointOperad::Element> samples;
    for (std::size_t r = 0; r <= 4; ++r) {
        samples.push_back(one.operation(r));
    }
    const auto rejected = generic_comonad_element<OnePointOperad, FinitePoint>(
        one, [](const OnePointOperad::Element&) { return FinitePoint{1}; }, samples);
    CHECK_FALSE(rejected.has_value());
    const auto accepted = generic_comonad_element<OnePointOperad, FinitePoint>(
        one, [](const OnePointOperad::Element&) { return FinitePoint{0}; }, samples);
    CHECK(accepted.has_value());
}

TEST_CASE("generic comonad over little cubes accepts a peaked first component")
{
    const LittleCubesOperad cn(1);
    const auto f = peaked<UnitPoint>({q(1, 3)}, tent_loop(1));
    const std::vector<Configuration> samples{Configuration::slabs(1, 2), Configuration::slabs(1, 3),
                                             Configuration::unit(1)};
    const auto e = generic_comonad_element<LittleCubesOperad, UnitPoint>(
        cn, [f](const Configuration& c) { return f(c[0]); }, samples);
    REQUIRE(e.has_value());
    CHECK((*e)(Configuration::slabs(1, 2)).slot() == 0);
}
