#include <doctest.h>

#include "cubeops/approximation.hpp"
#include "cubeops/shapes.hpp"

using namespace cubeops;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

// The boundary-touching interval with s ↦ t, found by trying both faces.
Interval touching_interval(const Rational& s, const Rational& t)
{
    if (t <= s) {
        return {q(0), t / s};
    }
    return {(t - s) / (q(1) - s), q(1)};
}

}  // namespace

TEST_CASE("cube_st matches the per-coordinate face search")
{
    std::vector<Rational> values;
    for (int k = 1; k < 12; ++k) {
        values.emplace_back(k, 12);
    }
    values.emplace_back(1, 4096);
    values.emplace_back(4095, 4096);
    for (const auto& s0 : values) {
        for (const auto& t0 : values) {
            const Coords s{s0, q(1, 2)};
            const Coords t{t0, q(1, 3)};
            const LittleCube c = cube_st(s, t);
            CHECK(c.apply(s) == t);
            CHECK(c.image()[0] == touching_interval(s0, t0));
            CHECK(c.image()[1] == touching_interval(q(1, 2), q(1, 3)));
        }
    }
    CHECK(cube_st({q(1, 3)}, {q(1, 3)}) == LittleCube::identity(1));
}

TEST_CASE("expansion path endpoints and the fixed point")
{
    const LittleCube c = LittleCube::from_image(Rect({Interval(q(1, 4), q(1, 2)), Interval(q(1, 2), q(3, 4))}));
    const Coords p{q(3, 8), q(5, 8)};
    const ExpansionPath path(c, p);
    CHECK(path.at(q(0)) == c);
    CHECK(path.at(q(1)) == cube_st(path.preimage(), p));
    for (int k = 0; k <= 8; ++k) {
        const LittleCube ck = path.at(q(k, 8));
        CHECK(ck.apply(path.preimage()) == p);
        CHECK(ck.image().contains(c.image()));
    }
    CHECK_THROWS(ExpansionPath(c, {q(7, 8), q(5, 8)}));
}

TEST_CASE("psi inverts alpha")
{
    const Coords t{q(2, 7), q(5, 9)};
    const auto loop = tent_loop(2);
    const auto back = psi(alpha(t, loop));
    REQUIRE_FALSE(back.is_base());
    CHECK(back.t() == t);
    CHECK(same_point(back.x(), loop));
    CHECK(psi(trivial<UnitPoint>(2)).is_base());
}

TEST_CASE("the homotopy H at both ends")
{
    const auto f = precomposed(peaked<UnitPoint>({q(1, 3)}, tent_loop(1)),
                               LittleCube::from_image(Rect({Interval(q(0), q(1, 2))})));
    // Support {2/3}; H(f, 0) is f and H(f, 1) is α(Ψ(f)).
    CHECK(same_point(homotopy_H(f, q(0)), f));
    CHECK(same_point(homotopy_H(f, q(1)), alpha(psi(f), 1)));
    CHECK_THROWS(homotopy_H(f, q(2)));
    const auto box = box_element(Rect({Interval(q(1, 4), q(1, 2))}), q(1));
    const auto moved = homotopy_H(box, q(1));
    CHECK(same_point(moved, alpha(psi(box), 1)));
    CHECK(center(box) == Coords{q(3, 8)});
}

TEST_CASE("the oracle over-approximates and converges on thresholds")
{
    const auto f = threshold(q(5, 8));
    const Rect exact({Interval(q(3, 8), q(5, 8))});
    const OracleSupport coarse = csupp_oracle(f, 200);
    const OracleSupport fine = csupp_oracle(f, 10000);
    CHECK(coarse.bound().contains(exact));
    CHECK(fine.bound().contains(exact));
    CHECK(coarse.bound().contains(fine.bound()));
    const Rational cell(1, std::int64_t{1} << fine.grid_level);
    CHECK(exact[0].lo() - fine.bound()[0].lo() <= cell);
    CHECK(fine.bound()[0].hi() - exact[0].hi() <= cell);

    // No witness, nothing learned: the bound is the whole cube.
    const OracleSupport none = csupp_oracle(trivial<UnitPoint>(2), 100);
    CHECK(none.witnesses == 0);
    CHECK(none.bound() == Rect::unit(2));
    CHECK(oracle_cubes(2, 100).size() == 100);
}

TEST_CASE("the oracle shrinks around a peak")
{
    const auto f = peaked<UnitPoint>({q(1, 3), q(2, 3)}, tent_loop(2));
    const Rect small = csupp_oracle(f, 20000).bound();
    const Rect large = csupp_oracle(f, 500).bound();
    CHECK(small.contains_closed({q(1, 3), q(2, 3)}));
    CHECK(large.contains(small));
    CHECK(small[0].width() < q(1, 8));
}

TEST_CASE("alpha is a morphism of comonads")
{
    std::vector<MorphismSample<UnitPoint>> samples;
    const LittleCube half = LittleCube::from_image(Rect({Interval(q(0), q(1, 2))}));
    const LittleCube mid = LittleCube::from_image(Rect({Interval(q(1, 4), q(3, 4))}));
    samples.push_back({{q(1, 5)}, tent_loop(1), half, mid});
    samples.push_back({{q(3, 5)}, tent_loop(1), mid, half});
    samples.push_back({{q(1, 5)}, cut_tent_loop(1, 0, q(1, 3), q(1, 2)), mid, mid});
    const MorphismReport r = check_comonad_morphism(std::span<const MorphismSample<UnitPoint>>(samples));
    CHECK(r.checked == 3);
    CHECK(r.ok());
}
