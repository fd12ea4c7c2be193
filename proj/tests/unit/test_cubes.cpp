#include <doctest.h>

#include "cubeops/errors.hpp"
#include "cubeops/operad.hpp"

using namespace cubeops;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return {p, d}; }

LittleCube box(std::vector<std::pair<Rational, Rational>> sides)
{
    std::vector<Interval> ivs;
    for (auto& [lo, hi] : sides) {
        ivs.emplace_back(lo, hi);
    }
    return LittleCube::from_image(Rect(std::move(ivs)));
}

LittleCube seg(std::int64_t a, std::int64_t b, std::int64_t d) { return box({{q(a, d), q(b, d)}}); }

Configuration thirds() { return Configuration(1, {seg(0, 1, 3), seg(1, 2, 3), seg(2, 3, 3)}); }

std::vector<Coords> probe_points(std::size_t n)
{
    std::vector<Coords> out;
    for (int k = 0; k <= 8; ++k) {
        out.push_back(Coords(n, q(k, 8)));
    }
    if (n >= 2) {
        out.push_back(Coords{q(1, 5), q(4, 5)});
    }
    return out;
}

}  // namespace

TEST_CASE("cube apply, invert and containment")
{
    const LittleCube c = box({{q(1, 4), q(3, 4)}, {q(0), q(1, 2)}});
    CHECK(c.apply({q(1, 2), q(1, 2)}) == Coords{q(1, 2), q(1, 4)});
    CHECK(c.invert({q(1, 2), q(1, 4)}) == Coords{q(1, 2), q(1, 2)});
    CHECK(c.contains_open({q(1, 2), q(1, 4)}));
    CHECK_FALSE(c.contains_open({q(1, 2), q(0)}));
    CHECK(c.contains_closed({q(1, 2), q(0)}));
    CHECK_THROWS_AS(c.invert({q(7, 8), q(1, 4)}), NotInImage);
}

TEST_CASE("cube composition is map composition")
{
    const std::vector<LittleCube> cubes{LittleCube::identity(2), box({{q(1, 4), q(3, 4)}, {q(0), q(1, 2)}}),
                                        box({{q(0), q(1, 3)}, {q(1, 3), q(1)}}),
                                        box({{q(5, 8), q(7, 8)}, {q(1, 8), q(3, 8)}})};
    for (const auto& a : cubes) {
        for (const auto& b : cubes) {
            const LittleCube ab = compose(a, b);
            for (const auto& x : probe_points(2)) {
                CHECK(ab.apply(x) == a.apply(b.apply(x)));
            }
            CHECK(a.image().contains(ab.image()));
        }
    }
    CHECK(compose(operad_unit(2), cubes[1]) == cubes[1]);
    CHECK(compose(cubes[1], operad_unit(2)) == cubes[1]);
}

TEST_CASE("configurations reject overlapping interiors but accept shared faces")
{
    CHECK_NOTHROW(Configuration(1, {seg(0, 1, 2), seg(1, 2, 2)}));
    CHECK_THROWS_AS(Configuration(1, {seg(0, 2, 3), seg(1, 3, 3)}), OverlappingCubes);
    CHECK_THROWS_AS(Configuration(1, {seg(0, 1, 2), seg(0, 1, 2)}), OverlappingCubes);
    CHECK_THROWS_AS(Configuration(2, {seg(0, 1, 2)}), DimensionMismatch);
    CHECK(Configuration::slabs(2, 2)[1].image() == Rect({Interval(q(1, 2), q(1)), Interval::unit()}));
    CHECK(Configuration::empty(3).arity() == 0);
}

TEST_CASE("permutations")
{
    const Permutation s({1, 2, 0});
    CHECK(s(0) == 1);
    CHECK(compose(s, s.inverse()) == Permutation::identity(3));
    CHECK(compose(s, s) == Permutation({2, 0, 1}));
    CHECK_THROWS(Permutation({0, 0, 1}));
    CHECK_THROWS(Permutation({0, 3}));
    CHECK(Permutation::transposition(4, 1, 3) == Permutation({0, 3, 2, 1}));
}

TEST_CASE("block sums and block permutations, by hand")
{
    const std::vector<Permutation> blocks{Permutation({1, 0}), Permutation::identity(1), Permutation({2, 0, 1})};
    CHECK(block_sum(blocks) == Permutation({1, 0, 2, 5, 3, 4}));
    // Blocks of sizes (2, 1, 3) at positions σ = (0→2, 1→0, 2→1): new order is block 1, block 2, block 0.
    const std::vector<std::size_t> sizes{2, 1, 3};
    CHECK(block_permutation(Permutation({2, 0, 1}), sizes) == Permutation({4, 5, 0, 1, 2, 3}));
}

TEST_CASE("the symmetric action moves cube i to slot sigma(i)")
{
    const Configuration c = thirds();
    const Permutation s({1, 2, 0});
    const Configuration cs = act(c, s);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(cs[s(i)] == c[i]);
    }
    const Permutation t({0, 2, 1});
    CHECK(act(act(c, t), s) == act(c, compose(s, t)));
}

TEST_CASE("partial and full composition, by hand")
{
    const Configuration halves = Configuration::slabs(1, 2);
    const Configuration composed = partial_compose(halves, 1, halves);
    REQUIRE(composed.arity() == 3);
    CHECK(composed[0] == seg(0, 1, 2));
    CHECK(composed[1] == seg(2, 3, 4));
    CHECK(composed[2] == seg(3, 4, 4));

    const std::vector<Configuration> ds{halves, Configuration::empty(1)};
    const Configuration g = full_compose(halves, ds);
    REQUIRE(g.arity() == 2);
    CHECK(g[0] == seg(0, 1, 4));
    CHECK(g[1] == seg(1, 2, 4));

    const std::vector<Configuration> wrong{halves};
    CHECK_THROWS_AS(full_compose(halves, wrong), DimensionMismatch);
    CHECK_THROWS_AS(partial_compose(halves, 2, halves), IndexOutOfRange);
}

TEST_CASE("full composition equals iterated partial composition")
{
    const Configuration c = thirds();
    const std::vector<Configuration> ds{Configuration::slabs(1, 2), Configuration::unit(1), thirds()};
    Configuration iterated = c;
    // Substitute from the right so earlier slot indices stay valid.
    for (std::size_t i = ds.size(); i-- > 0;) {
        iterated = partial_compose(iterated, i, ds[i]);
    }
    CHECK(full_compose(c, ds) == iterated);
}

TEST_CASE("restriction deletes a cube and satisfies the simplicial identities")
{
    const Configuration c = thirds();
    CHECK(restrict(c, 1) == Configuration(1, {seg(0, 1, 3), seg(2, 3, 3)}));
    for (std::size_t j = 1; j < 3; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            CHECK(restrict(restrict(c, j), i) == restrict(restrict(c, i), j - 1));
        }
    }
    CHECK(extract(c, 2) == seg(2, 3, 3));
    CHECK_THROWS_AS(extract(c, 3), IndexOutOfRange);
    CHECK_THROWS_AS(restrict(c, 3), IndexOutOfRange);
}

TEST_CASE("abstract operad views")
{
    const LittleCubesOperad cn(1);
    CHECK(cn.extract(thirds(), 1) == Configuration::single(seg(1, 2, 3)));
    CHECK(cn.arity(cn.unit()) == 1);
    const OnePointOperad one;
    CHECK(one.restrict(one.operation(3), 0).arity == 2);
    CHECK(one.extract(one.operation(3), 2) == one.unit());
    CHECK_THROWS_AS(one.restrict(one.operation(0), 0), IndexOutOfRange);
}
