#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "cubeops/rational.hpp"

using cubeops::Rational;

namespace {

// Fractions reduced by hand with std::gcd; independent of GMP.
struct Frac {
    std::int64_t p;
    std::int64_t q;
};

Frac reduce(std::int64_t p, std::int64_t q)
{
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const std::int64_t g = std::gcd(p, q);
    return {p / g, q / g};
}

bool matches(const Rational& r, Frac f)
{
    return r.numerator() == f.p && r.denominator() == f.q;
}

}  // namespace

TEST_CASE("canonical form")
{
    CHECK(matches(Rational(6, 8), {3, 4}));
    CHECK(matches(Rational(3, -9), {-1, 3}));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(-3, 6).to_string() == "-1/2");
}

TEST_CASE("arithmetic agrees with small-integer fractions")
{
    for (std::int64_t a = -6; a <= 6; ++a) {
        for (std::int64_t b = 1; b <= 7; ++b) {
            for (std::int64_t c = -5; c <= 5; ++c) {
                for (std::int64_t d = 1; d <= 6; ++d) {
                    const Rational x(a, b);
                    const Rational y(c, d);
                    CHECK(matches(x + y, reduce(a * d + c * b, b * d)));
                    CHECK(matches(x - y, reduce(a * d - c * b, b * d)));
                    CHECK(matches(x * y, reduce(a * c, b * d)));
                    if (c != 0) {
                        CHECK(matches(x / y, reduce(a * d, b * c)));
                    }
                    CHECK(((x < y) == (a * d < c * b)));
                }
            }
        }
    }
}

TEST_CASE("parse")
{
    CHECK(Rational::parse("3/12") == Rational(1, 4));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("+2/3") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("parse round-trips to_string")
{
    for (std::int64_t p = -20; p <= 20; ++p) {
        for (std::int64_t q = 1; q <= 13; ++q) {
            const Rational r(p, q);
            CHECK(Rational::parse(r.to_string()) == r);
        }
    }
}

TEST_CASE("min, max, midpoint")
{
    CHECK(cubeops::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(cubeops::max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
    CHECK(cubeops::midpoint(Rational(1, 3), Rational(1, 4)) == Rational(7, 24));
}

TEST_CASE("large denominators stay exact")
{
    Rational x(1);
    for (int i = 0; i < 100; ++i) {
        x /= Rational(3);
    }
    Rational y = x;
    for (int i = 0; i < 100; ++i) {
        y *= Rational(3);
    }
    CHECK(y == Rational(1));
    CHECK(x.denominator() > mpz_class("1000000000000000000000000000000"));
}
