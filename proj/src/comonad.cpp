#include "cubeops/comonad.hpp"

#include <map>
#include <mutex>

#include "cubeops/rng.hpp"

namespace cubeops {

namespace terms {

Threshold::Threshold(Rational a) : a_(std::move(a))
{
    if (a_ < Rational(1, 2) || a_ >= Rational(1)) {
        throw std::invalid_argument("threshold parameter must lie in [1/2, 1), got " + a_.to_string());
    }
}

UnitPoint Threshold::eval(const LittleCube& c) const
{
    const Rational& width = c[0].scale();
    return width > a_ ? UnitPoint(width - a_) : UnitPoint();
}

SupportResult Threshold::support_within(const LittleCube& e) const
{
    // Cubes inside Im(e) of width > a all contain [hi(e) − a, lo(e) + a], and the bound is sharp.
    const Rational& w = e[0].scale();
    if (w <= a_) {
        return SupportResult::exact(std::nullopt);
    }
    return SupportResult::exact(Rect({Interval(Rational(1) - a_ / w, a_ / w)}));
}

}  // namespace terms

CnElem<UnitPoint> threshold(Rational a) { return CnElem<UnitPoint>(std::make_shared<const terms::Threshold>(std::move(a))); }

namespace {

constexpr std::uint64_t kMapTestCubeSeed = 0x637562652d746573ULL;  // "cube-tes"

std::vector<LittleCube> build_test_cubes(std::size_t n)
{
    const std::vector<Interval> factors = {
        Interval(Rational(0), Rational(1)),
        Interval(Rational(0), Rational(1, 2)),
        Interval(Rational(1, 2), Rational(1)),
        Interval(Rational(1, 4), Rational(3, 4)),
    };
    std::vector<LittleCube> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= factors.size();
    }
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<Interval> ivs;
        std::size_t rest = k;
        for (std::size_t i = 0; i < n; ++i) {
            ivs.push_back(factors[rest % factors.size()]);
            rest /= factors.size();
        }
        out.push_back(LittleCube::from_image(Rect(std::move(ivs))));
    }
    const std::vector<Interval> diagonal = {
        Interval(Rational(1, 8), Rational(5, 8)),
        Interval(Rational(0), Rational(1, 4)),
        Interval(Rational(3, 4), Rational(1)),
        Interval(Rational(3, 8), Rational(7, 8)),
    };
    for (const auto& iv : diagonal) {
        out.push_back(LittleCube::from_image(Rect(std::vector<Interval>(n, iv))));
    }
    SplitMix64 rng(derive_seed(kMapTestCubeSeed, n));
    for (std::size_t k = 0; k < 8; ++k) {
        std::vector<Interval> ivs;
        for (std::size_t i = 0; i < n; ++i) {
            Rational a = rng.interior_rational(12);
            Rational b = rng.interior_rational(12);
            while (a == b) {
                b = rng.interior_rational(12);
            }
            ivs.emplace_back(min(a, b), max(a, b));
        }
        out.push_back(LittleCube::from_image(Rect(std::move(ivs))));
    }
    return out;
}

}  // namespace

const std::vector<LittleCube>& map_test_cubes(std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<LittleCube>> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_test_cubes(n)).first;
    }
    return it->second;
}

}  // namespace cubeops
