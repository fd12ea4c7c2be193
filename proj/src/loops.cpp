#include "cubeops/loops.hpp"

#include <map>
#include <mutex>

#include "cubeops/rng.hpp"

namespace cubeops {

namespace {

constexpr std::uint64_t kMapTestSeed = 0x6d61702d74657374ULL;  // "map-test"

std::vector<SpherePoint> build_test_points(std::size_t n)
{
    std::vector<SpherePoint> out;
    out.push_back(SpherePoint::base());
    const Rational grid[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= 3;
    }
    for (std::size_t k = 0; k < total; ++k) {
        Coords t(n);
        std::size_t rest = k;
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = grid[rest % 3];
            rest /= 3;
        }
        out.push_back(SpherePoint::at(std::move(t)));
    }
    SplitMix64 rng(derive_seed(kMapTestSeed, n));
    for (std::size_t k = 0; k < kMapTestRandomPoints; ++k) {
        Coords t;
        for (std::size_t i = 0; i < n; ++i) {
            t.push_back(rng.interior_rational(12));
        }
        out.push_back(SpherePoint::at(std::move(t)));
    }
    return out;
}

}  // namespace

const std::vector<SpherePoint>& map_test_points(std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<SpherePoint>> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_test_points(n)).first;
    }
    return it->second;
}

LoopMap<SpherePoint> identity_loop(std::size_t dim)
{
    return LoopMap<SpherePoint>::custom(
        dim, [](const SpherePoint& s) { return s; }, Json{{"kind", "identity"}});
}

}  // namespace cubeops
