#include "cubeops/approximation.hpp"

#include "cubeops/rng.hpp"

namespace cubeops {

namespace {

std::size_t intervals_at_level(unsigned level)
{
    const std::size_t points = (std::size_t{1} << level) + 1;
    return points * (points - 1) / 2;
}

std::size_t grid_count(std::size_t dim, unsigned level)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= intervals_at_level(level);
    }
    return total;
}

}  // namespace

std::vector<LittleCube> oracle_cubes(std::size_t dim, std::size_t budget, unsigned* grid_level, std::uint64_t seed)
{
    unsigned level = 1;
    while (level < 20 && grid_count(dim, level + 1) <= budget / 2) {
        ++level;
    }
    if (grid_level != nullptr) {
        *grid_level = level;
    }

    const auto cells = static_cast<std::int64_t>(std::int64_t{1} << level);
    std::vector<Interval> dyadic;
    for (std::int64_t i = 0; i < cells; ++i) {
        for (std::int64_t j = i + 1; j <= cells; ++j) {
            dyadic.emplace_back(Rational(i, cells), Rational(j, cells));
        }
    }

    std::vector<LittleCube> out;
    const std::size_t total = grid_count(dim, level);
    out.reserve(std::max(total, budget));
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<Interval> ivs;
        ivs.reserve(dim);
        std::size_t rest = k;
        for (std::size_t i = 0; i < dim; ++i) {
            ivs.push_back(dyadic[rest % dyadic.size()]);
            rest /= dyadic.size();
        }
        out.push_back(LittleCube::from_image(Rect(std::move(ivs))));
    }

    SplitMix64 rng(derive_seed(seed, dim));
    while (out.size() < budget) {
        std::vector<Interval> ivs;
        ivs.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const std::int64_t q = rng.between(2, 4096);
            std::int64_t a = rng.between(0, q);
            std::int64_t b = rng.between(0, q);
            while (a == b) {
                b = rng.between(0, q);
            }
            ivs.emplace_back(Rational(std::min(a, b), q), Rational(std::max(a, b), q));
        }
        out.push_back(LittleCube::from_image(Rect(std::move(ivs))));
    }
    return out;
}

LittleCube cube_st(const Coords& s, const Coords& t)
{
    if (s.size() != t.size()) {
        throw DimensionMismatch("cube_st: dimension mismatch");
    }
    if (!strictly_interior(t)) {
        throw std::invalid_argument("cube_st: t must lie in the interior of I^n");
    }
    std::vector<AffineComponent> comps;
    comps.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Rational& si = s[i];
        const Rational& ti = t[i];
        if (si < Rational(0) || si > Rational(1)) {
            throw std::invalid_argument("cube_st: s outside [0,1]^n");
        }
        if (ti < si) {
            // c_i(0) = 0: x ↦ (t_i / s_i) x
            comps.emplace_back(ti / si, Rational(0));
        } else if (ti > si) {
            // c_i(1) = 1: x ↦ 1 − (1 − t_i)(1 − x)/(1 − s_i)
            const Rational k = (Rational(1) - ti) / (Rational(1) - si);
            comps.emplace_back(k, Rational(1) - k);
        } else {
            comps.push_back(AffineComponent::identity());
        }
    }
    return LittleCube(std::move(comps));
}

ExpansionPath::ExpansionPath(LittleCube source, Coords p)
    : source_(std::move(source)), p_(std::move(p)), z_(source_.invert(p_)), target_(cube_st(z_, p_))
{
}

LittleCube ExpansionPath::at(const Rational& time) const
{
    if (time < Rational(0) || time > Rational(1)) {
        throw std::invalid_argument("expansion time outside [0,1]");
    }
    if (time.is_zero()) {
        return source_;
    }
    const Rational keep = Rational(1) - time;
    std::vector<AffineComponent> comps;
    comps.reserve(source_.dim());
    for (std::size_t i = 0; i < source_.dim(); ++i) {
        const Interval a = source_[i].image();
        const Interval b = target_[i].image();
        comps.push_back(AffineComponent::from_image(
            Interval(keep * a.lo() + time * b.lo(), keep * a.hi() + time * b.hi())));
    }
    return LittleCube(std::move(comps));
}

}  // namespace cubeops
