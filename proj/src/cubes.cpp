#include "cubeops/cubes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cubeops/errors.hpp"

namespace cubeops {

LittleCube::LittleCube(std::vector<AffineComponent> components) : components_(std::move(components))
{
    if (components_.empty()) {
        throw std::invalid_argument("little cube of dimension 0");
    }
}

LittleCube LittleCube::identity(std::size_t dim)
{
    return LittleCube(std::vector<AffineComponent>(dim, AffineComponent::identity()));
}

LittleCube LittleCube::from_image(const Rect& r)
{
    std::vector<AffineComponent> comps;
    comps.reserve(r.dim());
    for (const auto& iv : r.intervals()) {
        comps.push_back(AffineComponent::from_image(iv));
    }
    return LittleCube(std::move(comps));
}

Rect LittleCube::image() const
{
    std::vector<Interval> out;
    out.reserve(dim());
    for (const auto& h : components_) {
        out.push_back(h.image());
    }
    return Rect(std::move(out));
}

Coords LittleCube::apply(const Coords& x) const
{
    if (x.size() != dim()) {
        throw DimensionMismatch("cube apply: dimension mismatch");
    }
    Coords out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        out.push_back(components_[i].apply(x[i]));
    }
    return out;
}

Coords LittleCube::invert(const Coords& y) const
{
    if (y.size() != dim()) {
        throw DimensionMismatch("cube invert: dimension mismatch");
    }
    Coords out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        out.push_back(components_[i].invert(y[i]));
    }
    return out;
}

bool LittleCube::contains_open(const Coords& y) const
{
    if (y.size() != dim()) {
        throw DimensionMismatch("cube membership: dimension mismatch");
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!components_[i].image().contains_open(y[i])) {
            return false;
        }
    }
    return true;
}

bool LittleCube::contains_closed(const Coords& y) const
{
    if (y.size() != dim()) {
        throw DimensionMismatch("cube membership: dimension mismatch");
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!components_[i].image().contains_closed(y[i])) {
            return false;
        }
    }
    return true;
}

LittleCube compose(const LittleCube& outer, const LittleCube& inner)
{
    if (outer.dim() != inner.dim()) {
        throw DimensionMismatch("cube composition: dimension mismatch");
    }
    std::vector<AffineComponent> comps;
    comps.reserve(outer.dim());
    for (std::size_t i = 0; i < outer.dim(); ++i) {
        comps.push_back(affine_compose(outer[i], inner[i]));
    }
    return LittleCube(std::move(comps));
}

LittleCube operad_unit(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("operad_unit: dimension must be positive");
    }
    return LittleCube::identity(n);
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t r)
{
    std::vector<std::size_t> v(r);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t r, std::size_t i, std::size_t j)
{
    std::vector<std::size_t> v(r);
    std::iota(v.begin(), v.end(), std::size_t{0});
    std::swap(v.at(i), v.at(j));
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> inv(size());
    for (std::size_t i = 0; i < size(); ++i) {
        inv[images_[i]] = i;
    }
    return Permutation(std::move(inv));
}

Permutation compose(const Permutation& sigma, const Permutation& tau)
{
    if (sigma.size() != tau.size()) {
        throw DimensionMismatch("permutation composition: size mismatch");
    }
    std::vector<std::size_t> v(sigma.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = sigma(tau(i));
    }
    return Permutation(std::move(v));
}

Permutation block_sum(std::span<const Permutation> blocks)
{
    std::vector<std::size_t> v;
    std::size_t start = 0;
    for (const auto& b : blocks) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            v.push_back(start + b(k));
        }
        start += b.size();
    }
    return Permutation(std::move(v));
}

Permutation block_permutation(const Permutation& sigma, std::span<const std::size_t> sizes)
{
    if (sigma.size() != sizes.size()) {
        throw DimensionMismatch("block_permutation: size mismatch");
    }
    const std::size_t r = sizes.size();
    std::vector<std::size_t> old_start(r, 0);
    for (std::size_t j = 1; j < r; ++j) {
        old_start[j] = old_start[j - 1] + sizes[j - 1];
    }
    // New block at position q holds old block σ⁻¹(q).
    const Permutation inv = sigma.inverse();
    std::vector<std::size_t> new_start(r, 0);
    for (std::size_t q = 1; q < r; ++q) {
        new_start[q] = new_start[q - 1] + sizes[inv(q - 1)];
    }
    std::vector<std::size_t> v(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < sizes[j]; ++k) {
            v[old_start[j] + k] = new_start[sigma(j)] + k;
        }
    }
    return Permutation(std::move(v));
}

Configuration::Configuration(std::size_t dim, std::vector<LittleCube> cubes) : dim_(dim), cubes_(std::move(cubes))
{
    if (dim_ == 0) {
        throw std::invalid_argument("configuration of dimension 0");
    }
    for (const auto& c : cubes_) {
        if (c.dim() != dim_) {
            throw DimensionMismatch("configuration: cube dimension mismatch");
        }
    }
    for (std::size_t i = 0; i < cubes_.size(); ++i) {
        const Rect ri = cubes_[i].image();
        for (std::size_t j = i + 1; j < cubes_.size(); ++j) {
            if (interiors_meet(ri, cubes_[j].image())) {
                throw OverlappingCubes("configuration: cubes " + std::to_string(i) + " and " + std::to_string(j) +
                                       " have overlapping interiors");
            }
        }
    }
}

Configuration Configuration::unit(std::size_t dim) { return Configuration(dim, {LittleCube::identity(dim)}); }

Configuration Configuration::single(LittleCube c)
{
    const std::size_t n = c.dim();
    return Configuration(n, {std::move(c)});
}

Configuration Configuration::slabs(std::size_t dim, std::size_t r)
{
    std::vector<LittleCube> cubes;
    cubes.reserve(r);
    const auto width = Rational(1, static_cast<std::int64_t>(r));
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<AffineComponent> comps(dim, AffineComponent::identity());
        comps[0] = AffineComponent(width, width * Rational(static_cast<std::int64_t>(k)));
        cubes.emplace_back(std::move(comps));
    }
    return Configuration(dim, std::move(cubes));
}

namespace {

void check_index(const Configuration& c, std::size_t i, const char* op)
{
    if (i >= c.arity()) {
        throw IndexOutOfRange(std::string(op) + ": index " + std::to_string(i) + " out of range for arity " +
                              std::to_string(c.arity()));
    }
}

}  // namespace

Configuration partial_compose(const Configuration& c, std::size_t i, const Configuration& d)
{
    check_index(c, i, "partial_compose");
    if (c.dim() != d.dim()) {
        throw DimensionMismatch("partial_compose: dimension mismatch");
    }
    std::vector<LittleCube> out;
    out.reserve(c.arity() + d.arity() - 1);
    for (std::size_t k = 0; k < i; ++k) {
        out.push_back(c[k]);
    }
    for (const auto& dk : d.cubes()) {
        out.push_back(compose(c[i], dk));
    }
    for (std::size_t k = i + 1; k < c.arity(); ++k) {
        out.push_back(c[k]);
    }
    return Configuration(c.dim(), std::move(out));
}

Configuration full_compose(const Configuration& c, std::span<const Configuration> ds)
{
    if (ds.size() != c.arity()) {
        throw DimensionMismatch("full_compose: expected " + std::to_string(c.arity()) + " inputs, got " +
                                std::to_string(ds.size()));
    }
    // Insert right to left so earlier slot indices stay valid.
    Configuration out = c;
    for (std::size_t k = c.arity(); k-- > 0;) {
        out = partial_compose(out, k, ds[k]);
    }
    return out;
}

Configuration act(const Configuration& c, const Permutation& sigma)
{
    if (sigma.size() != c.arity()) {
        throw DimensionMismatch("act: permutation size mismatch");
    }
    const Permutation inv = sigma.inverse();
    std::vector<LittleCube> out;
    out.reserve(c.arity());
    for (std::size_t k = 0; k < c.arity(); ++k) {
        out.push_back(c[inv(k)]);
    }
    return Configuration(c.dim(), std::move(out));
}

Configuration restrict(const Configuration& c, std::size_t i)
{
    check_index(c, i, "restrict");
    std::vector<LittleCube> out = c.cubes();
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return Configuration(c.dim(), std::move(out));
}

const LittleCube& extract(const Configuration& c, std::size_t i)
{
    check_index(c, i, "extract");
    return c[i];
}

}  // namespace cubeops
