#include "cubeops/geometry.hpp"

#include <stdexcept>

#include "cubeops/errors.hpp"

namespace cubeops {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_ || lo_ < Rational(0) || hi_ > Rational(1)) {
        throw std::invalid_argument("interval [" + lo_.to_string() + ", " + hi_.to_string() +
                                    "] is not an ordered subinterval of [0,1]");
    }
}

std::optional<Interval> interval_intersect(const Interval& a, const Interval& b)
{
    Rational lo = max(a.lo(), b.lo());
    Rational hi = min(a.hi(), b.hi());
    if (lo > hi) {
        return std::nullopt;
    }
    return Interval(std::move(lo), std::move(hi));
}

bool interiors_meet(const Interval& a, const Interval& b)
{
    return max(a.lo(), b.lo()) < min(a.hi(), b.hi());
}

Rect::Rect(std::vector<Interval> intervals) : intervals_(std::move(intervals))
{
    if (intervals_.empty()) {
        throw std::invalid_argument("rect of dimension 0");
    }
}

Rect Rect::unit(std::size_t dim) { return Rect(std::vector<Interval>(dim, Interval::unit())); }

Rect Rect::point(const Coords& x)
{
    std::vector<Interval> out;
    out.reserve(x.size());
    for (const auto& xi : x) {
        out.emplace_back(xi, xi);
    }
    return Rect(std::move(out));
}

bool Rect::is_point() const
{
    for (const auto& iv : intervals_) {
        if (!iv.degenerate()) {
            return false;
        }
    }
    return true;
}

bool Rect::contains_closed(const Coords& x) const
{
    if (x.size() != dim()) {
        throw DimensionMismatch("point/rect dimension mismatch");
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!intervals_[i].contains_closed(x[i])) {
            return false;
        }
    }
    return true;
}

bool Rect::contains_open(const Coords& x) const
{
    if (x.size() != dim()) {
        throw DimensionMismatch("point/rect dimension mismatch");
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!intervals_[i].contains_open(x[i])) {
            return false;
        }
    }
    return true;
}

bool Rect::contains(const Rect& other) const
{
    if (other.dim() != dim()) {
        throw DimensionMismatch("rect dimension mismatch");
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!intervals_[i].contains(other[i])) {
            return false;
        }
    }
    return true;
}

std::optional<Rect> rect_intersect(const Rect& a, const Rect& b)
{
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("rect_intersect: dimension mismatch");
    }
    std::vector<Interval> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto iv = interval_intersect(a[i], b[i]);
        if (!iv) {
            return std::nullopt;
        }
        out.push_back(std::move(*iv));
    }
    return Rect(std::move(out));
}

bool interiors_meet(const Rect& a, const Rect& b)
{
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("interiors_meet: dimension mismatch");
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!interiors_meet(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

Coords rect_center(const Rect& r)
{
    Coords out;
    out.reserve(r.dim());
    for (const auto& iv : r.intervals()) {
        out.push_back(iv.midpoint());
    }
    return out;
}

AffineComponent::AffineComponent(Rational scale, Rational offset) : scale_(std::move(scale)), offset_(std::move(offset))
{
    if (scale_.sign() <= 0) {
        throw std::invalid_argument("affine component scale must be positive, got " + scale_.to_string());
    }
    if (offset_ < Rational(0) || offset_ + scale_ > Rational(1)) {
        throw std::invalid_argument("affine component image [" + offset_.to_string() + ", " +
                                    (offset_ + scale_).to_string() + "] leaves [0,1]");
    }
}

AffineComponent AffineComponent::from_image(const Interval& image)
{
    return {image.width(), image.lo()};
}

Rational AffineComponent::invert(const Rational& x) const
{
    if (!image().contains_closed(x)) {
        throw NotInImage();
    }
    return (x - offset_) / scale_;
}

AffineComponent affine_compose(const AffineComponent& outer, const AffineComponent& inner)
{
    return {outer.scale() * inner.scale(), outer.scale() * inner.offset() + outer.offset()};
}

}  // namespace cubeops
