#pragma once

// Intervals, axis-aligned rectangles and per-coordinate affine maps over
// exact rationals. Every membership test states whether it is closed
// (boundary included) or open.

#include <optional>
#include <vector>

#include "cubeops/rational.hpp"

namespace cubeops {

/// Closed subinterval [lo, hi] of [0, 1]; lo == hi is allowed.
class Interval {
public:
    Interval(Rational lo, Rational hi);

    static Interval unit() { return {Rational(0), Rational(1)}; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return cubeops::midpoint(lo_, hi_); }
    bool degenerate() const { return lo_ == hi_; }

    bool contains_closed(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_open(const Rational& x) const { return lo_ < x && x < hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_;
    Rational hi_;
};

std::optional<Interval> interval_intersect(const Interval& a, const Interval& b);

/// True iff the open interiors of a and b meet.
bool interiors_meet(const Interval& a, const Interval& b);

/// Product of closed intervals; a degenerate rect is a point.
class Rect {
public:
    explicit Rect(std::vector<Interval> intervals);

    static Rect unit(std::size_t dim);
    static Rect point(const Coords& x);

    std::size_t dim() const { return intervals_.size(); }
    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    const std::vector<Interval>& intervals() const& { return intervals_; }
    std::vector<Interval> intervals() && { return std::move(intervals_); }

    bool is_point() const;
    bool contains_closed(const Coords& x) const;
    bool contains_open(const Coords& x) const;
    bool contains(const Rect& other) const;

    friend bool operator==(const Rect&, const Rect&) = default;

private:
    std::vector<Interval> intervals_;
};

/// Coordinate-wise intersection; throws DimensionMismatch when dims differ.
std::optional<Rect> rect_intersect(const Rect& a, const Rect& b);

/// True iff the open interiors of a and b meet (dims must match).
bool interiors_meet(const Rect& a, const Rect& b);

Coords rect_center(const Rect& r);

/// h(t) = scale * t + offset with scale > 0 and image [offset, offset + scale] inside [0, 1].
class AffineComponent {
public:
    AffineComponent(Rational scale, Rational offset);

    static AffineComponent identity() { return {Rational(1), Rational(0)}; }
    /// The unique component with the given non-degenerate image.
    static AffineComponent from_image(const Interval& image);

    const Rational& scale() const { return scale_; }
    const Rational& offset() const { return offset_; }
    Interval image() const { return {offset_, offset_ + scale_}; }

    Rational apply(const Rational& t) const { return scale_ * t + offset_; }
    /// Throws NotInImage when x lies outside the closed image.
    Rational invert(const Rational& x) const;

    friend bool operator==(const AffineComponent&, const AffineComponent&) = default;

private:
    Rational scale_;
    Rational offset_;
};

/// (outer ∘ inner)(x) = outer(inner(x)).
AffineComponent affine_compose(const AffineComponent& outer, const AffineComponent& inner);

}  // namespace cubeops
