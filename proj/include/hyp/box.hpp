#pragma once

#include <utility>
#include <vector>

#include "hyp/interval.hpp"

namespace hyp {

struct Pt {
    double x1 = 0.0;
    double x2 = 0.0;
    bool operator==(const Pt&) const = default;
};

// Axis-aligned box of the plane. Emptiness is absorbing: a box with any empty
// component normalizes to the canonical empty box.
class Box2 {
public:
    Box2() = default;
    Box2(const Interval& x1, const Interval& x2) : x1_(x1), x2_(x2) {
        if (x1_.is_empty() || x2_.is_empty()) *this = empty();
    }

    static Box2 empty() { return Box2(Interval::empty(), Interval::empty(), 0); }
    static Box2 entire() { return Box2(Interval::entire(), Interval::entire()); }

    const Interval& x1() const { return x1_; }
    const Interval& x2() const { return x2_; }

    bool is_empty() const { return x1_.is_empty(); }
    bool is_bounded() const { return x1_.is_bounded() && x2_.is_bounded(); }
    bool contains(const Pt& p) const { return x1_.contains(p.x1) && x2_.contains(p.x2); }
    bool contains(const Box2& other) const {
        return other.is_empty() || (x1_.contains(other.x1_) && x2_.contains(other.x2_));
    }

    bool operator==(const Box2&) const = default;

private:
    Box2(const Interval& x1, const Interval& x2, int) : x1_(x1), x2_(x2) {}
    Interval x1_, x2_;
};

Box2 intersect(const Box2& a, const Box2& b);
Box2 hull(const Box2& a, const Box2& b);
double width(const Box2& b);  // max component width (Chebyshev)
double area(const Box2& b);
Pt midpoint(const Box2& b);

// Splits the widest component at its midpoint, ties toward x1. The children
// cover the parent exactly and overlap only on the cut line. Throws
// std::invalid_argument on an empty or unbounded box.
std::pair<Box2, Box2> bisect(const Box2& b);

// Positive-area slabs covering outer minus inner (inner must be contained in
// outer): up to two full-height side slabs plus top/bottom slabs over inner's
// x1 extent. Zero-area slivers are dropped; the closed union of the result
// together with inner still covers outer.
std::vector<Box2> box_diff(const Box2& outer, const Box2& inner);

} // namespace hyp
