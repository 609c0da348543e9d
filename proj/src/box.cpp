#include "hyp/box.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyp {

Box2 intersect(const Box2& a, const Box2& b) {
    return Box2(intersect(a.x1(), b.x1()), intersect(a.x2(), b.x2()));
}

Box2 hull(const Box2& a, const Box2& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return Box2(hull(a.x1(), b.x1()), hull(a.x2(), b.x2()));
}

double width(const Box2& b) {
    if (b.is_empty()) return 0.0;
    return std::max(width(b.x1()), width(b.x2()));
}

double area(const Box2& b) {
    if (b.is_empty()) return 0.0;
    return width(b.x1()) * width(b.x2());
}

Pt midpoint(const Box2& b) {
    return Pt{midpoint(b.x1()), midpoint(b.x2())};
}

std::vector<Box2> box_diff(const Box2& outer, const Box2& inner) {
    if (outer.is_empty()) return {};
    if (inner.is_empty()) return {outer};
    std::vector<Box2> out;
    const auto push = [&out](const Interval& a, const Interval& b) {
        const Box2 slab(a, b);
        if (!slab.is_empty() && width(slab.x1()) > 0.0 && width(slab.x2()) > 0.0)
            out.push_back(slab);
    };
    push(Interval(outer.x1().lo(), inner.x1().lo()), outer.x2());
    push(Interval(inner.x1().hi(), outer.x1().hi()), outer.x2());
    push(inner.x1(), Interval(outer.x2().lo(), inner.x2().lo()));
    push(inner.x1(), Interval(inner.x2().hi(), outer.x2().hi()));
    return out;
}

std::pair<Box2, Box2> bisect(const Box2& b) {
    if (b.is_empty() || !b.is_bounded())
        throw std::invalid_argument("bisect requires a nonempty bounded box");
    if (width(b.x1()) >= width(b.x2())) {
        double m = midpoint(b.x1());
        return {Box2(Interval(b.x1().lo(), m), b.x2()), Box2(Interval(m, b.x1().hi()), b.x2())};
    }
    double m = midpoint(b.x2());
    return {Box2(b.x1(), Interval(b.x2().lo(), m)), Box2(b.x1(), Interval(m, b.x2().hi()))};
}

} // namespace hyp
