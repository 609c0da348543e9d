#include "hyp/separator.hpp"

#include <utility>

namespace hyp {

MembershipTest leq0_membership(const ConicParams& q) {
    return [q](const Pt& p) -> int {
        const Interval v = eval_f(q, Box2(Interval(p.x1), Interval(p.x2)));
        if (v.hi() <= 0.0) return -1;
        if (v.lo() > 0.0) return 1;
        return 0;
    };
}

namespace {

// keep_sign selects which proven slabs stay in the result: -1 keeps inside
// slabs (the contract_out component), +1 keeps outside slabs (contract_in).
Box2 peel(const std::function<Box2(const Box2&)>& boundary, const MembershipTest& member,
          const Box2& x, int keep_sign) {
    if (x.is_empty()) return x;
    const Box2 y = boundary(x);
    Box2 acc = y;
    for (const Box2& slab : box_diff(x, y)) {
        int cls = 0;
        if (slab.is_bounded()) cls = member(midpoint(slab));
        if (cls == keep_sign || cls == 0) acc = hull(acc, slab);
    }
    return acc;
}

} // namespace

Separator from_boundary(const Contractor& boundary, MembershipTest membership,
                        std::string label) {
    Contractor cin{
        [bm = boundary.map, membership](const Box2& x) { return peel(bm, membership, x, +1); },
        label + ".in", boundary.q};
    Contractor cout{
        [bm = boundary.map, membership](const Box2& x) { return peel(bm, membership, x, -1); },
        label + ".out", boundary.q};
    return Separator{std::move(cin), std::move(cout), std::move(label)};
}

Separator complement(const Separator& s) {
    return Separator{s.contract_out, s.contract_in, "!" + s.label};
}

Separator intersect_sep(const Separator& a, const Separator& b) {
    Contractor cout{[ma = a.contract_out.map, mb = b.contract_out.map](const Box2& x) {
                        const Box2 ra = ma(x);
                        if (ra.is_empty()) return ra;
                        return intersect(ra, mb(x));
                    },
                    a.label + "&" + b.label + ".out", a.contract_out.q};
    Contractor cin{[ma = a.contract_in.map, mb = b.contract_in.map](const Box2& x) {
                       return hull(ma(x), mb(x));
                   },
                   a.label + "&" + b.label + ".in", a.contract_in.q};
    return Separator{std::move(cin), std::move(cout), a.label + "&" + b.label};
}

Separator all_outside_separator() {
    return Separator{identity_ctc(),
                     Contractor{[](const Box2&) { return Box2::empty(); }, "out.all", std::nullopt},
                     "empty-set"};
}

Separator full_plane_separator() {
    return Separator{Contractor{[](const Box2&) { return Box2::empty(); }, "in.all", std::nullopt},
                     identity_ctc(), "full-plane"};
}

Separator hyperbolic_area_separator(const ConicParams& q, CtcKind kind) {
    Contractor boundary =
        kind == CtcKind::Minimal ? minimal_hyperbola(q) : forward_backward(q);
    return from_boundary(boundary, leq0_membership(q),
                         (kind == CtcKind::Minimal ? "hyp-min" : "hyp-fb"));
}

} // namespace hyp
