#include "hyp/contractor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <utility>

#include "hyp/errors.hpp"

namespace hyp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Everything q-dependent the seed needs, computed once per contractor.
struct SeedData {
    ConicParams q;
    detail::FoldRoots gap;                // fold ordinates of q (may not exist)
    std::vector<Interval> crit_ordinates; // ordinates where phi1 can turn around
};

SeedData make_seed_data(const ConicParams& q) {
    if (!is_hyperbola(q)) throw NotAHyperbola("seed requires a hyperbola: " + to_string(q));
    if (std::abs(q.q3) <= leading_coeff_tolerance(q))
        throw DegenerateLeadingCoefficient("seed: |q3| below tolerance for " + to_string(q));
    SeedData sd;
    sd.q = q;
    sd.gap = detail::fold_roots(q);
    // Interior turning ordinates of phi1 are the ordinates of the
    // extremal-abscissa points, obtained from the swapped parameter vector.
    // For q5 == 0 they escape to infinity and phi1 has none.
    if (q.q5 != 0.0) {
        const ConicParams p = swap_params(q);
        const detail::FoldRoots fs = detail::fold_roots(p);
        if (fs.exists) {
            sd.crit_ordinates.push_back(detail::phi1_enclosure(p, fs.lo_root));
            sd.crit_ordinates.push_back(detail::phi1_enclosure(p, fs.hi_root));
        }
    }
    return sd;
}

// Feasible ordinate pieces of the range (the certainly-infeasible open band
// between the folds carved out). At most two.
int collect_pieces(const SeedData& sd, const Interval& range, std::array<Interval, 2>& pieces) {
    if (sd.gap.exists && sd.gap.certain) {
        const double glo = sd.gap.lo_root.hi();
        const double ghi = sd.gap.hi_root.lo();
        if (glo < ghi) {
            int n = 0;
            if (range.lo() <= glo)
                pieces[n++] = Interval(range.lo(), std::min(range.hi(), glo));
            if (range.hi() >= ghi)
                pieces[n++] = Interval(std::max(range.lo(), ghi), range.hi());
            return n;
        }
    }
    pieces[0] = range;
    return 1;
}

// Range of phi1 over one monotone-pieces stretch of feasible ordinates: hull
// of the endpoint values, every interior turning ordinate, and the fold
// values when the piece ends at a fold.
Interval piece_values(const SeedData& sd, const Interval& piece) {
    Interval acc = Interval::empty();
    bool tail_neg = false, tail_pos = false;
    const auto add = [&acc](const Interval& v) { acc = hull(acc, v); };

    if (piece.lo() == -kInf) {
        const auto t = detail::phi1_limit(sd.q, false);
        tail_pos |= t.plus_inf;
        tail_neg |= t.minus_inf;
    } else {
        add(detail::phi1_enclosure(sd.q, Interval(piece.lo())));
    }
    if (piece.hi() == kInf) {
        const auto t = detail::phi1_limit(sd.q, true);
        tail_pos |= t.plus_inf;
        tail_neg |= t.minus_inf;
    } else if (piece.hi() != piece.lo()) {
        add(detail::phi1_enclosure(sd.q, Interval(piece.hi())));
    }
    for (const Interval& c : sd.crit_ordinates) {
        const Interval inside = intersect(c, piece);
        if (!inside.is_empty()) add(detail::phi1_enclosure(sd.q, inside));
    }
    if (sd.gap.exists) {
        // A carved piece ends marginally on the infeasible side of the fold,
        // where a point evaluation comes back empty; evaluating over the
        // fold-root enclosures recovers the fold values. When the fold
        // location is not separated from zero this also covers the would-be
        // folds inside an uncarved piece.
        for (const Interval& r : {sd.gap.lo_root, sd.gap.hi_root}) {
            const Interval inside = intersect(r, piece);
            if (!inside.is_empty()) add(detail::phi1_enclosure(sd.q, inside));
        }
    }

    if (acc.is_empty()) {
        if (tail_neg || tail_pos) return Interval::entire();
        return Interval::empty();
    }
    return Interval(tail_neg ? -kInf : acc.lo(), tail_pos ? kInf : acc.hi());
}

Interval extension(const SeedData& sd, const Interval& range) {
    if (range.is_empty()) return Interval::empty();
    std::array<Interval, 2> pieces;
    const int n = collect_pieces(sd, range, pieces);
    Interval acc = Interval::empty();
    for (int i = 0; i < n; ++i) acc = hull(acc, piece_values(sd, pieces[i]));
    return acc;
}

// x1 component of the seed: each feasible piece's value range is clipped by
// the incoming x1 interval before hulling, so a piece whose values lie
// entirely outside the box cannot smear the result across the fold band.
Interval seed_x1(const SeedData& sd, const Interval& x1, const Interval& x2) {
    if (x1.is_empty() || x2.is_empty()) return Interval::empty();
    std::array<Interval, 2> pieces;
    const int n = collect_pieces(sd, x2, pieces);
    Interval acc = Interval::empty();
    for (int i = 0; i < n; ++i)
        acc = hull(acc, intersect(x1, piece_values(sd, pieces[i])));
    return acc;
}

} // namespace

Contractor identity_ctc() {
    return Contractor{[](const Box2& b) { return b; }, "id", std::nullopt};
}

Interval phi1_extension(const ConicParams& q, const Interval& x2) {
    return extension(make_seed_data(q), x2);
}

Contractor seed(const ConicParams& q) {
    auto sd = std::make_shared<SeedData>(make_seed_data(q));
    auto map = [sd](const Box2& b) -> Box2 {
        if (b.is_empty()) return b;
        return Box2(seed_x1(*sd, b.x1(), b.x2()), b.x2());
    };
    return Contractor{std::move(map), "seed", q};
}

Contractor act(const SymB2& s, const Contractor& c) {
    const SymB2 inv = inverse(s);
    auto map = [s, inv, inner = c.map](const Box2& b) {
        return apply(s, inner(apply(inv, b)));
    };
    return Contractor{std::move(map), to_string(s) + "*" + c.label, c.q};
}

Contractor intersect_ctc(const Contractor& a, const Contractor& b) {
    auto map = [ma = a.map, mb = b.map](const Box2& box) {
        const Box2 ra = ma(box);
        if (ra.is_empty()) return ra;
        return intersect(ra, mb(box));
    };
    return Contractor{std::move(map), "(" + a.label + " & " + b.label + ")", a.q};
}

Contractor union_ctc(std::vector<Contractor> cs) {
    if (cs.empty()) throw std::invalid_argument("union_ctc: need at least one contractor");
    std::string label = "(" + cs.front().label;
    for (std::size_t i = 1; i < cs.size(); ++i) label += " | " + cs[i].label;
    label += ")";
    auto q = cs.front().q;
    auto map = [parts = std::move(cs)](const Box2& box) {
        Box2 acc = Box2::empty();
        for (const Contractor& c : parts) acc = hull(acc, c.map(box));
        return acc;
    };
    return Contractor{std::move(map), std::move(label), q};
}

namespace {

// Bounded re-application. A single pass of the portion intersection can hull
// across the fold band when the incoming box straddles it; one alternation
// re-evaluates each direction on the other's tightened range, which on a
// monotone portion arc lands on the exact hull.
Contractor iterate_ctc(Contractor c, int passes) {
    auto map = [inner = std::move(c.map), passes](const Box2& b) {
        Box2 cur = b;
        for (int i = 0; i < passes && !cur.is_empty(); ++i) {
            Box2 next = inner(cur);
            if (next == cur) break;
            cur = next;
        }
        return cur;
    };
    return Contractor{std::move(map), std::move(c.label), c.q};
}

} // namespace

Contractor minimal_hyperbola(const ConicParams& q) {
    if (!is_hyperbola(q))
        throw NotAHyperbola("minimal_hyperbola requires a hyperbola: " + to_string(q));
    const double tol = leading_coeff_tolerance(q);
    if (std::abs(q.q3) <= tol || std::abs(q.q5) <= tol)
        throw DegenerateLeadingCoefficient(
            "minimal_hyperbola: |q3| and |q5| must exceed tolerance for " + to_string(q));

    static constexpr std::array<SymB2, 4> kFlips = {{{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}};
    std::vector<Contractor> parts;
    parts.reserve(kFlips.size());
    for (const SymB2& flip : kFlips) {
        const ConicParams qs = psi(flip, q);
        const ConicParams qss = psi(sym_swap(), qs);
        Contractor portion =
            iterate_ctc(intersect_ctc(act(sym_swap(), seed(qss)), seed(qs)), 3);
        parts.push_back(act(flip, portion));
    }
    Contractor u = union_ctc(std::move(parts));
    return Contractor{std::move(u.map), "minimal", q};
}

namespace {

// {x in dom : x^2 in t}
Interval project_sqr(const Interval& t, const Interval& dom) {
    const Interval tt = intersect(t, Interval(0.0, kInf));
    if (tt.is_empty()) return Interval::empty();
    const Interval s = sqrt(tt);
    return hull(intersect(dom, s), intersect(dom, neg(s)));
}

// {x in dom : exists y in ybox with x*y in t}
Interval project_mul(const Interval& t, const Interval& ybox, const Interval& dom) {
    if (ybox.lo() == 0.0 && ybox.hi() == 0.0)
        return t.contains(0.0) ? dom : Interval::empty();
    return intersect(dom, div(t, ybox));
}

} // namespace

Contractor forward_backward(const ConicParams& q, FbConstraint sense) {
    const Interval target = sense == FbConstraint::Equation
                                ? Interval(0.0)
                                : Interval(-kInf, 0.0);
    auto map = [q, target](const Box2& b) -> Box2 {
        if (b.is_empty()) return b;
        Interval x1 = b.x1(), x2 = b.x2();

        const Interval c0(q.q0), c1(q.q1), c2(q.q2), c3(q.q3), c4(q.q4), c5(q.q5);
        const Interval t1 = sqr(x1);
        const Interval t2 = mul(x1, x2);
        const Interval t3 = sqr(x2);
        const Interval m1 = mul(c1, x1);
        const Interval m2 = mul(c2, x2);
        const Interval m3 = mul(c3, t1);
        const Interval m4 = mul(c4, t2);
        const Interval m5 = mul(c5, t3);
        const Interval s1 = add(c0, m1);
        const Interval s2 = add(s1, m2);
        const Interval s3 = add(s2, m3);
        const Interval s4 = add(s3, m4);
        const Interval s5 = add(s4, m5);

        const Interval s5n = intersect(s5, target);
        if (s5n.is_empty()) return Box2::empty();
        const Interval s4n = intersect(s4, sub(s5n, m5));
        const Interval m5n = intersect(m5, sub(s5n, s4));
        if (s4n.is_empty() || m5n.is_empty()) return Box2::empty();
        const Interval s3n = intersect(s3, sub(s4n, m4));
        const Interval m4n = intersect(m4, sub(s4n, s3));
        if (s3n.is_empty() || m4n.is_empty()) return Box2::empty();
        const Interval s2n = intersect(s2, sub(s3n, m3));
        const Interval m3n = intersect(m3, sub(s3n, s2));
        if (s2n.is_empty() || m3n.is_empty()) return Box2::empty();
        const Interval s1n = intersect(s1, sub(s2n, m2));
        const Interval m2n = intersect(m2, sub(s2n, s1));
        if (s1n.is_empty() || m2n.is_empty()) return Box2::empty();
        const Interval m1n = intersect(m1, sub(s1n, c0));
        if (m1n.is_empty()) return Box2::empty();

        if (q.q1 != 0.0) x1 = intersect(x1, div(m1n, c1));
        if (x1.is_empty()) return Box2::empty();
        if (q.q2 != 0.0) x2 = intersect(x2, div(m2n, c2));
        if (x2.is_empty()) return Box2::empty();
        if (q.q3 != 0.0) {
            const Interval t1n = intersect(t1, div(m3n, c3));
            if (t1n.is_empty()) return Box2::empty();
            x1 = project_sqr(t1n, x1);
            if (x1.is_empty()) return Box2::empty();
        }
        if (q.q4 != 0.0) {
            const Interval t2n = intersect(t2, div(m4n, c4));
            if (t2n.is_empty()) return Box2::empty();
            x1 = project_mul(t2n, x2, x1);
            if (x1.is_empty()) return Box2::empty();
            x2 = project_mul(t2n, x1, x2);
            if (x2.is_empty()) return Box2::empty();
        }
        if (q.q5 != 0.0) {
            const Interval t3n = intersect(t3, div(m5n, c5));
            if (t3n.is_empty()) return Box2::empty();
            x2 = project_sqr(t3n, x2);
            if (x2.is_empty()) return Box2::empty();
        }
        return Box2(x1, x2);
    };
    return Contractor{std::move(map), "fwdbwd", q};
}

} // namespace hyp
