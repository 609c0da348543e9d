#include "hyp/conic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/symmetry.hpp"

namespace hyp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double inf_norm(const ConicParams& q) {
    double m = 0.0;
    for (double v : {q.q0, q.q1, q.q2, q.q3, q.q4, q.q5}) m = std::max(m, std::abs(v));
    return m;
}

double leading_coeff_tolerance(const ConicParams& q) {
    return 1e-12 * (1.0 + inf_norm(q));
}

double eval_f(const ConicParams& q, const Pt& x) {
    return q.q0 + q.q1 * x.x1 + q.q2 * x.x2 + q.q3 * x.x1 * x.x1 + q.q4 * x.x1 * x.x2 +
           q.q5 * x.x2 * x.x2;
}

Interval eval_f(const ConicParams& q, const Box2& b) {
    if (b.is_empty()) return Interval::empty();
    const Interval x1 = b.x1(), x2 = b.x2();
    Interval acc(q.q0);
    acc = add(acc, mul(Interval(q.q1), x1));
    acc = add(acc, mul(Interval(q.q2), x2));
    acc = add(acc, mul(Interval(q.q3), sqr(x1)));
    acc = add(acc, mul(Interval(q.q4), mul(x1, x2)));
    acc = add(acc, mul(Interval(q.q5), sqr(x2)));
    return acc;
}

bool is_hyperbola(const ConicParams& q) {
    return 4.0 * q.q3 * q.q5 - q.q4 * q.q4 < 0.0;
}

namespace detail {

Interval phi1_enclosure(const ConicParams& q, const Interval& x2) {
    if (x2.is_empty()) return Interval::empty();
    const Interval b1 = add(Interval(q.q1), mul(Interval(q.q4), x2));
    const Interval c1 =
        add(Interval(q.q0), add(mul(Interval(q.q2), x2), mul(Interval(q.q5), sqr(x2))));
    const Interval disc = sub(sqr(b1), mul(Interval(4.0 * q.q3), c1));
    const Interval clamped = intersect(disc, Interval(0.0, kInf));
    if (clamped.is_empty()) return Interval::empty();
    const Interval root = sqrt(clamped);
    const Interval num = q.q3 > 0.0 ? add(neg(b1), root) : sub(neg(b1), root);
    return div(num, Interval(2.0 * q.q3));
}

FoldRoots fold_roots(const ConicParams& q) {
    const Interval a2 =
        sub(mul(Interval(4.0 * q.q3), Interval(q.q5)), sqr(Interval(q.q4)));
    const Interval b2 =
        sub(mul(Interval(4.0 * q.q3), Interval(q.q2)), mul(Interval(2.0 * q.q1), Interval(q.q4)));
    const Interval c2 =
        sub(mul(Interval(4.0 * q.q3), Interval(q.q0)), sqr(Interval(q.q1)));
    const Interval disc = sub(sqr(b2), mul(mul(Interval(4.0), a2), c2));

    FoldRoots fr;
    if (disc.hi() < 0.0) return fr;  // curve spans every ordinate
    if (a2.hi() >= 0.0)
        throw NotAHyperbola("discriminant 4*q3*q5 - q4^2 not separated from zero");
    const Interval s = sqrt(intersect(disc, Interval(0.0, kInf)));
    const Interval den = mul(Interval(2.0), a2);
    fr.exists = true;
    fr.certain = disc.lo() > 0.0;
    fr.lo_root = div(add(neg(b2), s), den);  // den < 0, so +s gives the smaller root
    fr.hi_root = div(sub(neg(b2), s), den);
    return fr;
}

TailSigns phi1_limit(const ConicParams& q, bool plus_dir) {
    // Asymptote slopes are the roots of q3*t^2 + q4*t + q5 = 0; the branch
    // followed by the maximal x1 root has the larger slope toward +inf and the
    // smaller one toward -inf.
    const Interval disc =
        sub(sqr(Interval(q.q4)), mul(Interval(4.0 * q.q3), Interval(q.q5)));
    const Interval s = sqrt(intersect(disc, Interval(0.0, kInf)));
    if (s.is_empty()) return TailSigns{true, true};
    const Interval den(2.0 * q.q3);
    const Interval nb = neg(Interval(q.q4));
    const Interval t_hi = q.q3 > 0.0 ? div(add(nb, s), den) : div(sub(nb, s), den);
    const Interval t_lo = q.q3 > 0.0 ? div(sub(nb, s), den) : div(add(nb, s), den);
    const Interval t = plus_dir ? t_hi : t_lo;
    TailSigns out;
    if (t.lo() > 0.0) {
        (plus_dir ? out.plus_inf : out.minus_inf) = true;
    } else if (t.hi() < 0.0) {
        (plus_dir ? out.minus_inf : out.plus_inf) = true;
    } else {
        out.plus_inf = out.minus_inf = true;  // slope sign not separated
    }
    return out;
}

} // namespace detail

double phi1(const ConicParams& q, double x2) {
    const double tol = leading_coeff_tolerance(q);
    if (std::abs(q.q3) <= tol)
        throw DegenerateLeadingCoefficient("phi1: |q3| below tolerance");
    const double b1 = q.q1 + q.q4 * x2;
    const double c1 = q.q0 + x2 * (q.q2 + q.q5 * x2);
    const double disc = b1 * b1 - 4.0 * q.q3 * c1;
    if (disc < 0.0) {
        // Rounding can push a fold-tangent discriminant slightly negative;
        // the enclosure decides.
        const Interval enc = detail::phi1_enclosure(q, Interval(x2));
        if (enc.is_empty())
            throw InfeasibleOrdinate("phi1: no curve point at this ordinate");
        return midpoint(enc);
    }
    const double s = std::sqrt(disc);
    const double k = -0.5 * (b1 + std::copysign(s, b1));
    const double r1 = k / q.q3;
    const double r2 = (k != 0.0) ? c1 / k : r1;
    return std::max(r1, r2);
}

Interval rho(const ConicParams& q) {
    if (!is_hyperbola(q)) throw NotAHyperbola("rho requires a hyperbola");
    const detail::FoldRoots fr = detail::fold_roots(q);
    if (!fr.exists) return Interval::empty();
    return Interval(fr.lo_root.lo(), fr.hi_root.hi());
}

CardinalPoints cardinal_points(const ConicParams& q) {
    if (!is_hyperbola(q)) throw NotAHyperbola("cardinal_points requires a hyperbola");
    CardinalPoints cp;
    const double tol = leading_coeff_tolerance(q);
    if (std::abs(q.q3) > tol) {
        const detail::FoldRoots fr = detail::fold_roots(q);
        if (fr.exists) {
            const double wn = midpoint(fr.lo_root);
            const double ws = midpoint(fr.hi_root);
            // At a fold the x1-quadratic has a double root -b1/(2 q3).
            cp.north = Pt{-(q.q1 + q.q4 * wn) / (2.0 * q.q3), wn};
            cp.south = Pt{-(q.q1 + q.q4 * ws) / (2.0 * q.q3), ws};
        }
    }
    if (std::abs(q.q5) > tol) {
        const ConicParams p = swap_params(q);
        const detail::FoldRoots fs = detail::fold_roots(p);
        if (fs.exists) {
            const double ue = midpoint(fs.lo_root);
            const double uw = midpoint(fs.hi_root);
            cp.east = Pt{ue, -(p.q1 + p.q4 * ue) / (2.0 * p.q3)};
            cp.west = Pt{uw, -(p.q1 + p.q4 * uw) / (2.0 * p.q3)};
        }
    }
    return cp;
}

std::string to_string(const ConicParams& q) {
    std::string out = format_double(q.q0);
    for (double v : {q.q1, q.q2, q.q3, q.q4, q.q5}) out += "," + format_double(v);
    return out;
}

ConicParams parse_conic(std::string_view text) {
    double vals[6];
    std::size_t pos = 0;
    for (int i = 0; i < 6; ++i) {
        const std::size_t comma = text.find(',', pos);
        const bool last = (i == 5);
        if (last != (comma == std::string_view::npos))
            throw IoError("conic parameters: expected 6 comma-separated values");
        const std::string_view tok =
            last ? text.substr(pos) : text.substr(pos, comma - pos);
        vals[i] = parse_double(tok);
        pos = comma + 1;
    }
    return ConicParams{vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
}

} // namespace hyp
