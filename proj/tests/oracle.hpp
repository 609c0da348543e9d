// Test-side oracles, deliberately independent of the library's evaluation
// paths: plain long-double arithmetic, textbook quadratic formulas brute
// sampling. Shared by the unit suites and the acceptance runner.
#pragma once

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "hyp/box.hpp"
#include "hyp/conic.hpp"

namespace oracle {

using hyp::Box2;
using hyp::ConicParams;
using hyp::Pt;

inline long double eval_f_ld(const ConicParams& q, long double x1, long double x2) {
    return (long double)q.q0 + (long double)q.q1 * x1 + (long double)q.q2 * x2 +
           (long double)q.q3 * x1 * x1 + (long double)q.q4 * x1 * x2 +
           (long double)q.q5 * x2 * x2;
}

struct QuadRoots {
    int n = 0;  // 0, 1 (double/linear) or 2, sorted ascending
    long double r[2] = {0, 0};
};

// Real roots of a*x^2 + b*x + c, with a linear fallback for tiny |a|.
inline QuadRoots solve_quad(long double a, long double b, long double c) {
    QuadRoots out;
    if (std::abs(a) < 1e-300) {
        if (std::abs(b) < 1e-300) return out;
        out.n = 1;
        out.r[0] = -c / b;
        return out;
    }
    const long double disc = b * b - 4 * a * c;
    if (disc < 0) return out;
    const long double s = std::sqrt(disc);
    const long double k = -0.5L * (b + (b >= 0 ? s : -s));
    long double r1 = k / a;
    long double r2 = (k != 0) ? c / k : r1;
    if (r1 > r2) std::swap(r1, r2);
    out.n = (disc == 0) ? 1 : 2;
    out.r[0] = r1;
    out.r[1] = r2;
    return out;
}

// x1 roots of f(q, (., x2)) = 0.
inline QuadRoots x1_roots(const ConicParams& q, long double x2) {
    return solve_quad(q.q3, (long double)q.q1 + (long double)q.q4 * x2,
                      (long double)q.q0 + (long double)q.q2 * x2 + (long double)q.q5 * x2 * x2);
}

// x2 roots of f(q, (x1, .)) = 0.
inline QuadRoots x2_roots(const ConicParams& q, long double x1) {
    return solve_quad(q.q5, (long double)q.q2 + (long double)q.q4 * x1,
                      (long double)q.q0 + (long double)q.q1 * x1 + (long double)q.q3 * x1 * x1);
}

inline long double delta1(const ConicParams& q, long double x2) {
    const long double b1 = (long double)q.q1 + (long double)q.q4 * x2;
    const long double c1 =
        (long double)q.q0 + (long double)q.q2 * x2 + (long double)q.q5 * x2 * x2;
    return b1 * b1 - 4 * (long double)q.q3 * c1;
}

// Ordinates where the x1-quadratic degenerates to a double root (the folds),
// from the textbook quadratic in x2.
inline QuadRoots fold_ordinates(const ConicParams& q) {
    const long double a2 = 4 * (long double)q.q3 * q.q5 - (long double)q.q4 * q.q4;
    const long double b2 = 4 * (long double)q.q3 * q.q2 - 2 * (long double)q.q1 * q.q4;
    const long double c2 = 4 * (long double)q.q3 * q.q0 - (long double)q.q1 * q.q1;
    return solve_quad(a2, b2, c2);
}

// Dense curve sample inside a box: ordinate sweeps solving for x1 plus
// abscissa sweeps solving for x2, so near-vertical and near-horizontal arcs
// are both caught. The branch-extremal points (where the root pair merges and
// uniform stepping undersamples the square-root behavior) are injected
// explicitly, as are the exact box edges.
inline std::vector<Pt> sample_curve(const ConicParams& q, const Box2& box, double step) {
    std::vector<Pt> pts;
    const auto keep = [&](long double x1, long double x2) {
        const Pt p{(double)x1, (double)x2};
        if (box.contains(p)) pts.push_back(p);
    };
    const auto sweep_w = [&](long double w) {
        const QuadRoots r = x1_roots(q, w);
        for (int i = 0; i < r.n; ++i) keep(r.r[i], w);
    };
    const auto sweep_u = [&](long double u) {
        const QuadRoots r = x2_roots(q, u);
        for (int i = 0; i < r.n; ++i) keep(u, r.r[i]);
    };
    for (long double w = box.x2().lo(); w < box.x2().hi(); w += step) sweep_w(w);
    sweep_w(box.x2().hi());
    for (long double u = box.x1().lo(); u < box.x1().hi(); u += step) sweep_u(u);
    sweep_u(box.x1().hi());

    if (std::abs(q.q3) > 1e-300) {
        const QuadRoots f = fold_ordinates(q);
        for (int i = 0; i < f.n; ++i) {
            const long double w = f.r[i];
            keep(-((long double)q.q1 + (long double)q.q4 * w) / (2 * (long double)q.q3), w);
        }
    }
    if (std::abs(q.q5) > 1e-300) {
        const ConicParams sw{q.q0, q.q2, q.q1, q.q5, q.q4, q.q3};
        const QuadRoots f = fold_ordinates(sw);
        for (int i = 0; i < f.n; ++i) {
            const long double u = f.r[i];
            keep(u, -((long double)q.q2 + (long double)q.q4 * u) / (2 * (long double)q.q5));
        }
    }
    return pts;
}

inline Box2 hull_of(const std::vector<Pt>& pts) {
    Box2 h = Box2::empty();
    for (const Pt& p : pts)
        h = hull(h, Box2(hyp::Interval(p.x1), hyp::Interval(p.x2)));
    return h;
}

// Hausdorff distance between two boxes in the Chebyshev metric; empty-empty
// is 0 and empty-vs-nonempty is +inf.
inline double box_hausdorff(const Box2& a, const Box2& b) {
    if (a.is_empty() && b.is_empty()) return 0.0;
    if (a.is_empty() || b.is_empty()) return std::numeric_limits<double>::infinity();
    double d = std::abs(a.x1().lo() - b.x1().lo());
    d = std::max(d, std::abs(a.x1().hi() - b.x1().hi()));
    d = std::max(d, std::abs(a.x2().lo() - b.x2().lo()));
    d = std::max(d, std::abs(a.x2().hi() - b.x2().hi()));
    return d;
}

inline double inf_norm_pt(const Pt& p) { return std::max(std::abs(p.x1), std::abs(p.x2)); }

// Uniform random hyperbolic parameter vector with coefficients in [-m, m].
// min_lead additionally bounds |q3| (and optionally |q5|) away from zero.
template <class Rng>
ConicParams random_hyperbola(Rng& rng, double m = 10.0, double min_lead = 0.0,
                             bool bound_q5 = false) {
    std::uniform_real_distribution<double> u(-m, m);
    for (;;) {
        const ConicParams q{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        if (!hyp::is_hyperbola(q)) continue;
        if (std::abs(q.q3) <= min_lead) continue;
        if (bound_q5 && std::abs(q.q5) <= min_lead) continue;
        return q;
    }
}

// A random point on the curve f(q, .) = 0: picks a feasible ordinate (outside
// the fold band when one exists) and one of the textbook x1 roots.
template <class Rng>
Pt random_curve_point(Rng& rng, const ConicParams& q, double spread = 10.0) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const QuadRoots folds = fold_ordinates(q);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        long double w;
        if (folds.n == 2) {
            // Sample on either side of the infeasible band.
            const bool below = u01(rng) < 0.5;
            const long double base = below ? folds.r[0] : folds.r[1];
            const long double off = u01(rng) * spread * (1 + std::abs((double)base));
            w = below ? base - off : base + off;
        } else {
            w = (u01(rng) * 2 - 1) * spread;
        }
        const QuadRoots r = x1_roots(q, w);
        if (r.n == 0) continue;
        const long double x1 = r.r[u01(rng) < 0.5 ? 0 : r.n - 1];
        if (!std::isfinite((double)x1)) continue;
        return Pt{(double)x1, (double)w};
    }
    return Pt{0, 0};
}

// Pseudo-distance ||x - a|| - ||x - b||.
inline long double pseudo_distance(const Pt& x, const Pt& a, const Pt& b) {
    const long double da = std::hypot((long double)x.x1 - a.x1, (long double)x.x2 - a.x2);
    const long double db = std::hypot((long double)x.x1 - b.x1, (long double)x.x2 - b.x2);
    return da - db;
}

// Point with ||x-a|| - ||x-b|| = ell, found by bisection along a ray from b.
// Returns nullopt when the ray never crosses the level.
template <class Rng>
std::optional<Pt> locus_point(Rng& rng, const Pt& a, const Pt& b, double ell) {
    std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double th = u(rng);
        const Pt dir{std::cos(th), std::sin(th)};
        const auto g = [&](long double t) {
            const Pt x{(double)(b.x1 + t * dir.x1), (double)(b.x2 + t * dir.x2)};
            return pseudo_distance(x, a, b) - (long double)ell;
        };
        long double lo = 0.0, hi = 1.0;
        // g(0) = ||a-b|| - ell > 0 for ell < ||a-b||; walk out until sign flips.
        if (g(lo) <= 0) continue;
        bool bracketed = false;
        for (int k = 0; k < 80; ++k) {
            if (g(hi) < 0) {
                bracketed = true;
                break;
            }
            hi *= 2;
            if (hi > 1e12) break;
        }
        if (!bracketed) continue;
        for (int k = 0; k < 200; ++k) {
            const long double mid = 0.5L * (lo + hi);
            (g(mid) > 0 ? lo : hi) = mid;
        }
        const long double t = 0.5L * (lo + hi);
        return Pt{(double)(b.x1 + t * dir.x1), (double)(b.x2 + t * dir.x2)};
    }
    return std::nullopt;
}

} // namespace oracle
