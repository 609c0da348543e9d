#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hyp/box.hpp"
#include "hyp/interval.hpp"

namespace hyp {

// Coefficients of the quadratic form
//   f(q, x) = q0 + q1*x1 + q2*x2 + q3*x1^2 + q4*x1*x2 + q5*x2^2.
// The zero set is a hyperbola exactly when 4*q3*q5 - q4^2 < 0.
struct ConicParams {
    double q0 = 0, q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0;
    bool operator==(const ConicParams&) const = default;
};

double inf_norm(const ConicParams& q);

// Degeneracy threshold for a quadratic leading coefficient, relative to the
// overall coefficient scale.
double leading_coeff_tolerance(const ConicParams& q);

double eval_f(const ConicParams& q, const Pt& x);
Interval eval_f(const ConicParams& q, const Box2& b);  // natural interval extension

bool is_hyperbola(const ConicParams& q);

// Largest x1 with f(q, (x1, x2)) = 0 at a fixed ordinate. Throws
// DegenerateLeadingCoefficient when |q3| is below tolerance and
// InfeasibleOrdinate when the curve has no point at this ordinate.
double phi1(const ConicParams& q, double x2);

// Ordinate band between the two folds of the curve: the closed interval whose
// endpoints are the only ordinates where the x1-quadratic has a double root.
// Strictly inside it the curve has no points; outside it has two x1 roots.
// Empty when the curve spans every ordinate. Requires is_hyperbola(q).
Interval rho(const ConicParams& q);

// Extremal points of the two branches. North/South sit at the rho(q)
// endpoints (absent together when rho is empty); East/West are the same
// construction after swapping the roles of x1 and x2.
struct CardinalPoints {
    std::optional<Pt> north, south, east, west;
    int count() const {
        return int(north.has_value()) + int(south.has_value()) + int(east.has_value()) +
               int(west.has_value());
    }
};

CardinalPoints cardinal_points(const ConicParams& q);

// "q0,q1,q2,q3,q4,q5" with round-trip-exact number formatting.
std::string to_string(const ConicParams& q);
ConicParams parse_conic(std::string_view text);  // throws IoError

namespace detail {

// Enclosures of the fold ordinates (roots of the discriminant quadratic).
// `certain` reports whether the fold pair provably exists; when the root
// discriminant straddles zero the enclosures are still returned but feasible
// pieces must not be carved with them.
struct FoldRoots {
    bool exists = false;
    bool certain = false;
    Interval lo_root = Interval::empty();
    Interval hi_root = Interval::empty();
};

FoldRoots fold_roots(const ConicParams& q);  // requires is_hyperbola(q)

// Interval extension of phi1 over a set of ordinates. Empty when the whole
// ordinate range is certainly infeasible. The square-root argument is clamped
// at zero so fold-adjacent rounding cannot produce spurious emptiness.
Interval phi1_enclosure(const ConicParams& q, const Interval& x2);

// Directions in which phi1 escapes along an unbounded ordinate tail, decided
// by the asymptote slope signs; both flags set when the sign is not separated.
struct TailSigns {
    bool plus_inf = false;
    bool minus_inf = false;
};

TailSigns phi1_limit(const ConicParams& q, bool plus_dir);

} // namespace detail

} // namespace hyp
