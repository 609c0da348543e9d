#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyp/box.hpp"
#include "hyp/conic.hpp"
#include "hyp/symmetry.hpp"

namespace hyp {

// A contractor maps a box to a sub-box without losing any point of its
// associated set. Calls are pure; instances are immutable closures and safe
// to share across threads.
struct Contractor {
    std::function<Box2(const Box2&)> map;
    std::string label;
    std::optional<ConicParams> q;

    Box2 operator()(const Box2& b) const { return map(b); }
};

Contractor identity_ctc();

// Tightest interval containing phi1 over the ordinate range: the range is
// first intersected with the feasible ordinate set, then phi1 is evaluated
// with outward rounding at the piece endpoints and at every interior ordinate
// where it can turn around. Empty when no ordinate is feasible.
Interval phi1_extension(const ConicParams& q, const Interval& x2);

// Seed contractor for the graph {x1 = phi1(x2)}: contracts the x1 component
// to phi1_extension(q, [x2]) and leaves x2 unchanged. Minimal in the x1
// direction.
Contractor seed(const ConicParams& q);

// Action of a symmetry on a contractor: transport the box into the
// contractor's frame, contract, and transport back.
Contractor act(const SymB2& s, const Contractor& c);

Contractor intersect_ctc(const Contractor& a, const Contractor& b);
Contractor union_ctc(std::vector<Contractor> cs);  // hull of the results

// Minimal contractor for the full curve f(q, x) = 0, assembled from the four
// sign-flip images of the seed pair. Requires a hyperbola with |q3| and |q5|
// above the degeneracy tolerance.
Contractor minimal_hyperbola(const ConicParams& q);

enum class FbConstraint {
    Equation,    // f(q, x) = 0
    Inequality,  // f(q, x) <= 0
};

// One forward evaluation / backward projection sweep over the expression tree
// of f. Sound but not minimal.
Contractor forward_backward(const ConicParams& q, FbConstraint sense = FbConstraint::Equation);

} // namespace hyp
