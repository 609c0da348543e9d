#pragma once

#include <functional>
#include <string>

#include "hyp/contractor.hpp"

namespace hyp {

// Three-valued rigorous point test: -1 proven inside the set, +1 proven
// outside, 0 undecided.
using MembershipTest = std::function<int(const Pt&)>;

// A separator pairs two contractors for a set X:
//   contract_in  removes regions proven inside X  (what it peels off is in X),
//   contract_out removes regions proven outside X.
// A paver emits the peeled regions as Inside / Outside respectively.
struct Separator {
    Contractor contract_in;
    Contractor contract_out;
    std::string label;
};

// Membership test for the region {f(q, x) <= 0}, decided by interval
// evaluation at the point; an undecided sign yields 0.
MembershipTest leq0_membership(const ConicParams& q);

// Builds a separator from a contractor that is sound for the boundary of X
// plus a pointwise test. The complement of the contracted box is peeled into
// boundary-free slabs, each classified by its midpoint; undecidable slabs are
// conservatively retained by both components.
Separator from_boundary(const Contractor& boundary, MembershipTest membership,
                        std::string label = "sep");

Separator complement(const Separator& s);
Separator intersect_sep(const Separator& a, const Separator& b);

// Separators with no boundary at all, used for provably empty or full sets.
Separator all_outside_separator();
Separator full_plane_separator();

enum class CtcKind { Minimal, FwdBwd };

// Separator for the hyperbolic area {f(q, x) <= 0}, with the boundary handled
// either by the minimal curve contractor or by the forward-backward baseline.
Separator hyperbolic_area_separator(const ConicParams& q, CtcKind kind);

} // namespace hyp
