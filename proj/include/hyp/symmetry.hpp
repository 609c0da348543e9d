#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hyp/box.hpp"
#include "hyp/conic.hpp"

namespace hyp {

// Signed permutation of {1, 2} in Cauchy one-line notation: component j of the
// image takes the input coordinate |cj| with the sign of cj, i.e.
//   apply((c1,c2), x)_j = sign(cj) * x_{|cj|}.
// These eight elements form the symmetry group of the square [-1,1]^2.
struct SymB2 {
    int c1 = 1;
    int c2 = 2;
    bool operator==(const SymB2&) const = default;
};

// The eight group elements, in a fixed order starting with the identity
// (1,2), the axis flip (-1,2) and the swap (2,1).
const std::array<SymB2, 8>& sym_elements();

inline constexpr SymB2 sym_identity() { return SymB2{1, 2}; }
inline constexpr SymB2 sym_swap() { return SymB2{2, 1}; }

Pt apply(const SymB2& s, const Pt& p);
Box2 apply(const SymB2& s, const Box2& b);

SymB2 inverse(const SymB2& s);
// compose(s, t) acts as "t first, then s": apply(compose(s,t), x) ==
// apply(s, apply(t, x)).
SymB2 compose(const SymB2& s, const SymB2& t);

// Parameter transport along a symmetry: f(psi(s, q), y) == f(q, apply(s, y))
// for all y, hence f(psi(s, q), apply(inverse(s), x)) == f(q, x). Note the
// composition order: psi(compose(s, t), q) == psi(t, psi(s, q)).
ConicParams psi(const SymB2& s, const ConicParams& q);

// The coefficient permutation exchanging the roles of x1 and x2; equal to
// psi(sym_swap(), q) and an involution.
ConicParams swap_params(const ConicParams& q);

std::string to_string(const SymB2& s);        // "(c1,c2)"
SymB2 parse_sym(std::string_view text);       // throws IoError

} // namespace hyp
