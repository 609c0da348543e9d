#include "hyp/symmetry.hpp"

#include <cassert>
#include <cstdlib>

#include "hyp/errors.hpp"

namespace hyp {

namespace {

inline int sgn(int c) { return c < 0 ? -1 : 1; }
inline int idx(int c) { return std::abs(c); }

inline bool valid(const SymB2& s) {
    return idx(s.c1) >= 1 && idx(s.c1) <= 2 && idx(s.c2) >= 1 && idx(s.c2) <= 2 &&
           idx(s.c1) != idx(s.c2);
}

// Matrix of the action, m[i][j] with apply(s, x)_i = sum_j m[i][j] * x_j.
// Row j has its nonzero entry sign(cj) in column |cj| - 1.
struct Mat2 {
    int m[2][2] = {{0, 0}, {0, 0}};
};

inline Mat2 matrix_of(const SymB2& s) {
    Mat2 a;
    a.m[0][idx(s.c1) - 1] = sgn(s.c1);
    a.m[1][idx(s.c2) - 1] = sgn(s.c2);
    return a;
}

} // namespace

const std::array<SymB2, 8>& sym_elements() {
    static const std::array<SymB2, 8> elems = {{
        {1, 2}, {-1, 2}, {2, 1}, {-1, -2}, {1, -2}, {-2, 1}, {2, -1}, {-2, -1},
    }};
    return elems;
}

Pt apply(const SymB2& s, const Pt& p) {
    assert(valid(s));
    const double in[2] = {p.x1, p.x2};
    return Pt{sgn(s.c1) * in[idx(s.c1) - 1], sgn(s.c2) * in[idx(s.c2) - 1]};
}

Box2 apply(const SymB2& s, const Box2& b) {
    assert(valid(s));
    if (b.is_empty()) return b;
    const Interval in[2] = {b.x1(), b.x2()};
    Interval o1 = in[idx(s.c1) - 1];
    Interval o2 = in[idx(s.c2) - 1];
    if (s.c1 < 0) o1 = neg(o1);
    if (s.c2 < 0) o2 = neg(o2);
    return Box2(o1, o2);
}

SymB2 inverse(const SymB2& s) {
    assert(valid(s));
    SymB2 r;
    int* out[2] = {&r.c1, &r.c2};
    // Component j of s sends input |cj| to output j; the inverse sends j back.
    *out[idx(s.c1) - 1] = sgn(s.c1) * 1;
    *out[idx(s.c2) - 1] = sgn(s.c2) * 2;
    return r;
}

SymB2 compose(const SymB2& s, const SymB2& t) {
    assert(valid(s) && valid(t));
    const int tc[2] = {t.c1, t.c2};
    return SymB2{sgn(s.c1) * tc[idx(s.c1) - 1], sgn(s.c2) * tc[idx(s.c2) - 1]};
}

ConicParams psi(const SymB2& s, const ConicParams& q) {
    // The coefficient transport is driven by the matrix of the inverse action
    // read column-wise, which equals the row-wise action matrix of s itself.
    const Mat2 a = matrix_of(s);
    const double a11 = a.m[0][0], a12 = a.m[0][1];
    const double a21 = a.m[1][0], a22 = a.m[1][1];
    // Signed permutation matrices never mix a column: the quadratic transport
    // below relies on a11*a21 == 0 (and a12*a22 == 0).
    assert(a11 * a21 == 0.0 && a12 * a22 == 0.0);
    ConicParams r;
    r.q0 = q.q0;
    r.q1 = a11 * q.q1 + a21 * q.q2;
    r.q2 = a12 * q.q1 + a22 * q.q2;
    r.q3 = a11 * a11 * q.q3 + a21 * a21 * q.q5;
    r.q4 = (a11 * a22 + a12 * a21) * q.q4;
    r.q5 = a12 * a12 * q.q3 + a22 * a22 * q.q5;
    return r;
}

ConicParams swap_params(const ConicParams& q) {
    return ConicParams{q.q0, q.q2, q.q1, q.q5, q.q4, q.q3};
}

std::string to_string(const SymB2& s) {
    return "(" + std::to_string(s.c1) + "," + std::to_string(s.c2) + ")";
}

SymB2 parse_sym(std::string_view text) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw IoError("bad symmetry: expected (c1,c2)");
    SymB2 s;
    s.c1 = static_cast<int>(parse_double(text.substr(0, comma)));
    s.c2 = static_cast<int>(parse_double(text.substr(comma + 1)));
    if (!valid(s)) throw IoError("bad symmetry: indices must be a signed permutation of {1,2}");
    return s;
}

} // namespace hyp
