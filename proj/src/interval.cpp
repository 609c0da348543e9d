#include "hyp/interval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "hyp/errors.hpp"

namespace hyp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();

inline double next_up(double v) {
    return v == kInf ? v : std::nextafter(v, kInf);
}

inline double next_down(double v) {
    return v == -kInf ? v : std::nextafter(v, -kInf);
}

// NaN-safe product of endpoint candidates: in extended interval arithmetic a
// zero factor annihilates an infinite one.
inline double prod(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
}

// NaN-safe quotient candidate: inf/inf is the limit 0.
inline double quot(double a, double b) {
    if (a == 0.0) return 0.0;
    if (std::isinf(a) && std::isinf(b)) return 0.0;
    return a / b;
}

} // namespace

namespace detail {

double add_down(double a, double b) {
    double s = a + b;
    if (s == -kInf) return s;
    if (s == kInf) return (a == kInf || b == kInf) ? kInf : kMax;
    if (std::isinf(a) || std::isinf(b)) return s;
    // two-sum residual: err = (a + b) - s, exactly
    double bv = s - a;
    double err = (a - (s - bv)) + (b - bv);
    return err < 0.0 ? next_down(s) : s;
}

double add_up(double a, double b) {
    double s = a + b;
    if (s == kInf) return s;
    if (s == -kInf) return (a == -kInf || b == -kInf) ? -kInf : -kMax;
    if (std::isinf(a) || std::isinf(b)) return s;
    double bv = s - a;
    double err = (a - (s - bv)) + (b - bv);
    return err > 0.0 ? next_up(s) : s;
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
    double p = prod(a, b);
    if (p == -kInf) return p;
    if (p == kInf) return (std::isinf(a) || std::isinf(b)) ? kInf : kMax;
    if (std::isinf(a) || std::isinf(b)) return p;
    double err = std::fma(a, b, -p);
    return err < 0.0 ? next_down(p) : p;
}

double mul_up(double a, double b) {
    double p = prod(a, b);
    if (p == kInf) return p;
    if (p == -kInf) return (std::isinf(a) || std::isinf(b)) ? -kInf : -kMax;
    if (std::isinf(a) || std::isinf(b)) return p;
    double err = std::fma(a, b, -p);
    return err > 0.0 ? next_up(p) : p;
}

double div_down(double a, double b) {
    if (a == 0.0) return 0.0;
    double q = quot(a, b);
    if (q == -kInf) return q;
    if (q == kInf) return std::isinf(a) ? kInf : kMax;
    if (std::isinf(a) || std::isinf(b)) return q;  // exact in extended reals
    // a/b = q - r/b with r = fma(q, b, -a), so the true quotient is below q
    // exactly when r/b > 0.
    double r = std::fma(q, b, -a);
    if (r != 0.0 && ((r > 0.0) == (b > 0.0))) return next_down(q);
    return q;
}

double div_up(double a, double b) {
    if (a == 0.0) return 0.0;
    double q = quot(a, b);
    if (q == kInf) return q;
    if (q == -kInf) return std::isinf(a) ? -kInf : -kMax;
    if (std::isinf(a) || std::isinf(b)) return q;
    double r = std::fma(q, b, -a);
    if (r != 0.0 && ((r > 0.0) != (b > 0.0))) return next_up(q);
    return q;
}

double sqrt_down(double a) {
    if (a == kInf) return kInf;
    double s = std::sqrt(a);
    double r = std::fma(s, s, -a);  // s^2 - a
    return r > 0.0 ? next_down(s) : s;
}

double sqrt_up(double a) {
    if (a == kInf) return kInf;
    double s = std::sqrt(a);
    double r = std::fma(s, s, -a);
    return r < 0.0 ? next_up(s) : s;
}

} // namespace detail

using namespace detail;

Interval add(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return Interval(add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi()));
}

Interval sub(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return Interval(sub_down(a.lo(), b.hi()), sub_up(a.hi(), b.lo()));
}

Interval neg(const Interval& a) {
    if (a.is_empty()) return a;
    return Interval(-a.hi(), -a.lo());
}

Interval mul(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    double lo = std::min(std::min(mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi())),
                         std::min(mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())));
    double hi = std::max(std::max(mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi())),
                         std::max(mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())));
    return Interval(lo, hi);
}

Interval div(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    if (b.lo() > 0.0 || b.hi() < 0.0) {
        double lo = std::min(std::min(div_down(a.lo(), b.lo()), div_down(a.lo(), b.hi())),
                             std::min(div_down(a.hi(), b.lo()), div_down(a.hi(), b.hi())));
        double hi = std::max(std::max(div_up(a.lo(), b.lo()), div_up(a.lo(), b.hi())),
                             std::max(div_up(a.hi(), b.lo()), div_up(a.hi(), b.hi())));
        return Interval(lo, hi);
    }
    // Divisor contains zero: return the hull of the quotient half-lines.
    if (b.lo() == 0.0 && b.hi() == 0.0) return Interval::empty();
    if (a.contains(0.0)) return Interval::entire();
    if (a.hi() < 0.0) {
        if (b.lo() == 0.0) return Interval(-kInf, div_up(a.hi(), b.hi()));
        if (b.hi() == 0.0) return Interval(div_down(a.hi(), b.lo()), kInf);
        return Interval::entire();
    }
    // a.lo() > 0
    if (b.lo() == 0.0) return Interval(div_down(a.lo(), b.hi()), kInf);
    if (b.hi() == 0.0) return Interval(-kInf, div_up(a.lo(), b.lo()));
    return Interval::entire();
}

Interval sqr(const Interval& a) {
    if (a.is_empty()) return a;
    if (a.lo() >= 0.0) return Interval(mul_down(a.lo(), a.lo()), mul_up(a.hi(), a.hi()));
    if (a.hi() <= 0.0) return Interval(mul_down(a.hi(), a.hi()), mul_up(a.lo(), a.lo()));
    return Interval(0.0, std::max(mul_up(a.lo(), a.lo()), mul_up(a.hi(), a.hi())));
}

Interval sqrt(const Interval& a) {
    Interval d = intersect(a, Interval(0.0, kInf));
    if (d.is_empty()) return d;
    return Interval(sqrt_down(d.lo()), sqrt_up(d.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    double lo = std::max(a.lo(), b.lo());
    double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return Interval::empty();
    return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

double width(const Interval& a) {
    if (a.is_empty()) return 0.0;
    return a.hi() - a.lo();
}

double midpoint(const Interval& a) {
    return std::midpoint(a.lo(), a.hi());
}

std::string format_double(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token) {
    if (token == "inf" || token == "+inf") return kInf;
    if (token == "-inf") return -kInf;
    double v = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw IoError("cannot parse number: '" + std::string(token) + "'");
    return v;
}

std::string to_string(const Interval& a) {
    return format_double(a.lo()) + "," + format_double(a.hi());
}

} // namespace hyp
