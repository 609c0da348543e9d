#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

namespace hyp {

// Closed interval over the extended reals with outward-rounded endpoints.
//
// All arithmetic is evaluated in round-to-nearest and then re-directed with an
// error-free residual test (two-sum for +/-, fma for *, / and sqrt), nudging an
// endpoint by one ulp only when the rounded value lies on the wrong side of the
// exact result. Exact results therefore stay exact, and every operation
// encloses the true real image.
//
// Empty is the canonical sentinel [+inf, -inf], never NaN endpoints, so
// equality and serialization are deterministic. Unbounded endpoints are
// allowed: a nonempty interval satisfies lo <= hi, lo < +inf, hi > -inf.
class Interval {
public:
    constexpr Interval() : lo_(0.0), hi_(0.0) {}
    constexpr Interval(double v) : lo_(v), hi_(v) {}
    constexpr Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo_ <= hi_) || lo_ == inf() || hi_ == -inf()) *this = empty();
    }

    static constexpr Interval empty() {
        Interval r;
        r.lo_ = inf();
        r.hi_ = -inf();
        return r;
    }
    static constexpr Interval entire() {
        Interval r;
        r.lo_ = -inf();
        r.hi_ = inf();
        return r;
    }

    constexpr double lo() const { return lo_; }
    constexpr double hi() const { return hi_; }

    constexpr bool is_empty() const { return lo_ > hi_; }
    constexpr bool is_bounded() const { return !is_empty() && lo_ != -inf() && hi_ != inf(); }
    constexpr bool contains(double v) const { return lo_ <= v && v <= hi_; }
    constexpr bool contains(const Interval& other) const {
        return other.is_empty() || (!is_empty() && lo_ <= other.lo_ && other.hi_ <= hi_);
    }
    constexpr bool is_degenerate() const { return lo_ == hi_; }

    bool operator==(const Interval&) const = default;

private:
    static constexpr double inf() { return std::numeric_limits<double>::infinity(); }
    double lo_, hi_;
};

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
Interval div(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);

Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

double width(const Interval& a);     // hi - lo, 0 for Empty, +inf when unbounded
double midpoint(const Interval& a);  // requires a nonempty bounded interval

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

// CSV-facing formatting: shortest decimal form that parses back to the same
// double; unbounded endpoints use the tokens "inf" / "-inf".
std::string format_double(double v);
double parse_double(std::string_view token);  // throws IoError on bad input
std::string to_string(const Interval& a);     // "lo,hi"

namespace detail {
// Directed building blocks, usable wherever a single rounded scalar is needed.
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);
} // namespace detail

} // namespace hyp
