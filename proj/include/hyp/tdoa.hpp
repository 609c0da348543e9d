#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyp/separator.hpp"

namespace hyp {

// Coefficients of the quartic-free quadratic whose zero set carries every
// point with | ||x-a|| - ||x-b|| | = ell. Both signed branches satisfy
// f(q, x) = 0 (the construction squares twice), and for 0 < ell < ||a-b||
// the sign convention is f(q, x) <= 0  <=>  | ||x-a|| - ||x-b|| | >= ell.
// Evaluated in factored form to avoid cancellation for large coordinates.
ConicParams foci_coeffs(const Pt& a, const Pt& b, double ell);

// Separator for the pseudo-distance band
//   { x : ell.lo <= | ||x-a|| - ||x-b|| | <= ell.hi }.
// When ell.lo exceeds the focal distance the band is infeasible by the
// triangle inequality and the empty-set separator is returned; other
// non-hyperbolic endpoint conics raise NotAHyperbola.
Separator band_separator(const Pt& a, const Pt& b, const Interval& ell, CtcKind kind);

struct Band {
    std::string m1, m2;  // microphone names
    Interval ell;        // pseudo-distance bounds, meters
};

struct Scenario {
    std::map<std::string, Pt> microphones;
    std::vector<Band> bands;
    Box2 frame;
    double eps = 0.0;
};

// JSON object with fields microphones {name: [x1,x2]}, bands
// [{pair:[n1,n2], ell:[lo,hi]}], frame [x1lo,x1hi,x2lo,x2hi], eps.
Scenario load_scenario(const std::string& path);  // throws IoError

// Separator for one band of the scenario (bands[i]).
Separator scenario_band_separator(const Scenario& s, std::size_t i, CtcKind kind);

// Intersection of all band separators: the full localization set.
Separator localization_set(const Scenario& s, CtcKind kind);

} // namespace hyp
