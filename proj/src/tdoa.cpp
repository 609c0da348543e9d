#include "hyp/tdoa.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "hyp/errors.hpp"

namespace hyp {

ConicParams foci_coeffs(const Pt& a, const Pt& b, double ell) {
    const double u = a.x1 - b.x1;
    const double v = a.x2 - b.x2;
    const double na = a.x1 * a.x1 + a.x2 * a.x2;
    const double nb = b.x1 * b.x1 + b.x2 * b.x2;
    const double l2 = ell * ell;
    ConicParams q;
    q.q0 = -((na - nb) * (na - nb) - 2.0 * l2 * (na + nb) + l2 * l2);
    q.q1 = 4.0 * (u * (na - nb) - l2 * (a.x1 + b.x1));
    q.q2 = 4.0 * (v * (na - nb) - l2 * (a.x2 + b.x2));
    q.q3 = 4.0 * (l2 - u * u);
    q.q4 = -8.0 * u * v;
    q.q5 = 4.0 * (l2 - v * v);
    return q;
}

Separator band_separator(const Pt& a, const Pt& b, const Interval& ell, CtcKind kind) {
    if (ell.is_empty()) throw std::invalid_argument("band_separator: empty pseudo-distance range");
    const double d = std::hypot(a.x1 - b.x1, a.x2 - b.x2);
    if (ell.lo() > d) return all_outside_separator();  // triangle inequality

    const ConicParams q_hi = foci_coeffs(a, b, ell.hi());
    const ConicParams q_lo = foci_coeffs(a, b, ell.lo());
    if (!is_hyperbola(q_hi) || !is_hyperbola(q_lo))
        throw NotAHyperbola("band_separator: pseudo-distance bound at or beyond focal distance");

    // {f_hi >= 0} picks |diff| <= ell.hi, {f_lo <= 0} picks |diff| >= ell.lo.
    return intersect_sep(complement(hyperbolic_area_separator(q_hi, kind)),
                         hyperbolic_area_separator(q_lo, kind));
}

namespace {

Pt microphone(const Scenario& s, const std::string& name) {
    const auto it = s.microphones.find(name);
    if (it == s.microphones.end()) throw IoError("scenario: unknown microphone '" + name + "'");
    return it->second;
}

} // namespace

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open scenario: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    try {
        Scenario s;
        for (const auto& [name, xy] : j.at("microphones").items())
            s.microphones[name] = Pt{xy.at(0).get<double>(), xy.at(1).get<double>()};
        for (const auto& b : j.at("bands")) {
            Band band;
            band.m1 = b.at("pair").at(0).get<std::string>();
            band.m2 = b.at("pair").at(1).get<std::string>();
            band.ell = Interval(b.at("ell").at(0).get<double>(), b.at("ell").at(1).get<double>());
            if (band.ell.is_empty()) throw IoError(path + ": band with empty ell range");
            microphone(s, band.m1);
            microphone(s, band.m2);
            s.bands.push_back(band);
        }
        const auto& fr = j.at("frame");
        s.frame = Box2(Interval(fr.at(0).get<double>(), fr.at(1).get<double>()),
                       Interval(fr.at(2).get<double>(), fr.at(3).get<double>()));
        s.eps = j.at("eps").get<double>();
        if (s.frame.is_empty() || !s.frame.is_bounded())
            throw IoError(path + ": frame must be a nonempty bounded box");
        if (!(s.eps > 0.0)) throw IoError(path + ": eps must be positive");
        if (s.bands.empty()) throw IoError(path + ": at least one band required");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

Separator scenario_band_separator(const Scenario& s, std::size_t i, CtcKind kind) {
    const Band& b = s.bands.at(i);
    Separator sep = band_separator(microphone(s, b.m1), microphone(s, b.m2), b.ell, kind);
    sep.label = "X_" + b.m1 + b.m2;
    return sep;
}

Separator localization_set(const Scenario& s, CtcKind kind) {
    Separator acc = scenario_band_separator(s, 0, kind);
    for (std::size_t i = 1; i < s.bands.size(); ++i)
        acc = intersect_sep(acc, scenario_band_separator(s, i, kind));
    acc.label = "X";
    return acc;
}

} // namespace hyp
