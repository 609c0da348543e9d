#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "hyp/errors.hpp"
#include "hyp/paver.hpp"
#include "hyp/tdoa.hpp"
#include "oracle.hpp"

using namespace hyp;

namespace {
std::mt19937_64 rng(0x5eed0007);
const Pt kA{13, 7}, kB{4, 6}, kC{16, 10};

Scenario paper_scenario() {
    Scenario s;
    s.microphones = {{"a", kA}, {"b", kB}, {"c", kC}};
    s.bands = {{"a", "b", Interval(7.9, 8.1)}, {"a", "c", Interval(3.9, 4.1)}};
    s.frame = Box2(Interval(0, 20), Interval(0, 20));
    s.eps = 0.05;
    return s;
}
} // namespace

TEST_CASE("foci coefficients at the reference configuration") {
    const ConicParams q = foci_coeffs(kA, kB, 8.0);
    CHECK(q.q3 == -68.0);
    CHECK(q.q4 == -72.0);
    CHECK(q.q5 == 252.0);
    CHECK(4.0 * q.q3 * q.q5 - q.q4 * q.q4 == -73728.0);
    CHECK(is_hyperbola(q));
}

TEST_CASE("degenerate foci collapse to the zero polynomial") {
    const ConicParams q = foci_coeffs(kA, kA, 0.0);
    CHECK(q.q0 == 0.0);
    CHECK(q.q1 == 0.0);
    CHECK(q.q2 == 0.0);
    CHECK(q.q3 == 0.0);
    CHECK(q.q4 == 0.0);
    CHECK(q.q5 == 0.0);
}

TEST_CASE("locus identity on random foci pairs") {
    std::uniform_real_distribution<double> u(-10, 10);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const Pt a{u(rng), u(rng)};
        const Pt b{u(rng), u(rng)};
        const double d = std::hypot(a.x1 - b.x1, a.x2 - b.x2);
        if (d < 0.5) continue;
        std::uniform_real_distribution<double> ul(0.05 * d, 0.95 * d);
        const double ell = ul(rng);
        const ConicParams q = foci_coeffs(a, b, ell);
        CHECK(is_hyperbola(q));
        const double scale =
            std::max({std::abs(a.x1), std::abs(a.x2), std::abs(b.x1), std::abs(b.x2), ell});
        for (int k = 0; k < 6; ++k) {
            const auto pt = oracle::locus_point(rng, a, b, ell);
            if (!pt) continue;
            CHECK(std::abs(eval_f(q, *pt)) <= 1e-6 * (1.0 + std::pow(scale, 4)));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("the sign of f selects the absolute pseudo-distance band") {
    // Squaring keeps the mirror branch: f <= 0 exactly where
    // | ||x-a|| - ||x-b|| | >= ell.
    std::uniform_real_distribution<double> u(-2, 22);
    const ConicParams q = foci_coeffs(kA, kB, 8.0);
    for (int i = 0; i < 20000; ++i) {
        const Pt p{u(rng), u(rng)};
        const double g = (double)oracle::pseudo_distance(p, kA, kB);
        const double f = eval_f(q, p);
        if (std::abs(std::abs(g) - 8.0) < 1e-3) continue;  // too close to call
        CHECK((f <= 0.0) == (std::abs(g) >= 8.0));
    }
}

TEST_CASE("band separator never cuts the locus, never claims the far field") {
    const Separator band = band_separator(kA, kB, Interval(7.9, 8.1), CtcKind::Minimal);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    int on_locus = 0, far_out = 0;
    for (int i = 0; i < 400; ++i) {
        const auto pt = oracle::locus_point(rng, kA, kB, 8.0);
        if (!pt) continue;
        const Box2 box(Interval(pt->x1 + u(rng) - 0.5, pt->x1 + u(rng) + 0.5),
                       Interval(pt->x2 + u(rng) - 0.5, pt->x2 + u(rng) + 0.5));
        if (!box.contains(*pt)) continue;
        CHECK(band.contract_out(box).contains(*pt));
        ++on_locus;
    }
    // points whose |pseudo-distance| is far outside the band must never be
    // removed by contract_in
    std::uniform_real_distribution<double> up(0, 20);
    for (int i = 0; i < 4000; ++i) {
        const Pt p{up(rng), up(rng)};
        const double g = (double)oracle::pseudo_distance(p, kA, kB);
        if (std::abs(g) > 6.9 && std::abs(g) < 9.1) continue;
        const Box2 box(Interval(p.x1 - 0.3, p.x1 + 0.3), Interval(p.x2 - 0.3, p.x2 + 0.3));
        CHECK(band.contract_in(box).contains(p));
        ++far_out;
    }
    CHECK(on_locus > 200);
    CHECK(far_out > 1000);
}

TEST_CASE("degenerate band at a point pseudo-distance") {
    const Separator band = band_separator(kA, kB, Interval(8.1, 8.1), CtcKind::Minimal);
    // nothing can be proven inside a measure-zero set
    std::uniform_real_distribution<double> u(0, 20);
    for (int i = 0; i < 300; ++i) {
        const Box2 box(Interval(u(rng), u(rng)), Interval(u(rng), u(rng)));
        if (box.is_empty()) continue;
        CHECK(band.contract_in(box) == box);
    }
}

TEST_CASE("band beyond the focal distance is infeasible, not an error") {
    const Separator band = band_separator(kA, kB, Interval(10, 11), CtcKind::Minimal);
    const Box2 frame(Interval(0, 20), Interval(0, 20));
    const Paving p = sivia(band, frame, 0.5);
    REQUIRE(p.boxes.size() == 1);
    CHECK(p.boxes[0].cls == BoxClass::Outside);
    // triangle inequality: no point admits such a pseudo-distance
    std::uniform_real_distribution<double> u(0, 20);
    for (int i = 0; i < 1000; ++i) {
        const Pt p2{u(rng), u(rng)};
        CHECK(std::abs((double)oracle::pseudo_distance(p2, kA, kB)) < 10.0);
    }
}

TEST_CASE("band straddling the focal distance raises degeneracy") {
    const double d = std::hypot(kA.x1 - kB.x1, kA.x2 - kB.x2);  // ~9.0554
    CHECK_THROWS_AS(band_separator(kA, kB, Interval(8.0, d + 0.5), CtcKind::Minimal),
                    NotAHyperbola);
    CHECK_THROWS_AS(band_separator(kA, kB, Interval(0.0, 8.0), CtcKind::Minimal),
                    NotAHyperbola);
}

TEST_CASE("scenario file loading") {
    const Scenario s = load_scenario(std::string(TEST_DATA_DIR) + "/tdoa_paper.json");
    CHECK(s.microphones.at("a") == kA);
    CHECK(s.microphones.at("b") == kB);
    CHECK(s.microphones.at("c") == kC);
    REQUIRE(s.bands.size() == 2);
    CHECK(s.bands[0].ell == Interval(7.9, 8.1));
    CHECK(s.bands[1].ell == Interval(3.9, 4.1));
    CHECK(s.frame == Box2(Interval(0, 20), Interval(0, 20)));
    CHECK(s.eps == 0.05);
    CHECK_THROWS_AS(load_scenario("missing_file.json"), IoError);

    const std::string bad = "test_bad_scenario.json";
    std::ofstream(bad) << "{ \"microphones\": { \"a\": [0, 0] } ";
    CHECK_THROWS_AS(load_scenario(bad), IoError);
    std::remove(bad.c_str());
}

TEST_CASE("localization paving at coarse accuracy") {
    Scenario s = paper_scenario();
    s.eps = 0.25;
    const Separator sep = localization_set(s, CtcKind::Minimal);
    const Paving p = sivia(sep, s.frame, s.eps);
    const PavingMetrics m = metrics(p);
    CHECK(m.area_in > 0.0);

    // inside boxes satisfy both absolute bands; outside boxes violate one
    std::uniform_real_distribution<double> u(0, 1);
    for (const auto& pb : p.boxes) {
        const Pt pt{pb.box.x1().lo() + u(rng) * width(pb.box.x1()),
                    pb.box.x2().lo() + u(rng) * width(pb.box.x2())};
        const double gab = std::abs((double)oracle::pseudo_distance(pt, kA, kB));
        const double gac = std::abs((double)oracle::pseudo_distance(pt, kA, kC));
        const bool in_bands = gab >= 7.9 && gab <= 8.1 && gac >= 3.9 && gac <= 4.1;
        if (pb.cls == BoxClass::Inside) CHECK(in_bands);
        // Outside boxes can graze a band boundary through shared edges only;
        // an interior sample must not be deep inside both bands.
        if (pb.cls == BoxClass::Outside) {
            const bool deep = gab > 7.9 + 1e-9 && gab < 8.1 - 1e-9 && gac > 3.9 + 1e-9 &&
                              gac < 4.1 - 1e-9;
            CHECK(!deep);
        }
    }
}

TEST_CASE("contradictory scenario paves all-outside") {
    Scenario s = paper_scenario();
    s.bands[0].ell = Interval(10, 11);  // beyond ||a-b||
    s.eps = 0.5;
    const Separator sep = localization_set(s, CtcKind::Minimal);
    const Paving p = sivia(sep, s.frame, s.eps);
    REQUIRE(p.boxes.size() == 1);
    CHECK(p.boxes[0].cls == BoxClass::Outside);
}
