#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hyp/errors.hpp"
#include "hyp/paver.hpp"
#include "hyp/tdoa.hpp"

using namespace hyp;

namespace {

Box2 parse_frame(const std::string& text) {
    double v[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const auto comma = text.find(',', pos);
        const bool last = (i == 3);
        if (last != (comma == std::string::npos))
            throw CLI::ValidationError("--frame", "expected x1lo,x1hi,x2lo,x2hi");
        v[i] = parse_double(
            std::string_view(text).substr(pos, last ? text.size() - pos : comma - pos));
        pos = comma + 1;
    }
    const Box2 frame(Interval(v[0], v[1]), Interval(v[2], v[3]));
    if (frame.is_empty() || !frame.is_bounded())
        throw CLI::ValidationError("--frame", "frame must be a nonempty bounded box");
    return frame;
}

CtcKind parse_kind(const std::string& text) {
    if (text == "minimal") return CtcKind::Minimal;
    if (text == "fwdbwd") return CtcKind::FwdBwd;
    throw CLI::ValidationError("--contractor", "expected minimal or fwdbwd");
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void print_report(const std::string& target, const std::string& kind, const Paving& p,
                  double wall_ms) {
    const PavingMetrics m = metrics(p);
    std::size_t n_in = 0, n_out = 0, n_unc = 0;
    for (const auto& pb : p.boxes) {
        if (pb.cls == BoxClass::Inside) ++n_in;
        else if (pb.cls == BoxClass::Outside) ++n_out;
        else ++n_unc;
    }
    std::printf("%s\n", target.c_str());
    std::printf("  contractor: %s\n", kind.c_str());
    std::printf("  frame: [%s]x[%s]  eps: %s\n", to_string(p.frame.x1()).c_str(),
                to_string(p.frame.x2()).c_str(), format_double(p.eps).c_str());
    std::printf("  boxes: %zu (in %zu / out %zu / unc %zu)\n", p.boxes.size(), n_in, n_out,
                n_unc);
    std::printf("  area: in %.6g, out %.6g, unc %.6g\n", m.area_in, m.area_out, m.area_unc);
    std::printf("  time: %.1f ms\n", wall_ms);
}

SvgMarkers cardinal_markers(const ConicParams& q) {
    SvgMarkers markers;
    const CardinalPoints cp = cardinal_points(q);
    if (cp.north) markers.push_back({*cp.north, "black"});
    if (cp.south) markers.push_back({*cp.south, "orange"});
    if (cp.west) markers.push_back({*cp.west, "blue"});
    if (cp.east) markers.push_back({*cp.east, "red"});
    return markers;
}

void print_cardinal(const ConicParams& q) {
    const CardinalPoints cp = cardinal_points(q);
    const auto line = [&](const char* name, const std::optional<Pt>& p) {
        if (p)
            std::printf("%s: (%.9g, %.9g)  |f| = %.3g\n", name, p->x1, p->x2,
                        std::abs(eval_f(q, *p)));
    };
    line("North", cp.north);
    line("South", cp.south);
    line("East", cp.east);
    line("West", cp.west);
    std::printf("North/South: %s; East/West: %s\n", cp.north ? "present" : "none",
                cp.east ? "present" : "none");
}

int cmd_pave(const ConicParams& q, const Box2& frame, double eps, CtcKind kind,
             const std::string& kind_name, const std::string& out, const std::string& svg,
             int workers) {
    const Separator sep = hyperbolic_area_separator(q, kind);
    Timer t;
    const Paving p = sivia(sep, frame, eps, workers);
    const double ms = t.ms();
    write_csv(out, p);
    if (!svg.empty()) write_svg(svg, p, cardinal_markers(q));
    print_report("pave q=" + to_string(q), kind_name, p, ms);
    print_cardinal(q);
    std::printf("  csv: %s\n", out.c_str());
    if (!svg.empty()) std::printf("  svg: %s\n", svg.c_str());
    return 0;
}

int cmd_tdoa(const std::string& scenario_path, CtcKind kind, const std::string& kind_name,
             const std::string& out_prefix, const std::string& svg_prefix, int workers) {
    const Scenario s = load_scenario(scenario_path);
    std::vector<std::pair<std::string, Separator>> jobs;
    for (std::size_t i = 0; i < s.bands.size(); ++i)
        jobs.push_back({s.bands[i].m1 + s.bands[i].m2, scenario_band_separator(s, i, kind)});
    jobs.push_back({"X", localization_set(s, kind)});

    for (const auto& [name, sep] : jobs) {
        Timer t;
        const Paving p = sivia(sep, s.frame, s.eps, workers);
        const double ms = t.ms();
        const std::string csv = out_prefix + "_" + name + ".csv";
        write_csv(csv, p);
        if (!svg_prefix.empty()) {
            SvgMarkers mics;
            for (const auto& [mic_name, pt] : s.microphones) mics.push_back({pt, "black"});
            write_svg(svg_prefix + "_" + name + ".svg", p, mics);
        }
        print_report("tdoa " + scenario_path + " set " + name, kind_name, p, ms);
        std::printf("  csv: %s\n", csv.c_str());
    }
    return 0;
}

int cmd_compare(const std::vector<std::pair<std::string, Separator>>& sets, const Box2& frame,
                double eps, int workers) {
    std::printf("%-8s %-10s %10s %12s %12s %12s %10s\n", "set", "contractor", "boxes",
                "area_in", "area_out", "area_unc", "time_ms");
    double unc_minimal = -1.0, unc_fwdbwd = -1.0;
    for (const auto& [name, sep] : sets) {
        Timer t;
        const Paving p = sivia(sep, frame, eps, workers);
        const double ms = t.ms();
        const PavingMetrics m = metrics(p);
        const auto space = name.find(' ');
        const std::string set_name = name.substr(0, space);
        const std::string kind_name = name.substr(space + 1);
        std::printf("%-8s %-10s %10zu %12.6g %12.6g %12.6g %10.1f\n", set_name.c_str(),
                    kind_name.c_str(), p.boxes.size(), m.area_in, m.area_out, m.area_unc, ms);
        if (kind_name == "minimal") unc_minimal = m.area_unc;
        else unc_fwdbwd = m.area_unc;
    }
    if (unc_minimal >= 0.0 && unc_fwdbwd > 0.0)
        std::printf("uncertain-area ratio (minimal/fwdbwd): %.4f\n", unc_minimal / unc_fwdbwd);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"contractor/separator paver for hyperbolic areas and TDoA localization"};
    app.require_subcommand(1);

    std::string q_text, frame_text = "-2,2,-2,2", kind_text = "minimal";
    std::string out_path = "paving.csv", svg_path, scenario_path, out_prefix = "tdoa",
                svg_prefix;
    double eps = 0.1;
    int workers = 1;

    auto* pave = app.add_subcommand("pave", "pave a hyperbolic area {f(q,x) <= 0}");
    pave->add_option("--q", q_text, "conic coefficients q0,q1,q2,q3,q4,q5")->required();
    pave->add_option("--frame", frame_text, "paving frame x1lo,x1hi,x2lo,x2hi");
    pave->add_option("--eps", eps, "paving accuracy")->required()->check(CLI::PositiveNumber);
    pave->add_option("--contractor", kind_text, "minimal|fwdbwd");
    pave->add_option("--out", out_path, "paving CSV path");
    pave->add_option("--svg", svg_path, "also draw the paving to this SVG");
    pave->add_option("--workers", workers, "paver worker threads")->check(CLI::PositiveNumber);

    auto* tdoa = app.add_subcommand("tdoa", "pave the localization sets of a scenario");
    tdoa->add_option("--scenario", scenario_path, "scenario JSON path")->required();
    tdoa->add_option("--contractor", kind_text, "minimal|fwdbwd");
    tdoa->add_option("--out", out_prefix, "output CSV prefix");
    tdoa->add_option("--svg", svg_prefix, "output SVG prefix");
    tdoa->add_option("--workers", workers, "paver worker threads")->check(CLI::PositiveNumber);

    auto* card = app.add_subcommand("cardinal", "print the cardinal points of a hyperbola");
    card->add_option("--q", q_text, "conic coefficients q0,q1,q2,q3,q4,q5")->required();

    auto* comp = app.add_subcommand("compare", "run both contractors and compare pavings");
    comp->add_option("--q", q_text, "conic coefficients q0,q1,q2,q3,q4,q5");
    comp->add_option("--scenario", scenario_path, "scenario JSON path");
    comp->add_option("--frame", frame_text, "paving frame (with --q)");
    comp->add_option("--eps", eps, "paving accuracy")->check(CLI::PositiveNumber);
    comp->add_option("--workers", workers, "paver worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);

        if (pave->parsed()) {
            return cmd_pave(parse_conic(q_text), parse_frame(frame_text), eps,
                            parse_kind(kind_text), kind_text, out_path, svg_path, workers);
        }
        if (tdoa->parsed()) {
            return cmd_tdoa(scenario_path, parse_kind(kind_text), kind_text, out_prefix,
                            svg_prefix, workers);
        }
        if (card->parsed()) {
            print_cardinal(parse_conic(q_text));
            return 0;
        }
        if (comp->parsed()) {
            std::vector<std::pair<std::string, Separator>> sets;
            Box2 frame;
            if (!scenario_path.empty()) {
                const Scenario s = load_scenario(scenario_path);
                frame = s.frame;
                if (!comp->count("--eps")) eps = s.eps;
                for (std::size_t i = 0; i < s.bands.size(); ++i) {
                    const std::string nm = "X" + s.bands[i].m1 + s.bands[i].m2;
                    sets.push_back(
                        {nm + " minimal", scenario_band_separator(s, i, CtcKind::Minimal)});
                    sets.push_back(
                        {nm + " fwdbwd", scenario_band_separator(s, i, CtcKind::FwdBwd)});
                }
                sets.push_back({"X minimal", localization_set(s, CtcKind::Minimal)});
                sets.push_back({"X fwdbwd", localization_set(s, CtcKind::FwdBwd)});
            } else if (!q_text.empty()) {
                const ConicParams q = parse_conic(q_text);
                frame = parse_frame(frame_text);
                sets.push_back({"q minimal", hyperbolic_area_separator(q, CtcKind::Minimal)});
                sets.push_back({"q fwdbwd", hyperbolic_area_separator(q, CtcKind::FwdBwd)});
            } else {
                throw CLI::ValidationError("compare", "needs --q or --scenario");
            }
            return cmd_compare(sets, frame, eps, workers);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const Error& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
