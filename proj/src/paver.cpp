#include "hyp/paver.hpp"

#include <algorithm>
#include <array>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hyp/errors.hpp"

namespace hyp {

namespace {

struct WorkQueue {
    std::vector<Box2> stack;
    int active = 0;
    std::mutex m;
    std::condition_variable cv;
};

void process_one(const Separator& s, double eps, const Box2& box,
                 std::vector<PavedBox>& out, std::vector<Box2>& spawned) {
    const Box2 bin = s.contract_in(box);
    const Box2 bout = s.contract_out(box);
    for (const Box2& d : box_diff(box, bin)) out.push_back({d, BoxClass::Inside});
    for (const Box2& d : box_diff(box, bout)) out.push_back({d, BoxClass::Outside});
    const Box2 rem = intersect(bin, bout);
    if (rem.is_empty()) return;
    if (width(rem) <= eps) {
        out.push_back({rem, BoxClass::Uncertain});
        return;
    }
    auto [left, right] = bisect(rem);
    spawned.push_back(left);
    spawned.push_back(right);
}

bool canonical_less(const PavedBox& a, const PavedBox& b) {
    return std::make_tuple(a.box.x1().lo(), a.box.x2().lo(), a.box.x1().hi(),
                           a.box.x2().hi(), static_cast<int>(a.cls)) <
           std::make_tuple(b.box.x1().lo(), b.box.x2().lo(), b.box.x1().hi(),
                           b.box.x2().hi(), static_cast<int>(b.cls));
}

} // namespace

Paving sivia(const Separator& s, const Box2& frame, double eps, int workers) {
    if (frame.is_empty() || !frame.is_bounded())
        throw std::invalid_argument("sivia: frame must be nonempty and bounded");
    if (!(eps > 0.0)) throw std::invalid_argument("sivia: eps must be positive");
    if (workers < 1) throw std::invalid_argument("sivia: workers must be >= 1");

    WorkQueue wq;
    wq.stack.push_back(frame);
    std::vector<std::vector<PavedBox>> results(static_cast<std::size_t>(workers));

    auto run = [&](std::vector<PavedBox>& out) {
        std::vector<Box2> spawned;
        std::unique_lock lock(wq.m);
        for (;;) {
            wq.cv.wait(lock, [&] { return !wq.stack.empty() || wq.active == 0; });
            if (wq.stack.empty()) {
                if (wq.active == 0) return;
                continue;
            }
            const Box2 box = wq.stack.back();
            wq.stack.pop_back();
            ++wq.active;
            lock.unlock();

            spawned.clear();
            process_one(s, eps, box, out, spawned);

            lock.lock();
            --wq.active;
            if (!spawned.empty()) {
                wq.stack.insert(wq.stack.end(), spawned.begin(), spawned.end());
                wq.cv.notify_all();
            } else if (wq.stack.empty() && wq.active == 0) {
                wq.cv.notify_all();
            }
        }
    };

    if (workers == 1) {
        run(results[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(run, std::ref(results[static_cast<std::size_t>(i)]));
        for (auto& t : pool) t.join();
    }

    Paving p;
    p.frame = frame;
    p.eps = eps;
    for (auto& part : results)
        p.boxes.insert(p.boxes.end(), part.begin(), part.end());
    std::sort(p.boxes.begin(), p.boxes.end(), canonical_less);
    return p;
}

PavingMetrics metrics(const Paving& p) {
    PavingMetrics m;
    m.n_boxes = p.boxes.size();
    double comp[3] = {0.0, 0.0, 0.0};
    double sum[3] = {0.0, 0.0, 0.0};
    for (const PavedBox& pb : p.boxes) {
        const int k = static_cast<int>(pb.cls);
        const double v = area(pb.box) - comp[k];
        const double t = sum[k] + v;
        comp[k] = (t - sum[k]) - v;
        sum[k] = t;
    }
    m.area_in = sum[static_cast<int>(BoxClass::Inside)];
    m.area_out = sum[static_cast<int>(BoxClass::Outside)];
    m.area_unc = sum[static_cast<int>(BoxClass::Uncertain)];
    return m;
}

std::string class_token(BoxClass c) {
    switch (c) {
        case BoxClass::Inside: return "in";
        case BoxClass::Outside: return "out";
        case BoxClass::Uncertain: return "unc";
    }
    return "unc";
}

BoxClass parse_class_token(std::string_view t) {
    if (t == "in") return BoxClass::Inside;
    if (t == "out") return BoxClass::Outside;
    if (t == "unc") return BoxClass::Uncertain;
    throw IoError("unknown paving class: '" + std::string(t) + "'");
}

void write_csv(const std::string& path, const Paving& p) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << "x1_lo,x1_hi,x2_lo,x2_hi,class\n";
    for (const PavedBox& pb : p.boxes) {
        f << format_double(pb.box.x1().lo()) << ',' << format_double(pb.box.x1().hi()) << ','
          << format_double(pb.box.x2().lo()) << ',' << format_double(pb.box.x2().hi()) << ','
          << class_token(pb.cls) << '\n';
    }
    if (!f) throw IoError("write failed: " + path);
}

std::vector<PavedBox> read_csv_boxes(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::string line;
    if (!std::getline(f, line) || line != "x1_lo,x1_hi,x2_lo,x2_hi,class")
        throw IoError(path + ":1: bad or missing paving header");
    std::vector<PavedBox> out;
    std::size_t lineno = 1;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::array<std::string_view, 5> tok;
        std::string_view rest = line;
        for (int i = 0; i < 5; ++i) {
            const auto comma = rest.find(',');
            const bool last = (i == 4);
            if (last != (comma == std::string_view::npos))
                throw IoError(path + ":" + std::to_string(lineno) + ": expected 5 fields");
            tok[i] = last ? rest : rest.substr(0, comma);
            if (!last) rest = rest.substr(comma + 1);
        }
        PavedBox pb;
        pb.box = Box2(Interval(parse_double(tok[0]), parse_double(tok[1])),
                      Interval(parse_double(tok[2]), parse_double(tok[3])));
        pb.cls = parse_class_token(tok[4]);
        out.push_back(pb);
    }
    return out;
}

void write_svg(const std::string& path, const Paving& p, const SvgMarkers& markers) {
    constexpr double kSize = 800.0;
    constexpr double kMargin = 20.0;
    const double w1 = width(p.frame.x1());
    const double w2 = width(p.frame.x2());
    const double scale = (kSize - 2 * kMargin) / std::max(w1, w2);
    const auto sx = [&](double v) { return kMargin + (v - p.frame.x1().lo()) * scale; };
    const auto sy = [&](double v) { return kMargin + (p.frame.x2().hi() - v) * scale; };

    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
      << kSize << "\">\n";
    for (const PavedBox& pb : p.boxes) {
        const char* fill = pb.cls == BoxClass::Inside    ? "magenta"
                           : pb.cls == BoxClass::Outside ? "blue"
                                                         : "yellow";
        f << "<rect x=\"" << sx(pb.box.x1().lo()) << "\" y=\"" << sy(pb.box.x2().hi())
          << "\" width=\"" << width(pb.box.x1()) * scale << "\" height=\""
          << width(pb.box.x2()) * scale << "\" fill=\"" << fill
          << "\" stroke=\"#404040\" stroke-width=\"0.25\"/>\n";
    }
    for (const auto& [pt, color] : markers) {
        f << "<rect x=\"" << sx(pt.x1) - 4 << "\" y=\"" << sy(pt.x2) - 4
          << "\" width=\"8\" height=\"8\" fill=\"" << color << "\" stroke=\"white\"/>\n";
    }
    f << "</svg>\n";
    if (!f) throw IoError("write failed: " + path);
}

} // namespace hyp
