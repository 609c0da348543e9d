#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyp/separator.hpp"

namespace hyp {

enum class BoxClass { Inside, Outside, Uncertain };

struct PavedBox {
    Box2 box;
    BoxClass cls = BoxClass::Uncertain;
    bool operator==(const PavedBox&) const = default;
};

// Classified cover of a frame box: the boxes tile the frame (interiors
// pairwise disjoint), every Uncertain box has width <= eps, and the
// Inside/Outside classes are guaranteed by separator soundness. Boxes are in
// canonical order (sorted by coordinates), independent of processing order.
struct Paving {
    Box2 frame;
    double eps = 0.0;
    std::vector<PavedBox> boxes;
};

// Branch-and-contract set inversion: applies the separator to a work queue of
// boxes, emits peeled regions as Inside/Outside, bisects what remains along
// its widest dimension until it fits eps. `workers` threads may process the
// queue; the output is identical regardless of worker count.
Paving sivia(const Separator& s, const Box2& frame, double eps, int workers = 1);

struct PavingMetrics {
    double area_in = 0.0;
    double area_out = 0.0;
    double area_unc = 0.0;
    std::size_t n_boxes = 0;
};

PavingMetrics metrics(const Paving& p);

std::string class_token(BoxClass c);             // "in" / "out" / "unc"
BoxClass parse_class_token(std::string_view t);  // throws IoError

// CSV with header x1_lo,x1_hi,x2_lo,x2_hi,class; numbers round-trip exactly.
void write_csv(const std::string& path, const Paving& p);
std::vector<PavedBox> read_csv_boxes(const std::string& path);

// Square markers drawn on top of the paving, as (point, css-color) pairs.
using SvgMarkers = std::vector<std::pair<Pt, std::string>>;
void write_svg(const std::string& path, const Paving& p, const SvgMarkers& markers = {});

} // namespace hyp
