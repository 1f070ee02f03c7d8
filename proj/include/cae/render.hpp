#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cae/partitions.hpp"

namespace cae {

struct RenderArc {
    Arc arc;
    std::string label;
};

struct RenderSpec {
    Surface surface;
    std::vector<RenderArc> arcs;
    std::optional<Partition> shaded;  // ground set [2n], one shade per block
    int width = 480;
    int height = 480;
};

/* Deterministic SVG 1.1 drawing in the style of the marked-circle figures:
 * the boundary circle, open circles at accumulation points, dots at the
 * regular points referenced by the arcs (offsets squashed monotonely toward
 * the segment ends), curved chords for arcs, and an optional shaded region
 * per partition block. */
std::string render_svg(const RenderSpec& spec);

}  // namespace cae
