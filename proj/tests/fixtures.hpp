#pragma once

#include "dolphin/skeleton.hpp"

#include <vector>

namespace fixtures {

/// Skeleton with equally spaced ribs of equal height on a horizontal spine,
/// laid out exactly like generate_skeleton's node numbering.
inline dolphin::SkeletonGraph uniform_skeleton(const std::vector<double>& rib_thickness_mm, double spacing = 0.04,
                                               double half_height = 0.01, double x0 = 0.1)
{
    using namespace dolphin;
    const int n = static_cast<int>(rib_thickness_mm.size());
    SkeletonGraph g;
    g.head_boundary_x = x0;
    for (int i = 0; i < n; ++i) {
        const double x = x0 + spacing * i;
        g.ribs.push_back({x, half_height, -half_height, 0.0, rib_thickness_mm[static_cast<std::size_t>(i)]});
    }
    g.nodes.push_back({layout::head, 0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        const auto& r = g.ribs[static_cast<std::size_t>(i)];
        g.nodes.push_back({layout::top(i), r.x, r.y_top});
        g.nodes.push_back({layout::spine(i), r.x, r.y_spine});
        g.nodes.push_back({layout::bottom(i), r.x, r.y_bottom});
    }
    g.nodes.push_back({layout::tip(n), g.ribs.back().x + spacing, 0.0});
    g.bars.emplace_back(layout::head, layout::spine(0));
    for (int i = 0; i < n; ++i) {
        g.bars.emplace_back(layout::top(i), layout::spine(i));
        g.bars.emplace_back(layout::spine(i), layout::bottom(i));
        if (i + 1 < n) g.bars.emplace_back(layout::spine(i), layout::spine(i + 1));
    }
    g.bars.emplace_back(layout::spine(n - 1), layout::tip(n));
    for (int i = 0; i + 1 < n; ++i) {
        g.strings.emplace_back(layout::top(i), layout::top(i + 1));
        g.strings.emplace_back(layout::bottom(i), layout::bottom(i + 1));
    }
    return g;
}

} // namespace fixtures
