#pragma once

// Parametric fish-bone skeleton: ribs standing on a spine, rigid bars and
// tension-only strings, generated from the fitted body profile.

#include "dolphin/common.hpp"
#include "dolphin/profile.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dolphin {

enum class SpineShape { straight };

/// Rib partition: h1 is the rib height above the spine, h2 the height below.
struct HeightRatio {
    double h1 = 1.0;
    double h2 = 1.0;

    friend bool operator==(const HeightRatio&, const HeightRatio&) = default;
};

struct SkeletonSpec {
    double body_length = 0.3251;     // m
    double head_fraction = 0.33;     // rigid head share of the body length
    int n_ribs = 6;
    HeightRatio h1_h2{};
    double thickness_first_mm = 3.0; // rib closest to the head
    double thickness_ratio = 1.0;    // first:last
    SpineShape spine_shape = SpineShape::straight;
    double tip_margin = 0.03;        // last rib sits at (1 - tip_margin) * body_length

    friend bool operator==(const SkeletonSpec&, const SkeletonSpec&) = default;
};

struct Rib {
    double x = 0.0;        // m
    double y_top = 0.0;    // m
    double y_bottom = 0.0; // m
    double y_spine = 0.0;  // m
    double thickness_mm = 0.0;

    friend bool operator==(const Rib&, const Rib&) = default;
};

struct Node {
    int id = 0;
    double x = 0.0;
    double y = 0.0;

    Point2 position() const { return {x, y}; }

    friend bool operator==(const Node&, const Node&) = default;
};

using Edge = std::pair<int, int>;

struct SkeletonGraph {
    std::vector<Node> nodes;
    std::vector<Edge> bars;    // rigid
    std::vector<Edge> strings; // tension-only
    std::vector<Rib> ribs;     // head -> tail
    double head_boundary_x = 0.0;

    const Node* find_node(int id) const
    {
        const auto it = std::find_if(nodes.begin(), nodes.end(), [id](const Node& n) { return n.id == id; });
        return it == nodes.end() ? nullptr : &*it;
    }

    /// Chord extent of the node set.
    double body_length() const
    {
        if (nodes.empty()) return 0.0;
        const auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end(),
                                                  [](const Node& a, const Node& b) { return a.x < b.x; });
        return hi->x - lo->x;
    }

    friend bool operator==(const SkeletonGraph&, const SkeletonGraph&) = default;
};

/// Node-id layout produced by generate_skeleton.
namespace layout {
inline constexpr int head = 0;
inline int top(int rib) { return 1 + 3 * rib; }
inline int spine(int rib) { return 2 + 3 * rib; }
inline int bottom(int rib) { return 3 + 3 * rib; }
inline int tip(int n_ribs) { return 1 + 3 * n_ribs; }
} // namespace layout

inline void validate(const SkeletonSpec& spec)
{
    if (!(spec.body_length > 0.0)) throw ValidationError("body_length must be positive");
    if (!(spec.head_fraction > 0.0 && spec.head_fraction < 1.0)) {
        throw ValidationError("head_fraction must lie in (0, 1)");
    }
    if (spec.n_ribs < 2) throw ValidationError("n_ribs must be >= 2, got " + std::to_string(spec.n_ribs));
    if (!(spec.h1_h2.h1 > 0.0 && spec.h1_h2.h2 > 0.0)) throw ValidationError("h1 and h2 must be positive");
    if (!(spec.thickness_first_mm > 0.0)) throw ValidationError("thickness_first must be positive");
    // Ratios below 1 are accepted and make the ribs thicken toward the tail.
    if (!(spec.thickness_ratio > 0.0)) throw ValidationError("thickness_ratio must be positive");
    if (!(spec.tip_margin >= 0.0 && spec.tip_margin < 1.0 - spec.head_fraction)) {
        throw ValidationError("tip_margin must lie in [0, 1 - head_fraction)");
    }
}

/// Linear interpolation from thickness_first to thickness_first / thickness_ratio.
inline std::vector<double> rib_thicknesses(const SkeletonSpec& spec)
{
    validate(spec);
    const double first = spec.thickness_first_mm;
    const double last = spec.thickness_first_mm / spec.thickness_ratio;
    const auto n = static_cast<std::size_t>(spec.n_ribs);
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n - 1);
        t[i] = first + s * (last - first);
    }
    t.back() = last;
    return t;
}

/// Spine segment i (rib i to rib i+1) inherits the thickness of rib i.
inline std::vector<double> spine_segment_thicknesses(const SkeletonSpec& spec)
{
    auto t = rib_thicknesses(spec);
    t.pop_back();
    return t;
}

/// Types 1-6 of the skeleton study: h1:h2 in {1:1, 1:2} crossed with
/// thickness ratios {1, 2, 3}.
inline std::array<SkeletonSpec, 6> six_presets()
{
    std::array<SkeletonSpec, 6> presets{};
    const std::array<HeightRatio, 2> heights{HeightRatio{1.0, 1.0}, HeightRatio{1.0, 2.0}};
    const std::array<double, 3> ratios{1.0, 2.0, 3.0};
    std::size_t k = 0;
    for (const auto& h : heights) {
        for (const double r : ratios) {
            presets[k].h1_h2 = h;
            presets[k].thickness_ratio = r;
            ++k;
        }
    }
    return presets;
}

inline std::string preset_label(std::size_t index) { return "type" + std::to_string(index + 1); }

/// Looks up "type1".."type6".
inline std::optional<SkeletonSpec> preset_by_name(const std::string& name)
{
    const auto presets = six_presets();
    for (std::size_t i = 0; i < presets.size(); ++i) {
        if (preset_label(i) == name) return presets[i];
    }
    return std::nullopt;
}

/// Label of the preset matching `spec` on (h1:h2, thickness ratio, rib count), if any.
inline std::optional<std::string> matching_preset(const SkeletonSpec& spec)
{
    const auto presets = six_presets();
    for (std::size_t i = 0; i < presets.size(); ++i) {
        if (presets[i].h1_h2 == spec.h1_h2 && presets[i].thickness_ratio == spec.thickness_ratio &&
            presets[i].n_ribs == spec.n_ribs) {
            return preset_label(i);
        }
    }
    return std::nullopt;
}

/// Builds the skeleton graph. `upper`/`lower` are fitted on the normalized
/// chord of a profile whose chord is `profile_chord_m`; the outline is scaled
/// uniformly to spec.body_length.
inline SkeletonGraph generate_skeleton(const SkeletonSpec& spec, const PolyCurve& upper,
                                       const PolyCurve& lower, double profile_chord_m = 1.0)
{
    validate(spec);
    if (!(profile_chord_m > 0.0)) throw ValidationError("profile chord must be positive");
    const double length = spec.body_length;
    const double scale = length / profile_chord_m;
    const double x_first = spec.head_fraction * length;
    const double x_last = (1.0 - spec.tip_margin) * length;
    if (!(x_first < x_last)) throw ValidationError("head boundary lies beyond the last rib station");

    const auto thickness = rib_thicknesses(spec);
    const double spine_share = spec.h1_h2.h2 / (spec.h1_h2.h1 + spec.h1_h2.h2);

    SkeletonGraph graph;
    graph.head_boundary_x = x_first;
    const int n = spec.n_ribs;
    for (int i = 0; i < n; ++i) {
        const double x = i == 0 ? x_first
                                : x_first + (x_last - x_first) * static_cast<double>(i) / static_cast<double>(n - 1);
        const double u = x / length;
        Rib rib;
        rib.x = x;
        rib.y_top = scale * eval_profile(upper, u);
        rib.y_bottom = scale * eval_profile(lower, u);
        if (!(rib.y_top - rib.y_bottom > 0.0)) {
            throw ValidationError("rib " + std::to_string(i) + " at x = " + csv::format_real(x) +
                                  " m has non-positive span");
        }
        rib.y_spine = rib.y_bottom + spine_share * (rib.y_top - rib.y_bottom);
        rib.thickness_mm = thickness[static_cast<std::size_t>(i)];
        graph.ribs.push_back(rib);
    }

    graph.nodes.push_back({layout::head, 0.0, graph.ribs.front().y_spine});
    for (int i = 0; i < n; ++i) {
        const auto& rib = graph.ribs[static_cast<std::size_t>(i)];
        graph.nodes.push_back({layout::top(i), rib.x, rib.y_top});
        graph.nodes.push_back({layout::spine(i), rib.x, rib.y_spine});
        graph.nodes.push_back({layout::bottom(i), rib.x, rib.y_bottom});
    }
    graph.nodes.push_back({layout::tip(n), length, graph.ribs.back().y_spine});

    graph.bars.emplace_back(layout::head, layout::spine(0));
    for (int i = 0; i < n; ++i) {
        graph.bars.emplace_back(layout::top(i), layout::spine(i));
        graph.bars.emplace_back(layout::spine(i), layout::bottom(i));
        if (i + 1 < n) graph.bars.emplace_back(layout::spine(i), layout::spine(i + 1));
    }
    graph.bars.emplace_back(layout::spine(n - 1), layout::tip(n));
    for (int i = 0; i + 1 < n; ++i) {
        graph.strings.emplace_back(layout::top(i), layout::top(i + 1));
        graph.strings.emplace_back(layout::bottom(i), layout::bottom(i + 1));
    }
    return graph;
}

struct Violation {
    enum class Kind { envelope, connectivity, thickness, reference, duplicate, ordering };
    Kind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::size_t count(Violation::Kind kind) const
    {
        return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                      [kind](const Violation& v) { return v.kind == kind; }));
    }
};

/// Manufacturability check of a generated or user-supplied graph against the
/// profile envelope (1 mm tolerance). Findings are reported, never thrown.
inline ValidationReport validate_skeleton(const SkeletonGraph& graph, const PolyCurve& upper,
                                          const PolyCurve& lower, double profile_chord_m = 1.0)
{
    constexpr double envelope_tolerance = 1e-3;
    ValidationReport report;
    auto add = [&report](Violation::Kind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
    };

    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        if (!index.emplace(graph.nodes[i].id, i).second) {
            add(Violation::Kind::duplicate, "duplicate node id " + std::to_string(graph.nodes[i].id));
        }
    }

    // Union-find over bars and strings.
    std::vector<std::size_t> parent(graph.nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&parent](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    std::set<Edge> seen;
    auto visit_edges = [&](const std::vector<Edge>& edges, const char* kind) {
        for (const auto& [a, b] : edges) {
            const auto ia = index.find(a);
            const auto ib = index.find(b);
            if (ia == index.end() || ib == index.end()) {
                add(Violation::Kind::reference, std::string(kind) + " (" + std::to_string(a) + ", " +
                                                    std::to_string(b) + ") references a missing node");
                continue;
            }
            if (!seen.insert(std::minmax(a, b)).second) {
                add(Violation::Kind::duplicate,
                    std::string("duplicate edge (") + std::to_string(a) + ", " + std::to_string(b) + ")");
            }
            parent[root(ia->second)] = root(ib->second);
        }
    };
    visit_edges(graph.bars, "bar");
    visit_edges(graph.strings, "string");
    std::set<std::size_t> components;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) components.insert(root(i));
    if (components.size() > 1) {
        add(Violation::Kind::connectivity,
            "graph has " + std::to_string(components.size()) + " disconnected components");
    }

    const double length = graph.body_length();
    const double scale = length / profile_chord_m;
    for (std::size_t i = 0; i < graph.ribs.size(); ++i) {
        const auto& rib = graph.ribs[i];
        const std::string name = "rib " + std::to_string(i);
        if (!(rib.thickness_mm > 0.0)) add(Violation::Kind::thickness, name + " has non-positive thickness");
        if (!(rib.y_bottom <= rib.y_spine && rib.y_spine <= rib.y_top)) {
            add(Violation::Kind::ordering, name + ": spine not between bottom and top");
        }
        if (rib.x < graph.head_boundary_x) add(Violation::Kind::envelope, name + " intrudes into the head");
        const double u = length > 0.0 ? rib.x / length : -1.0;
        if (!(u >= 0.0 && u <= 1.0)) {
            add(Violation::Kind::envelope, name + " lies outside the chord");
            continue;
        }
        if (rib.y_top > scale * eval_profile(upper, u) + envelope_tolerance) {
            add(Violation::Kind::envelope, name + ": top above the upper contour");
        }
        if (rib.y_bottom < scale * eval_profile(lower, u) - envelope_tolerance) {
            add(Violation::Kind::envelope, name + ": bottom below the lower contour");
        }
    }
    return report;
}

} // namespace dolphin
