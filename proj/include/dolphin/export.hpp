#pragma once

// Fabrication drawings of a skeleton: a 2D SVG outline (1 user unit = 1 mm)
// and the lossless JSON form.

#include "dolphin/csv.hpp"
#include "dolphin/json_io.hpp"
#include "dolphin/skeleton.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace dolphin {

namespace svg {

struct Polyline {
    std::vector<Point2> points; // mm
    double stroke_width = 0.0;  // mm
    bool dashed = false;
    std::string css_class;
};

struct Rect {
    double x = 0.0, y = 0.0, width = 0.0, height = 0.0; // mm
    std::string css_class;
};

struct Circle {
    double cx = 0.0, cy = 0.0, r = 0.0; // mm
    std::string css_class;
};

using Element = std::variant<Polyline, Rect, Circle>;

} // namespace svg

struct SvgDocument {
    double width_mm = 0.0;
    double height_mm = 0.0;
    std::vector<svg::Element> elements;

    std::size_t count(const std::string& css_class) const
    {
        return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const svg::Element& e) {
            return std::visit([&](const auto& item) { return item.css_class == css_class; }, e);
        }));
    }

    std::string to_string() const;
};

namespace detail {

/// Fixed 4-decimal text, with negative zero folded to zero.
inline std::string mm(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    std::string s(buffer);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

struct Visitor {
    std::ostringstream& out;

    void operator()(const svg::Polyline& p) const
    {
        out << "  <polyline class=\"" << p.css_class << "\" points=\"";
        for (std::size_t i = 0; i < p.points.size(); ++i) {
            out << (i ? " " : "") << mm(p.points[i].x) << ',' << mm(p.points[i].y);
        }
        out << "\" fill=\"none\" stroke=\"" << (p.dashed ? "#c0392b" : "#000000") << "\" stroke-width=\""
            << mm(p.stroke_width) << '"';
        if (p.dashed) out << " stroke-dasharray=\"2,1\"";
        out << "/>\n";
    }
    void operator()(const svg::Rect& r) const
    {
        out << "  <rect class=\"" << r.css_class << "\" x=\"" << mm(r.x) << "\" y=\"" << mm(r.y) << "\" width=\""
            << mm(r.width) << "\" height=\"" << mm(r.height) << "\" fill=\"#7f8c8d\"/>\n";
    }
    void operator()(const svg::Circle& c) const
    {
        out << "  <circle class=\"" << c.css_class << "\" cx=\"" << mm(c.cx) << "\" cy=\"" << mm(c.cy) << "\" r=\""
            << mm(c.r) << "\" fill=\"#2c3e50\"/>\n";
    }
};

} // namespace detail

inline std::string SvgDocument::to_string() const
{
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::mm(width_mm)
        << "mm\" height=\"" << detail::mm(height_mm) << "mm\" viewBox=\"0 0 " << detail::mm(width_mm) << ' '
        << detail::mm(height_mm) << "\">\n";
    const detail::Visitor visitor{out};
    for (const auto& e : elements) std::visit(visitor, e);
    out << "</svg>\n";
    return out.str();
}

/// Draws the skeleton in its bounding box, y up. Ribs become filled
/// rectangles of their thickness, bars stroked lines as wide as the local
/// member, strings dashed lines. Element order: ribs head to tail, bars,
/// strings, head boundary, nodes.
inline SvgDocument skeleton_to_svg(const SkeletonGraph& graph)
{
    if (graph.nodes.empty()) throw ValidationError("cannot export an empty skeleton");
    double x_min = graph.nodes.front().x, x_max = x_min;
    double y_min = graph.nodes.front().y, y_max = y_min;
    for (const auto& n : graph.nodes) {
        x_min = std::min(x_min, n.x);
        x_max = std::max(x_max, n.x);
        y_min = std::min(y_min, n.y);
        y_max = std::max(y_max, n.y);
    }
    SvgDocument doc;
    doc.width_mm = (x_max - x_min) * 1000.0;
    doc.height_mm = (y_max - y_min) * 1000.0;
    auto to_mm = [&](double x, double y) {
        return Point2{std::clamp((x - x_min) * 1000.0, 0.0, doc.width_mm),
                      std::clamp((y_max - y) * 1000.0, 0.0, doc.height_mm)};
    };

    auto ribs = graph.ribs;
    std::stable_sort(ribs.begin(), ribs.end(), [](const Rib& a, const Rib& b) { return a.x < b.x; });
    for (const auto& rib : ribs) {
        const Point2 top = to_mm(rib.x, rib.y_top);
        const Point2 bottom = to_mm(rib.x, rib.y_bottom);
        const double width = std::min(rib.thickness_mm, doc.width_mm);
        svg::Rect rect;
        rect.x = std::clamp(top.x - 0.5 * width, 0.0, doc.width_mm - width);
        rect.y = top.y;
        rect.width = width;
        rect.height = bottom.y - top.y;
        rect.css_class = "rib";
        doc.elements.emplace_back(rect);
    }

    // Local member thickness: the nearest rib at or ahead of the member's head-side end.
    auto member_thickness = [&](const Node& a, const Node& b) {
        if (ribs.empty()) return 1.0;
        const double x = std::min(a.x, b.x);
        double t = ribs.front().thickness_mm;
        for (const auto& rib : ribs) {
            if (rib.x <= x + 1e-12) t = rib.thickness_mm;
        }
        return t;
    };
    auto add_edges = [&](const std::vector<Edge>& edges, bool dashed, const char* css_class) {
        for (const auto& [ia, ib] : edges) {
            const Node* a = graph.find_node(ia);
            const Node* b = graph.find_node(ib);
            if (a == nullptr || b == nullptr) {
                throw ValidationError("edge (" + std::to_string(ia) + ", " + std::to_string(ib) +
                                      ") references a missing node");
            }
            svg::Polyline line;
            line.points = {to_mm(a->x, a->y), to_mm(b->x, b->y)};
            line.stroke_width = dashed ? 0.3 : member_thickness(*a, *b);
            line.dashed = dashed;
            line.css_class = css_class;
            doc.elements.emplace_back(line);
        }
    };
    add_edges(graph.bars, false, "bar");
    add_edges(graph.strings, true, "string");

    svg::Polyline head;
    head.points = {to_mm(graph.head_boundary_x, y_max), to_mm(graph.head_boundary_x, y_min)};
    head.stroke_width = 0.2;
    head.dashed = true;
    head.css_class = "head-boundary";
    doc.elements.emplace_back(head);

    for (const auto& n : graph.nodes) {
        const Point2 p = to_mm(n.x, n.y);
        doc.elements.emplace_back(svg::Circle{p.x, p.y, 0.6, "node"});
    }
    return doc;
}

inline std::string skeleton_to_json(const SkeletonGraph& graph) { return json::to_json(graph).dump(2) + "\n"; }

inline SkeletonGraph skeleton_from_json(const std::string& document)
{
    return json::skeleton_from_json(json::parse(document));
}

} // namespace dolphin
