#pragma once

// JSON encodings of the data types. Keys carry their units; readers report
// schema violations as ParseError with a JSON-pointer style path.

#include "dolphin/energetics.hpp"
#include "dolphin/explorer.hpp"
#include "dolphin/hydro.hpp"
#include "dolphin/profile.hpp"
#include "dolphin/skeleton.hpp"
#include "dolphin/tendon.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dolphin::json {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

inline const Json& field(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) throw ParseError((path.empty() ? std::string("/") : path) + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(child(path, key) + ": missing required key");
    return *it;
}

inline const Json* optional_field(const Json& j, const std::string& key)
{
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

inline double number(const Json& j, const std::string& path)
{
    if (!j.is_number()) throw ParseError(path + ": expected a number");
    return j.get<double>();
}

inline double number(const Json& j, const std::string& key, const std::string& path)
{
    return number(field(j, key, path), child(path, key));
}

inline double number_or(const Json& j, const std::string& key, const std::string& path, double fallback)
{
    const Json* v = optional_field(j, key);
    return v ? number(*v, child(path, key)) : fallback;
}

inline int integer(const Json& j, const std::string& path)
{
    if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
    return j.get<int>();
}

inline int integer(const Json& j, const std::string& key, const std::string& path)
{
    return integer(field(j, key, path), child(path, key));
}

inline const Json& array(const Json& j, const std::string& key, const std::string& path)
{
    const Json& a = field(j, key, path);
    if (!a.is_array()) throw ParseError(child(path, key) + ": expected an array");
    return a;
}

inline std::string text(const Json& j, const std::string& key, const std::string& path)
{
    const Json& v = field(j, key, path);
    if (!v.is_string()) throw ParseError(child(path, key) + ": expected a string");
    return v.get<std::string>();
}

inline Edge edge(const Json& j, const std::string& path)
{
    if (!j.is_array() || j.size() != 2) throw ParseError(path + ": expected a [from, to] pair");
    return {integer(j[0], child(path, 0)), integer(j[1], child(path, 1))};
}

} // namespace detail

inline Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

// --- PolyCurve ----------------------------------------------------------

inline Json to_json(const PolyCurve& curve)
{
    return Json{{"degree", curve.degree()}, {"domain", {0.0, 1.0}}, {"coefficients", curve.coefficients}};
}

inline PolyCurve poly_curve_from_json(const Json& j, const std::string& path = "")
{
    using namespace detail;
    const int degree = integer(j, "degree", path);
    const Json& coeffs = array(j, "coefficients", path);
    PolyCurve curve;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        curve.coefficients.push_back(number(coeffs[i], child(child(path, "coefficients"), i)));
    }
    if (curve.degree() != degree || degree < 1) {
        throw ParseError(child(path, "coefficients") + ": expected degree+1 = " + std::to_string(degree + 1) +
                         " coefficients");
    }
    if (const Json* domain = optional_field(j, "domain")) {
        if (!domain->is_array() || domain->size() != 2 || number((*domain)[0], child(path, "domain")) != 0.0 ||
            number((*domain)[1], child(path, "domain")) != 1.0) {
            throw ParseError(child(path, "domain") + ": only the normalized chord [0, 1] is supported");
        }
    }
    return curve;
}

inline Json to_json(const FitReport& r)
{
    return Json{{"mse_upper_m2", r.mse_upper}, {"mse_lower_m2", r.mse_lower},
                {"residual_max_m", r.residual_max}, {"degree", r.degree}};
}

inline Json to_json(const ProfileFit& fit)
{
    return Json{{"upper", to_json(fit.upper)}, {"lower", to_json(fit.lower)}, {"report", to_json(fit.report)}};
}

inline ProfileFit profile_fit_from_json(const Json& j)
{
    ProfileFit fit;
    fit.upper = poly_curve_from_json(detail::field(j, "upper", ""), "/upper");
    fit.lower = poly_curve_from_json(detail::field(j, "lower", ""), "/lower");
    fit.report.degree = fit.upper.degree();
    return fit;
}

// --- Skeleton -----------------------------------------------------------

inline Json to_json(const SkeletonGraph& g)
{
    Json nodes = Json::array();
    for (const auto& n : g.nodes) nodes.push_back(Json{{"id", n.id}, {"x", n.x}, {"y", n.y}});
    auto edges = [](const std::vector<Edge>& list) {
        Json out = Json::array();
        for (const auto& [a, b] : list) out.push_back(Json::array({a, b}));
        return out;
    };
    Json ribs = Json::array();
    for (const auto& r : g.ribs) {
        ribs.push_back(Json{{"x", r.x}, {"y_top", r.y_top}, {"y_bottom", r.y_bottom}, {"y_spine", r.y_spine},
                            {"thickness_mm", r.thickness_mm}});
    }
    return Json{{"nodes", nodes}, {"bars", edges(g.bars)}, {"strings", edges(g.strings)}, {"ribs", ribs},
                {"head_boundary_x", g.head_boundary_x}};
}

inline SkeletonGraph skeleton_from_json(const Json& j)
{
    using namespace detail;
    SkeletonGraph g;
    const Json& nodes = array(j, "nodes", "");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto path = child("/nodes", i);
        g.nodes.push_back({integer(nodes[i], "id", path), number(nodes[i], "x", path), number(nodes[i], "y", path)});
    }
    for (const char* key : {"bars", "strings"}) {
        const Json& list = array(j, key, "");
        auto& target = std::string(key) == "bars" ? g.bars : g.strings;
        for (std::size_t i = 0; i < list.size(); ++i) target.push_back(edge(list[i], child("/" + std::string(key), i)));
    }
    const Json& ribs = array(j, "ribs", "");
    for (std::size_t i = 0; i < ribs.size(); ++i) {
        const auto path = child("/ribs", i);
        g.ribs.push_back({number(ribs[i], "x", path), number(ribs[i], "y_top", path),
                          number(ribs[i], "y_bottom", path), number(ribs[i], "y_spine", path),
                          number(ribs[i], "thickness_mm", path)});
    }
    g.head_boundary_x = number(j, "head_boundary_x", "");
    return g;
}

// --- Tendon -------------------------------------------------------------

inline Json to_json(const TailPose& pose)
{
    Json midline = Json::array();
    for (const auto& p : pose.midline) midline.push_back(Json::array({p.x, p.y}));
    return Json{{"segment_angles_rad", pose.segment_angles}, {"midline", midline}};
}

inline TailPose tail_pose_from_json(const Json& j)
{
    using namespace detail;
    TailPose pose;
    const Json& angles = array(j, "segment_angles_rad", "");
    for (std::size_t i = 0; i < angles.size(); ++i) {
        pose.segment_angles.push_back(number(angles[i], child("/segment_angles_rad", i)));
    }
    const Json& midline = array(j, "midline", "");
    for (std::size_t i = 0; i < midline.size(); ++i) {
        const auto path = child("/midline", i);
        if (!midline[i].is_array() || midline[i].size() != 2) throw ParseError(path + ": expected [x, y]");
        pose.midline.push_back({number(midline[i][0], child(path, 0)), number(midline[i][1], child(path, 1))});
    }
    return pose;
}

inline Json to_json(const ActuationCommand& c)
{
    return Json{{"delta_top_m", c.delta_top}, {"delta_bottom_m", c.delta_bottom}, {"timestamp_s", c.timestamp}};
}

inline ActuationCommand actuation_command_from_json(const Json& j)
{
    return {detail::number(j, "delta_top_m", ""), detail::number(j, "delta_bottom_m", ""),
            detail::number_or(j, "timestamp_s", "", 0.0)};
}

// --- Hydro / energetics -------------------------------------------------

inline Json to_json(const HydroParams& p)
{
    return Json{{"rho_kg_m3", p.rho},
                {"drag_coeff", p.drag_coeff},
                {"frontal_area_m2", p.frontal_area},
                {"added_mass_coeff", p.added_mass_coeff},
                {"tip_span_m", p.tip_span}};
}

/// Missing keys keep their defaults.
inline HydroParams hydro_params_from_json(const Json& j, const std::string& path = "")
{
    using namespace detail;
    if (!j.is_object()) throw ParseError((path.empty() ? "/" : path) + ": expected an object");
    HydroParams p;
    p.rho = number_or(j, "rho_kg_m3", path, p.rho);
    p.drag_coeff = number_or(j, "drag_coeff", path, p.drag_coeff);
    p.frontal_area = number_or(j, "frontal_area_m2", path, p.frontal_area);
    p.added_mass_coeff = number_or(j, "added_mass_coeff", path, p.added_mass_coeff);
    p.tip_span = number_or(j, "tip_span_m", path, p.tip_span);
    validate(p);
    return p;
}

inline Json to_json(const PowerModel& m)
{
    return Json{{"p_idle_w", m.p_idle},
                {"p_actuation_full_w", m.p_actuation_full},
                {"amplitude_ref_m", m.amplitude_ref},
                {"frequency_ref_hz", m.frequency_ref},
                {"exponent", m.exponent}};
}

inline PowerModel power_model_from_json(const Json& j, const std::string& path = "")
{
    using namespace detail;
    if (!j.is_object()) throw ParseError((path.empty() ? "/" : path) + ": expected an object");
    PowerModel m;
    m.p_idle = number_or(j, "p_idle_w", path, m.p_idle);
    m.p_actuation_full = number_or(j, "p_actuation_full_w", path, m.p_actuation_full);
    m.amplitude_ref = number_or(j, "amplitude_ref_m", path, m.amplitude_ref);
    m.frequency_ref = number_or(j, "frequency_ref_hz", path, m.frequency_ref);
    m.exponent = number_or(j, "exponent", path, m.exponent);
    validate(m);
    return m;
}

inline Json to_json(const SwimResult& r)
{
    // A stationary swimmer's COT is infinite; JSON has no literal for it.
    const Json cot = std::isfinite(r.cot) ? Json(r.cot) : Json(nullptr);
    return Json{{"speed_m_s", r.speed},      {"speed_bl_s", r.speed_bl}, {"power_w", r.power},
                {"mass_kg", r.mass},         {"cot", cot},               {"body_length_m", r.body_length}};
}

inline SwimResult swim_result_from_json(const Json& j, const std::string& path = "")
{
    using namespace detail;
    SwimResult r;
    r.speed = number(j, "speed_m_s", path);
    r.speed_bl = number(j, "speed_bl_s", path);
    r.power = number(j, "power_w", path);
    r.mass = number(j, "mass_kg", path);
    const Json& cot = field(j, "cot", path);
    r.cot = cot.is_null() ? std::numeric_limits<double>::infinity() : number(cot, child(path, "cot"));
    r.body_length = number(j, "body_length_m", path);
    return r;
}

// --- Skeleton spec / design grid -----------------------------------------

inline Json to_json(const SkeletonSpec& s)
{
    return Json{{"body_length_m", s.body_length},
                {"head_fraction", s.head_fraction},
                {"n_ribs", s.n_ribs},
                {"h1", s.h1_h2.h1},
                {"h2", s.h1_h2.h2},
                {"thickness_first_mm", s.thickness_first_mm},
                {"thickness_ratio", s.thickness_ratio},
                {"spine_shape", "straight"},
                {"tip_margin", s.tip_margin}};
}

/// Missing keys keep their defaults.
inline SkeletonSpec skeleton_spec_from_json(const Json& j, const std::string& path = "")
{
    using namespace detail;
    if (!j.is_object()) throw ParseError((path.empty() ? "/" : path) + ": expected an object");
    SkeletonSpec s;
    s.body_length = number_or(j, "body_length_m", path, s.body_length);
    s.head_fraction = number_or(j, "head_fraction", path, s.head_fraction);
    if (optional_field(j, "n_ribs")) s.n_ribs = integer(j, "n_ribs", path);
    s.h1_h2.h1 = number_or(j, "h1", path, s.h1_h2.h1);
    s.h1_h2.h2 = number_or(j, "h2", path, s.h1_h2.h2);
    s.thickness_first_mm = number_or(j, "thickness_first_mm", path, s.thickness_first_mm);
    s.thickness_ratio = number_or(j, "thickness_ratio", path, s.thickness_ratio);
    s.tip_margin = number_or(j, "tip_margin", path, s.tip_margin);
    if (optional_field(j, "spine_shape") && text(j, "spine_shape", path) != "straight") {
        throw ParseError(child(path, "spine_shape") + ": only \"straight\" is supported");
    }
    return s;
}

inline HeightRatio height_ratio_from_json(const Json& j, const std::string& path)
{
    if (!j.is_array() || j.size() != 2) throw ParseError(path + ": expected [h1, h2]");
    return {detail::number(j[0], detail::child(path, 0)), detail::number(j[1], detail::child(path, 1))};
}

/// Grid file:
///   {"h1_h2": [[1,1],[1,2]], "thickness_ratios": [1,2,3], "n_ribs": [6],
///    "base_spec": {...}, "actuation": {"amplitude_m": 0.008, "frequency_hz": 1.5},
///    "hydro": {...}, "power": {...}, "mass_kg": 0.6022, "samples_per_period": 64,
///    "calibration": {"target_speed_m_s": 0.1631813, "reference": {...spec...}}}
/// Only the three value lists are required.
inline DesignGrid design_grid_from_json(const Json& j)
{
    using namespace detail;
    DesignGrid grid;
    const Json& heights = array(j, "h1_h2", "");
    for (std::size_t i = 0; i < heights.size(); ++i) {
        grid.h1_h2_values.push_back(height_ratio_from_json(heights[i], child("/h1_h2", i)));
    }
    const Json& ratios = array(j, "thickness_ratios", "");
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        grid.thickness_ratios.push_back(number(ratios[i], child("/thickness_ratios", i)));
    }
    const Json& ribs = array(j, "n_ribs", "");
    for (std::size_t i = 0; i < ribs.size(); ++i) grid.n_ribs_values.push_back(integer(ribs[i], child("/n_ribs", i)));
    if (const Json* v = optional_field(j, "base_spec")) grid.base_spec = skeleton_spec_from_json(*v, "/base_spec");
    if (const Json* v = optional_field(j, "actuation")) {
        if (!v->is_object()) throw ParseError("/actuation: expected an object");
        grid.actuation.amplitude = number_or(*v, "amplitude_m", "/actuation", grid.actuation.amplitude);
        grid.actuation.frequency = number_or(*v, "frequency_hz", "/actuation", grid.actuation.frequency);
    }
    if (const Json* v = optional_field(j, "hydro")) grid.hydro = hydro_params_from_json(*v, "/hydro");
    if (const Json* v = optional_field(j, "power")) grid.power = power_model_from_json(*v, "/power");
    grid.mass = number_or(j, "mass_kg", "", grid.mass);
    if (optional_field(j, "samples_per_period")) grid.samples_per_period = integer(j, "samples_per_period", "");
    if (const Json* v = optional_field(j, "calibration")) {
        if (!v->is_object()) throw ParseError("/calibration: expected an object");
        SweepCalibration cal;
        cal.target_speed = number(*v, "target_speed_m_s", "/calibration");
        if (const Json* ref = optional_field(*v, "reference")) {
            cal.reference = skeleton_spec_from_json(*ref, "/calibration/reference");
        }
        grid.calibration = cal;
    }
    validate(grid);
    return grid;
}

inline Json to_json(const DesignRecord& r, bool pareto)
{
    Json j{{"label", r.label}, {"spec", to_json(r.spec)}};
    j["result"] = r.result ? to_json(*r.result) : Json(nullptr);
    j["pareto"] = pareto;
    j["source"] = r.source;
    if (!r.derived_fields.empty()) j["derived"] = r.derived_fields;
    if (!r.ok()) j["error"] = r.error;
    return j;
}

inline DesignRecord design_record_from_json(const Json& j, const std::string& path)
{
    using namespace detail;
    DesignRecord r;
    r.label = text(j, "label", path);
    r.spec = skeleton_spec_from_json(field(j, "spec", path), child(path, "spec"));
    const Json& result = field(j, "result", path);
    if (!result.is_null()) r.result = swim_result_from_json(result, child(path, "result"));
    r.source = text(j, "source", path);
    if (const Json* d = optional_field(j, "derived")) {
        if (!d->is_array()) throw ParseError(child(path, "derived") + ": expected an array");
        for (const auto& item : *d) r.derived_fields.push_back(item.get<std::string>());
    }
    if (!r.ok()) r.error = text(j, "error", path);
    return r;
}

} // namespace dolphin::json
