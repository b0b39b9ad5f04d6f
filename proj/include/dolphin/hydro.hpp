#pragma once

// Desk-scale swimming speed: an elongated-body mean-thrust estimate at the
// tail trailing edge balanced against quadratic body drag.

#include "dolphin/common.hpp"
#include "dolphin/tendon.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace dolphin {

struct HydroParams {
    double rho = 1000.0;          // kg/m^3
    double drag_coeff = 0.5;
    double frontal_area = 0.003;  // m^2
    double added_mass_coeff = 1.0;
    double tip_span = 0.08;       // m, fluke trailing-edge depth

    friend bool operator==(const HydroParams&, const HydroParams&) = default;
};

inline void validate(const HydroParams& p)
{
    if (!(p.rho > 0.0 && p.drag_coeff > 0.0 && p.frontal_area > 0.0 && p.added_mass_coeff > 0.0 &&
          p.tip_span > 0.0)) {
        throw ValidationError("hydro parameters must all be strictly positive");
    }
}

/// One actuation period of tail midlines sampled at uniform phases.
struct MidlineHistory {
    std::vector<double> times;                    // s
    std::vector<std::vector<Point2>> midlines;    // same material stations in every sample
    std::vector<Point2> rest;                     // unactuated midline
    double period = 0.0;                          // s
};

inline constexpr double kMaxSwimSpeed = 2.0;         // m/s, upper end of the root bracket
inline constexpr double kForceBalanceTolerance = 1e-6; // N
inline constexpr int kDefaultSamplesPerPeriod = 64;

inline MidlineHistory sample_kinematics(const SkeletonGraph& graph, const CableRouting& routing,
                                        const std::vector<double>& stiffnesses, double amplitude,
                                        double frequency, int n_samples = kDefaultSamplesPerPeriod)
{
    if (n_samples < 16) throw ValidationError("need at least 16 samples per period");
    if (!(frequency > 0.0)) throw ValidationError("actuation frequency must be positive");
    MidlineHistory history;
    history.period = 1.0 / frequency;
    history.rest = bend_from_cables(graph, routing, ActuationCommand{}, stiffnesses).midline;
    for (int k = 0; k < n_samples; ++k) {
        const double t = history.period * static_cast<double>(k) / static_cast<double>(n_samples);
        const auto cmd = actuation_waveform(amplitude, frequency, t);
        history.times.push_back(t);
        history.midlines.push_back(bend_from_cables(graph, routing, cmd, stiffnesses).midline);
    }
    return history;
}

/// Added mass per unit length at the trailing edge.
inline double trailing_edge_added_mass(const HydroParams& p)
{
    return p.rho * std::numbers::pi * p.tip_span * p.tip_span / 4.0 * p.added_mass_coeff;
}

/// Period means of the squared trailing-edge lateral velocity and slope,
/// both measured relative to the rest midline.
struct TrailingEdgeMoments {
    double velocity_sq = 0.0; // m^2/s^2
    double slope_sq = 0.0;
};

inline TrailingEdgeMoments trailing_edge_moments(const MidlineHistory& history)
{
    const std::size_t n = history.midlines.size();
    if (n < 3) throw ValidationError("thrust estimate needs at least 3 time samples");
    if (history.rest.size() < 2) throw ValidationError("midline needs at least 2 stations");
    auto slope = [](const std::vector<Point2>& line) {
        const Point2 a = line[line.size() - 2];
        const Point2 b = line.back();
        return (b.y - a.y) / (b.x - a.x);
    };
    const double rest_y = history.rest.back().y;
    const double rest_slope = slope(history.rest);
    const double dt = history.period / static_cast<double>(n);

    std::vector<double> h(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (history.midlines[k].size() != history.rest.size()) {
            throw ValidationError("midline samples do not share stations");
        }
        h[k] = history.midlines[k].back().y - rest_y;
    }
    TrailingEdgeMoments m;
    for (std::size_t k = 0; k < n; ++k) {
        // central difference, periodic in time
        const double hdot = (h[(k + 1) % n] - h[(k + n - 1) % n]) / (2.0 * dt);
        const double hprime = slope(history.midlines[k]) - rest_slope;
        m.velocity_sq += hdot * hdot;
        m.slope_sq += hprime * hprime;
    }
    m.velocity_sq /= static_cast<double>(n);
    m.slope_sq /= static_cast<double>(n);
    return m;
}

/// T = m_a / 2 * <hdot^2 - U^2 h'^2>. Negative values mean the tail drags.
inline double mean_thrust(const MidlineHistory& history, double speed, const HydroParams& params)
{
    validate(params);
    if (!(speed >= 0.0)) throw DomainError("swim speed must be non-negative");
    const auto m = trailing_edge_moments(history);
    return 0.5 * trailing_edge_added_mass(params) * (m.velocity_sq - speed * speed * m.slope_sq);
}

/// D = rho Cd A U^2 / 2.
inline double drag_force(double speed, const HydroParams& params)
{
    if (!(speed >= 0.0)) throw DomainError("swim speed must be non-negative");
    return 0.5 * params.rho * params.drag_coeff * params.frontal_area * speed * speed;
}

/// Speed at which mean thrust balances drag; 0 when the tail produces no
/// thrust at rest.
inline double steady_speed(const MidlineHistory& history, const HydroParams& params)
{
    validate(params);
    const auto m = trailing_edge_moments(history);
    const double added_mass = trailing_edge_added_mass(params);
    auto balance = [&](double u) {
        return 0.5 * added_mass * (m.velocity_sq - u * u * m.slope_sq) - drag_force(u, params);
    };
    if (balance(0.0) <= 0.0) return 0.0;
    if (balance(kMaxSwimSpeed) >= 0.0) {
        throw ComputationError("no thrust/drag balance below " + csv::format_real(kMaxSwimSpeed) + " m/s");
    }
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(
        balance, 0.0, kMaxSwimSpeed, boost::math::tools::eps_tolerance<double>(52), max_iter);
    const double root = std::abs(balance(lo)) <= std::abs(balance(hi)) ? lo : hi;
    if (std::abs(balance(root)) > kForceBalanceTolerance) {
        throw ComputationError("thrust/drag root search stalled (residual " +
                               csv::format_real(balance(root)) + " N)");
    }
    return root;
}

inline double steady_speed(const SkeletonGraph& graph, const CableRouting& routing,
                           const std::vector<double>& stiffnesses, double amplitude, double frequency,
                           const HydroParams& params, int n_samples = kDefaultSamplesPerPeriod)
{
    return steady_speed(sample_kinematics(graph, routing, stiffnesses, amplitude, frequency, n_samples), params);
}

/// Rescales drag_coeff so the steady speed of `history` equals
/// `target_speed` (relative tolerance 1e-6). Secant search on log(drag_coeff).
inline HydroParams calibrate(const MidlineHistory& history, const HydroParams& params, double target_speed)
{
    validate(params);
    if (!(target_speed > 0.0)) throw ValidationError("calibration target speed must be positive");
    if (target_speed >= kMaxSwimSpeed) {
        throw ComputationError("calibration target exceeds the " + csv::format_real(kMaxSwimSpeed) +
                               " m/s search range");
    }
    // Drag vanishing still caps the speed at sqrt(<hdot^2> / <h'^2>).
    const auto m = trailing_edge_moments(history);
    if (m.velocity_sq <= target_speed * target_speed * m.slope_sq) {
        throw ComputationError("calibration target unreachable with positive drag coefficient");
    }

    auto with_cd = [&](double log_cd) {
        HydroParams p = params;
        p.drag_coeff = std::exp(log_cd);
        return p;
    };
    auto error = [&](double log_cd) {
        try {
            return std::log(steady_speed(history, with_cd(log_cd)) / target_speed);
        } catch (const ComputationError&) {
            return std::log(kMaxSwimSpeed / target_speed); // faster than the bracket: treat as the cap
        }
    };

    double x0 = std::log(params.drag_coeff);
    double e0 = error(x0);
    if (std::abs(e0) <= 1e-6) return params;
    // Drag ~ Cd U^2, so the first guess scales Cd by the squared speed ratio.
    double x1 = x0 + 2.0 * e0;
    double e1 = error(x1);
    for (int iter = 0; iter < 100 && std::abs(e1) > 1e-6; ++iter) {
        const double denom = e1 - e0;
        double x2 = denom != 0.0 ? x1 - e1 * (x1 - x0) / denom : x1 + 2.0 * e1;
        if (!std::isfinite(x2)) x2 = x1 + 2.0 * e1;
        x0 = x1;
        e0 = e1;
        x1 = x2;
        e1 = error(x1);
    }
    if (std::abs(e1) > 1e-6 || !std::isfinite(e1)) {
        throw ComputationError("drag calibration did not converge");
    }
    return with_cd(x1);
}

inline HydroParams calibrate(const SkeletonGraph& graph, const CableRouting& routing,
                             const std::vector<double>& stiffnesses, double amplitude, double frequency,
                             const HydroParams& params, double target_speed,
                             int n_samples = kDefaultSamplesPerPeriod)
{
    return calibrate(sample_kinematics(graph, routing, stiffnesses, amplitude, frequency, n_samples), params,
                     target_speed);
}

} // namespace dolphin
