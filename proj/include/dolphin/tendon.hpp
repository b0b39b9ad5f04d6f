#pragma once

// Two-cable antagonistic actuation of the tail: cable routing through the
// rib guides, the quasi-static bend pose that a pair of cable length
// commands produces, and the periodic command waveform.
//
// Kinematic model: each spine segment bends at a lumped pivot at its
// midpoint. Rib i rides on the distal end of segment i-1 and turns with it;
// rib 0 is fixed to the head. Angle i is the relative rotation across the
// pivot of segment i, so the spine stays inextensible by construction.

#include "dolphin/common.hpp"
#include "dolphin/skeleton.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace dolphin {

struct CableRouting {
    std::vector<int> top_guides;    // head -> tail
    std::vector<int> bottom_guides; // head -> tail
    int anchor_top = -1;
    int anchor_bottom = -1;
    double slack_length_top = 0.0;    // m
    double slack_length_bottom = 0.0; // m

    friend bool operator==(const CableRouting&, const CableRouting&) = default;
};

struct TailPose {
    std::vector<double> segment_angles; // rad, one per spine segment
    std::vector<Point2> midline;        // head-side spine node ... tail tip

    friend bool operator==(const TailPose&, const TailPose&) = default;
};

struct ActuationCommand {
    double delta_top = 0.0;    // m, + shortens the cable
    double delta_bottom = 0.0; // m
    double timestamp = 0.0;    // s

    friend bool operator==(const ActuationCommand&, const ActuationCommand&) = default;
};

/// Cubic thickness-to-stiffness law, k = k_ref * (t / t_ref)^3.
struct StiffnessModel {
    double k_ref = 0.05;    // N m / rad
    double t_ref_mm = 3.0;  // mm
};

inline constexpr double kTravelLimitFraction = 0.2;

inline std::vector<double> segment_stiffnesses(const SkeletonSpec& spec, const StiffnessModel& model = {})
{
    std::vector<double> k;
    for (const double t : spine_segment_thicknesses(spec)) {
        const double r = t / model.t_ref_mm;
        k.push_back(model.k_ref * r * r * r);
    }
    return k;
}

/// Same law applied to a graph: segment i takes the thickness of rib i.
inline std::vector<double> segment_stiffnesses(const SkeletonGraph& graph, const StiffnessModel& model = {})
{
    if (graph.ribs.size() < 2) throw ValidationError("stiffness needs at least 2 ribs");
    std::vector<double> k;
    for (std::size_t i = 0; i + 1 < graph.ribs.size(); ++i) {
        const double r = graph.ribs[i].thickness_mm / model.t_ref_mm;
        k.push_back(model.k_ref * r * r * r);
    }
    return k;
}

namespace detail {

inline std::optional<int> node_at(const SkeletonGraph& graph, double x, double y)
{
    for (const auto& node : graph.nodes) {
        if (std::abs(node.x - x) <= 1e-12 && std::abs(node.y - y) <= 1e-12) return node.id;
    }
    return std::nullopt;
}

inline bool has_string(const SkeletonGraph& graph, int id)
{
    return std::any_of(graph.strings.begin(), graph.strings.end(),
                       [id](const Edge& e) { return e.first == id || e.second == id; });
}

inline Point2 perp(Point2 v) { return {-v.y, v.x}; }

} // namespace detail

/// Rigid-link chain of the tail derived from a skeleton graph and its routing.
class TailChain {
public:
    struct Placement {
        std::vector<Point2> spine;  // per rib
        std::vector<Point2> pivot;  // per segment
        std::vector<Point2> top;    // per rib
        std::vector<Point2> bottom; // per rib
        Point2 tip;
    };

    TailChain(const SkeletonGraph& graph, const CableRouting& routing)
    {
        const std::size_t n = graph.ribs.size();
        if (n < 2) throw ValidationError("tail chain needs at least 2 ribs");
        if (routing.top_guides.size() != n || routing.bottom_guides.size() != n) {
            throw ValidationError("routing does not provide one top and one bottom guide per rib");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto& rib = graph.ribs[i];
            const Point2 s{rib.x, rib.y_spine};
            spine0_.push_back(s);
            top_offset_.push_back(guide(graph, routing.top_guides[i]) - s);
            bottom_offset_.push_back(guide(graph, routing.bottom_guides[i]) - s);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Point2 d = spine0_[i + 1] - spine0_[i];
            const double len = norm(d);
            if (!(len > 0.0)) throw ValidationError("coincident spine nodes");
            half_length_.push_back(0.5 * len);
            direction_.push_back((1.0 / len) * d);
        }
        // The tail extension runs from the last spine node to the farthest node aft of it.
        tip_offset_ = {0.0, 0.0};
        for (const auto& node : graph.nodes) {
            if (node.x > spine0_.back().x + tip_offset_.x) tip_offset_ = node.position() - spine0_.back();
        }
    }

    std::size_t segments() const { return half_length_.size(); }

    Placement place(const std::vector<double>& angles) const
    {
        const std::size_t n = spine0_.size();
        Placement p;
        p.spine.resize(n);
        p.pivot.resize(n - 1);
        p.top.resize(n);
        p.bottom.resize(n);
        double heading = 0.0; // orientation of rib i
        p.spine[0] = spine0_[0];
        for (std::size_t i = 0; i < n; ++i) {
            p.top[i] = p.spine[i] + rotate(top_offset_[i], heading);
            p.bottom[i] = p.spine[i] + rotate(bottom_offset_[i], heading);
            if (i + 1 == n) break;
            p.pivot[i] = p.spine[i] + half_length_[i] * rotate(direction_[i], heading);
            heading += angles[i];
            p.spine[i + 1] = p.pivot[i] + half_length_[i] * rotate(direction_[i], heading);
        }
        p.tip = p.spine[n - 1] + rotate(tip_offset_, heading);
        return p;
    }

    /// Spine polyline through the pivots, ending at the tail tip.
    std::vector<Point2> midline(const Placement& p) const
    {
        std::vector<Point2> line;
        for (std::size_t i = 0; i < p.spine.size(); ++i) {
            line.push_back(p.spine[i]);
            if (i < p.pivot.size()) line.push_back(p.pivot[i]);
        }
        line.push_back(p.tip);
        return line;
    }

    /// d(length)/d(angle_j) of the polyline through `guides`. Rotating angle j
    /// turns every rib aft of segment j rigidly about pivot j.
    static std::vector<double> length_gradient(const std::vector<Point2>& guides,
                                               const std::vector<Point2>& pivots)
    {
        std::vector<double> grad(pivots.size(), 0.0);
        for (std::size_t i = 0; i + 1 < guides.size(); ++i) {
            const Point2 chord = guides[i + 1] - guides[i];
            const double len = norm(chord);
            if (len == 0.0) continue;
            const Point2 u = (1.0 / len) * chord;
            for (std::size_t j = 0; j < pivots.size(); ++j) {
                // guide k moves with angle j when k >= j + 1
                Point2 dv{0.0, 0.0};
                if (i + 1 >= j + 1) dv = dv + detail::perp(guides[i + 1] - pivots[j]);
                if (i >= j + 1) dv = dv - detail::perp(guides[i] - pivots[j]);
                grad[j] += u.x * dv.x + u.y * dv.y;
            }
        }
        return grad;
    }

private:
    static Point2 guide(const SkeletonGraph& graph, int id)
    {
        const Node* node = graph.find_node(id);
        if (node == nullptr) throw ValidationError("routing references missing node " + std::to_string(id));
        return node->position();
    }

    std::vector<Point2> spine0_;
    std::vector<Point2> top_offset_;
    std::vector<Point2> bottom_offset_;
    std::vector<double> half_length_;
    std::vector<Point2> direction_;
    Point2 tip_offset_;
};

/// Threads one cable through the top guide of every rib and one through the
/// bottom guides; slack lengths are the straight-pose polyline lengths.
inline CableRouting route_cables(const SkeletonGraph& graph)
{
    if (graph.ribs.size() < 2) throw ValidationError("routing needs at least 2 ribs");
    CableRouting routing;
    std::vector<Point2> top, bottom;
    for (std::size_t i = 0; i < graph.ribs.size(); ++i) {
        const auto& rib = graph.ribs[i];
        const auto t = detail::node_at(graph, rib.x, rib.y_top);
        const auto b = detail::node_at(graph, rib.x, rib.y_bottom);
        if (!t || !b || !detail::has_string(graph, *t) || !detail::has_string(graph, *b)) {
            throw ValidationError("routing: rib " + std::to_string(i) + " lacks a string-attached guide node");
        }
        routing.top_guides.push_back(*t);
        routing.bottom_guides.push_back(*b);
        top.push_back({rib.x, rib.y_top});
        bottom.push_back({rib.x, rib.y_bottom});
    }
    routing.anchor_top = routing.top_guides.back();
    routing.anchor_bottom = routing.bottom_guides.back();
    routing.slack_length_top = polyline_length(top);
    routing.slack_length_bottom = polyline_length(bottom);
    return routing;
}

struct CableLengths {
    double top = 0.0;
    double bottom = 0.0;
};

inline CableLengths cable_lengths(const SkeletonGraph& graph, const CableRouting& routing, const TailPose& pose)
{
    const TailChain chain(graph, routing);
    if (pose.segment_angles.size() != chain.segments()) {
        throw ValidationError("pose has " + std::to_string(pose.segment_angles.size()) + " angles, chain has " +
                              std::to_string(chain.segments()) + " segments");
    }
    const auto placed = chain.place(pose.segment_angles);
    return {polyline_length(placed.top), polyline_length(placed.bottom)};
}

inline double elastic_energy(const std::vector<double>& angles, const std::vector<double>& stiffness)
{
    double e = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) e += 0.5 * stiffness[i] * angles[i] * angles[i];
    return e;
}

struct BendOptions {
    double tolerance = 1e-12; // m, constraint residual at convergence
    int max_iterations = 200;
};

/// Minimizes sum(k_i theta_i^2 / 2) subject to every taut cable (delta > 0)
/// having length slack - delta. Newton iteration on the KKT system with a
/// backtracking line search on the scaled residual norm.
inline TailPose bend_from_cables(const SkeletonGraph& graph, const CableRouting& routing,
                                 const ActuationCommand& cmd, const std::vector<double>& stiffnesses,
                                 const BendOptions& options = {})
{
    const TailChain chain(graph, routing);
    const std::size_t m = chain.segments();
    if (stiffnesses.size() != m) {
        throw ValidationError("expected " + std::to_string(m) + " stiffnesses, got " +
                              std::to_string(stiffnesses.size()));
    }
    for (const double k : stiffnesses) {
        if (!(k > 0.0)) throw ValidationError("segment stiffness must be positive");
    }
    if (std::abs(cmd.delta_top) > kTravelLimitFraction * routing.slack_length_top ||
        std::abs(cmd.delta_bottom) > kTravelLimitFraction * routing.slack_length_bottom) {
        throw ValidationError("cable command exceeds the motor travel limit (20% of slack length)");
    }

    struct Cable {
        bool top;
        double target;
    };
    std::vector<Cable> cables;
    if (cmd.delta_top > 0.0) cables.push_back({true, routing.slack_length_top - cmd.delta_top});
    if (cmd.delta_bottom > 0.0) cables.push_back({false, routing.slack_length_bottom - cmd.delta_bottom});

    std::vector<double> theta(m, 0.0);
    auto finish = [&]() {
        TailPose pose;
        pose.segment_angles = theta;
        pose.midline = chain.midline(chain.place(theta));
        return pose;
    };
    if (cables.empty()) return finish();

    const std::size_t c = cables.size();
    const double k_scale = *std::max_element(stiffnesses.begin(), stiffnesses.end());
    const double len_scale = routing.slack_length_top / static_cast<double>(m);

    // Constraint values and gradients at theta.
    auto constraints = [&](const std::vector<double>& angles, Eigen::VectorXd& g, Eigen::MatrixXd& jac) {
        const auto placed = chain.place(angles);
        g.resize(static_cast<Eigen::Index>(c));
        jac.resize(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(m));
        for (std::size_t r = 0; r < c; ++r) {
            const auto& guides = cables[r].top ? placed.top : placed.bottom;
            g(static_cast<Eigen::Index>(r)) = polyline_length(guides) - cables[r].target;
            const auto grad = TailChain::length_gradient(guides, placed.pivot);
            for (std::size_t j = 0; j < m; ++j) jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = grad[j];
        }
    };
    auto residual = [&](const std::vector<double>& angles, const Eigen::VectorXd& lambda, Eigen::VectorXd& g,
                        Eigen::MatrixXd& jac) {
        constraints(angles, g, jac);
        Eigen::VectorXd f(static_cast<Eigen::Index>(m + c));
        for (std::size_t j = 0; j < m; ++j) f(static_cast<Eigen::Index>(j)) = stiffnesses[j] * angles[j];
        f.head(static_cast<Eigen::Index>(m)) += jac.transpose() * lambda;
        f.head(static_cast<Eigen::Index>(m)) /= k_scale;
        f.tail(static_cast<Eigen::Index>(c)) = g / len_scale;
        return f;
    };

    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(c));
    Eigen::VectorXd g;
    Eigen::MatrixXd jac;
    Eigen::VectorXd f = residual(theta, lambda, g, jac);
    constexpr double fd_step = 1e-6;

    for (int iter = 0; iter < options.max_iterations; ++iter) {
        const double stationarity = f.head(static_cast<Eigen::Index>(m)).lpNorm<Eigen::Infinity>();
        if (g.lpNorm<Eigen::Infinity>() <= options.tolerance && stationarity <= 1e-10) break;

        // Hessian of the Lagrangian; constraint curvature by central differences of the exact gradient.
        Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        for (std::size_t j = 0; j < m; ++j) hess(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = stiffnesses[j];
        for (std::size_t j = 0; j < m; ++j) {
            auto plus = theta;
            auto minus = theta;
            plus[j] += fd_step;
            minus[j] -= fd_step;
            Eigen::VectorXd gp, gm;
            Eigen::MatrixXd jp, jm;
            constraints(plus, gp, jp);
            constraints(minus, gm, jm);
            const Eigen::MatrixXd djac = (jp - jm) / (2.0 * fd_step);
            hess.col(static_cast<Eigen::Index>(j)) += djac.transpose() * lambda;
        }
        hess = 0.5 * (hess + hess.transpose()).eval();

        const auto n_kkt = static_cast<Eigen::Index>(m + c);
        Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n_kkt, n_kkt);
        kkt.topLeftCorner(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) = hess;
        kkt.topRightCorner(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(c)) = jac.transpose();
        kkt.bottomLeftCorner(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(m)) = jac;
        Eigen::VectorXd rhs(n_kkt);
        for (std::size_t j = 0; j < m; ++j) rhs(static_cast<Eigen::Index>(j)) = stiffnesses[j] * theta[j];
        rhs.head(static_cast<Eigen::Index>(m)) += jac.transpose() * lambda;
        rhs.tail(static_cast<Eigen::Index>(c)) = g;
        const Eigen::VectorXd step = kkt.fullPivLu().solve(-rhs);
        if (!step.allFinite()) break;

        // Limit the angular step so the linearization stays meaningful.
        double t = 1.0;
        const double max_turn = step.head(static_cast<Eigen::Index>(m)).lpNorm<Eigen::Infinity>();
        if (max_turn > 0.25) t = 0.25 / max_turn;
        const double f_norm = f.norm();
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
            auto trial = theta;
            for (std::size_t j = 0; j < m; ++j) trial[j] += t * step(static_cast<Eigen::Index>(j));
            const Eigen::VectorXd trial_lambda = lambda + t * step.tail(static_cast<Eigen::Index>(c));
            Eigen::VectorXd tg;
            Eigen::MatrixXd tj;
            const Eigen::VectorXd tf = residual(trial, trial_lambda, tg, tj);
            if (tf.norm() < (1.0 - 1e-4 * t) * f_norm || tf.norm() == 0.0) {
                theta = std::move(trial);
                lambda = trial_lambda;
                g = tg;
                jac = tj;
                f = tf;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    const double worst = g.lpNorm<Eigen::Infinity>();
    const double stationarity = f.head(static_cast<Eigen::Index>(m)).lpNorm<Eigen::Infinity>();
    const bool within_range = std::all_of(theta.begin(), theta.end(),
                                          [](double a) { return std::abs(a) < 0.5 * std::numbers::pi; });
    if (!within_range) throw ComputationError("infeasible cable command: a joint would fold past 90 degrees");
    if (worst > 1e-6) {
        throw ComputationError("infeasible cable command: target length unreachable (residual " +
                               csv::format_real(worst) + " m)");
    }
    if (worst > 1e-9 || stationarity > 1e-8) {
        throw ComputationError("bend solver did not converge (residual " + csv::format_real(worst) + " m)");
    }
    return finish();
}

/// Antagonistic sinusoid: top cable shortens while the bottom pays out.
inline ActuationCommand actuation_waveform(double amplitude, double frequency, double t)
{
    if (!(frequency > 0.0)) throw ValidationError("actuation frequency must be positive");
    if (!(amplitude >= 0.0)) throw ValidationError("actuation amplitude must be non-negative");
    const double s = amplitude * std::sin(kTwoPi * frequency * t);
    return {s, -s, t};
}

} // namespace dolphin
