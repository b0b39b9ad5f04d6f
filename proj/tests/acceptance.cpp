// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "dolphin/dolphin.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace dolphin;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

struct Tail {
    SkeletonGraph graph;
    CableRouting routing;
    std::vector<double> stiffness;
};

void criterion(int id, const char* name, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %d %s (%.0f ms)%s\n", o.pass ? "PASS" : "FAIL", id, name, ms, o.detail.str().c_str());
    std::fflush(stdout);
}

Tail type4_tail()
{
    const auto& fit = reference_fit();
    Tail t;
    t.graph = generate_skeleton(six_presets()[3], fit.upper, fit.lower);
    t.routing = route_cables(t.graph);
    t.stiffness = segment_stiffnesses(t.graph);
    return t;
}

} // namespace

int main()
{
    criterion(1, "runtime_hours", [](Outcome& o) {
        const double idle = runtime_hours(1.85, 0.48);
        const double full = runtime_hours(1.85, 9.33);
        o.detail << " idle=" << idle << " h full=" << full << " h";
        o.require(std::abs(idle - 3.854) <= 0.005, "idle runtime");
        o.require(std::abs(full - 0.198) <= 0.003, "full-actuation runtime");
    });

    criterion(2, "cost_of_transport_closure", [](Outcome& o) {
        const double c = cot(9.33, kDerivedMassKg, 0.163181);
        const double m = 9.33 / (95.0 * 0.163181);
        o.detail << " cot=" << c << " mass=" << m << " kg";
        o.require(std::abs(c - 95.0) <= 0.5, "cot 95 +- 0.5");
        o.require(std::abs(m / kDerivedMassKg - 1.0) <= 0.005, "mass within 0.5%");
    });

    criterion(3, "body_length_consistency", [](Outcome& o) {
        double worst = 0.0;
        for (const auto& row : kTable1) {
            const double bl = speed_bl(row.speed_mm_s / 1000.0, kDerivedBodyLengthM);
            worst = std::max(worst, std::abs(bl / row.speed_bl_s - 1.0));
        }
        o.detail << " L=" << kDerivedBodyLengthM << " m worst=" << worst;
        o.require(worst <= 0.005, "every bl/s within 0.5%");
    });

    criterion(4, "pareto_front_table1", [](Outcome& o) {
        const auto ref = table1_reference();
        const auto front = pareto_front(ref);
        o.require(front.size() == 1 && front[0].label == "type4", "front is {type4}");
        int pairs = 0;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            for (std::size_t j = i + 1; j < ref.size(); ++j) {
                ++pairs;
                const auto& a = *ref[i].result;
                const auto& b = *ref[j].result;
                const bool a_on = i == 3, b_on = j == 3;
                if (a_on) o.require(dominates(a, b) && !dominates(b, a), "type4 dominates " + ref[j].label);
                if (b_on) o.require(dominates(b, a) && !dominates(a, b), "type4 dominates " + ref[i].label);
                if (!a_on && !b_on) {
                    // neither may dominate type4
                    o.require(!dominates(a, *ref[3].result) && !dominates(b, *ref[3].result), "type4 undominated");
                }
            }
        }
        o.detail << " pairs=" << pairs;
        o.require(pairs == 15, "15 pairs");
    });

    criterion(5, "polynomial_fit", [](Outcome& o) {
        const auto& fit = reference_fit();
        o.detail << " mse_upper=" << fit.report.mse_upper << " mse_lower=" << fit.report.mse_lower;
        o.require(fit.report.degree == 17, "degree 17");
        o.require(fit.report.mse_upper <= 5e-6 && fit.report.mse_lower <= 5e-6, "mse <= 5e-6");
        const auto samples = interpolate_gap(excise_dorsal(reference_profile()), kDefaultGapFill);
        const auto direct = fit_polynomial(samples, 17);
        double worst = 0.0;
        for (const auto* curve : {&samples.upper, &samples.lower}) {
            std::vector<double> x, y;
            for (const auto& p : *curve) {
                x.push_back(p.x);
                y.push_back(p.y);
            }
            const auto expected = oracle::least_squares_high_precision(x, y, 17);
            const auto& got = curve == &samples.upper ? direct.upper.coefficients : direct.lower.coefficients;
            for (std::size_t i = 0; i < expected.size(); ++i) {
                worst = std::max(worst, std::abs(got[i] - expected[i]) / std::abs(expected[i]));
            }
        }
        o.detail << " worst_rel_coeff=" << worst;
        o.require(worst <= 1e-6, "coefficients within 1e-6 relative");
        o.require(direct.upper.coefficients == fit.upper.coefficients, "pipeline fit equals direct fit");
    });

    criterion(6, "tendon_grid_oracle", [](Outcome& o) {
        const auto g = fixtures::uniform_skeleton({3, 3, 3, 3});
        const auto r = route_cables(g);
        const auto k = segment_stiffnesses(g);
        const oracle::UniformTail tail{0.04, 0.01};
        double worst = 0.0;
        int checked = 0;
        const double d_max = kTravelLimitFraction * r.slack_length_top;
        for (const double frac : {0.05, 0.25, 0.5, 0.75, 0.99}) {
            const double d = frac * d_max;
            const auto pose = bend_from_cables(g, r, {d, 0.0, 0.0}, k);
            const auto grid = oracle::brute_force_three_segments(tail, k, r.slack_length_top - d);
            if (!std::isfinite(grid.energy) || pose.segment_angles.size() != 3) continue;
            ++checked;
            for (std::size_t i = 0; i < 3; ++i) {
                worst = std::max(worst, std::abs(pose.segment_angles[i] - grid.angles[i]));
            }
        }
        o.detail << " deltas=" << checked << " up to " << 0.99 * d_max << " m worst=" << worst << " rad";
        o.require(checked == 5, "five deltas solved");
        o.require(worst <= 2e-3, "angles within 2e-3 rad");
    });

    criterion(7, "hydro_calibration", [](Outcome& o) {
        const auto t = type4_tail();
        const auto h = sample_kinematics(t.graph, t.routing, t.stiffness, 0.008, 1.5, kDefaultSamplesPerPeriod);
        const auto hydro = calibrate(h, HydroParams{}, 0.163181);
        const double u = steady_speed(h, hydro);
        const double residual = std::abs(mean_thrust(h, u, hydro) - drag_force(u, hydro));
        o.detail << " speed=" << u << " m/s residual=" << residual << " N Cd=" << hydro.drag_coeff;
        o.require(std::abs(u / 0.163181 - 1.0) <= 0.01, "speed within 1%");
        o.require(residual <= 1e-6, "residual <= 1e-6 N");
    });

    criterion(8, "thickness_trend", [](Outcome& o) {
        DesignGrid grid;
        grid.h1_h2_values = {{1, 2}};
        grid.thickness_ratios = {1, 2, 3};
        grid.n_ribs_values = {6};
        grid.calibration = SweepCalibration{};
        const auto records = run_sweep(grid, 1);
        o.require(records.size() == 3, "three records");
        for (const auto& r : records) o.require(r.ok(), r.label + " evaluated");
        if (!o.pass) return;
        const double v4 = records[0].result->speed, v5 = records[1].result->speed, v6 = records[2].result->speed;
        o.detail << " type4=" << v4 * 1000 << " type5=" << v5 * 1000 << " type6=" << v6 * 1000 << " mm/s";
        o.require(v4 > v5 && v5 > v6, "type4 > type5 > type6");
    });

    criterion(9, "determinism_and_round_trips", [](Outcome& o) {
        DesignGrid grid;
        grid.h1_h2_values = {{1, 1}, {1, 2}};
        grid.thickness_ratios = {1, 2, 3};
        grid.n_ribs_values = {6};
        grid.calibration = SweepCalibration{};
        const auto serial = emit_report(run_sweep(grid, 1), ReportFormat::csv);
        o.require(serial == emit_report(run_sweep(grid, 4), ReportFormat::csv), "csv jobs 1 == jobs 4");
        o.require(emit_report(run_sweep(grid, 1), ReportFormat::json) ==
                      emit_report(run_sweep(grid, 3), ReportFormat::json),
                  "json jobs 1 == jobs 3");
        const auto& fit = reference_fit();
        for (std::size_t i = 0; i < 6; ++i) {
            const auto g = generate_skeleton(six_presets()[i], fit.upper, fit.lower);
            const auto text = skeleton_to_json(g);
            const auto back = skeleton_from_json(text);
            const auto label = preset_label(i);
            o.require(back == g, label + " json round-trip");
            o.require(skeleton_to_json(back) == text, label + " json bytes");
            o.require(skeleton_to_svg(back).to_string() == skeleton_to_svg(g).to_string(), label + " svg bytes");
            o.require(validate_skeleton(back, fit.upper, fit.lower).ok(), label + " validates");
        }
    });

    return failures == 0 ? 0 : 1;
}
