#pragma once

// Design-space sweeps over skeleton parameters, speed/COT Pareto filtering
// and the six-design reference dataset.

#include "dolphin/energetics.hpp"
#include "dolphin/hydro.hpp"
#include "dolphin/reference.hpp"
#include "dolphin/skeleton.hpp"
#include "dolphin/tendon.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace dolphin {

inline constexpr char kSourceSimulated[] = "simulated";
inline constexpr char kSourcePaperReference[] = "paper-reference";

struct Actuation {
    double amplitude = 0.008; // m
    double frequency = 1.5;   // Hz

    friend bool operator==(const Actuation&, const Actuation&) = default;
};

/// Drag calibration run once before a sweep: `reference` is driven with the
/// grid's actuation and drag_coeff is fitted so it swims at `target_speed`.
struct SweepCalibration {
    double target_speed = 0.1631813; // m/s
    SkeletonSpec reference = six_presets()[3];
};

struct DesignGrid {
    std::vector<HeightRatio> h1_h2_values;
    std::vector<double> thickness_ratios;
    std::vector<int> n_ribs_values;
    SkeletonSpec base_spec{};
    Actuation actuation{};
    HydroParams hydro{};
    PowerModel power{};
    StiffnessModel stiffness{};
    double mass = kDerivedMassKg;
    int samples_per_period = kDefaultSamplesPerPeriod;
    std::optional<SweepCalibration> calibration;

    std::size_t size() const { return h1_h2_values.size() * thickness_ratios.size() * n_ribs_values.size(); }
};

struct DesignRecord {
    std::string label;
    SkeletonSpec spec;
    std::optional<SwimResult> result; // empty for failed grid points
    std::string error;                // failure reason when result is empty
    std::string source = kSourceSimulated;
    std::vector<std::string> derived_fields; // fields not measured directly

    bool ok() const { return result.has_value(); }

    friend bool operator==(const DesignRecord&, const DesignRecord&) = default;
};

inline void validate(const DesignGrid& grid)
{
    if (grid.h1_h2_values.empty()) throw ValidationError("design grid: h1_h2 list is empty");
    if (grid.thickness_ratios.empty()) throw ValidationError("design grid: thickness ratio list is empty");
    if (grid.n_ribs_values.empty()) throw ValidationError("design grid: rib count list is empty");
    if (!(grid.actuation.amplitude >= 0.0 && grid.actuation.frequency > 0.0)) {
        throw ValidationError("design grid: actuation needs amplitude >= 0 and frequency > 0");
    }
    if (!(grid.mass > 0.0)) throw ValidationError("design grid: mass must be positive");
    validate(grid.hydro);
    validate(grid.power);
    validate(grid.base_spec);
}

/// Preset name when the design matches one of the six study skeletons,
/// otherwise a parameter-encoded label.
inline std::string design_label(const SkeletonSpec& spec)
{
    if (auto preset = matching_preset(spec); preset && spec.body_length == SkeletonSpec{}.body_length &&
                                             spec.thickness_first_mm == SkeletonSpec{}.thickness_first_mm) {
        return *preset;
    }
    return "h" + csv::format_real(spec.h1_h2.h1) + "-" + csv::format_real(spec.h1_h2.h2) + "_t" +
           csv::format_real(spec.thickness_ratio) + "_r" + std::to_string(spec.n_ribs);
}

/// Simulates one design end to end: skeleton, cables, kinematics, speed, power.
inline SwimResult evaluate_design(const SkeletonSpec& spec, const DesignGrid& grid, const HydroParams& hydro,
                                  const ProfileFit& curves)
{
    const auto graph = generate_skeleton(spec, curves.upper, curves.lower);
    const auto routing = route_cables(graph);
    const auto stiffness = segment_stiffnesses(spec, grid.stiffness);
    const double speed = steady_speed(graph, routing, stiffness, grid.actuation.amplitude,
                                      grid.actuation.frequency, hydro, grid.samples_per_period);
    const double power = predict_power(grid.power, grid.actuation.amplitude, grid.actuation.frequency);
    return make_swim_result(speed, power, grid.mass, spec.body_length);
}

/// Fits the grid's drag coefficient to its calibration target, if any.
inline HydroParams calibrated_hydro(const DesignGrid& grid, const ProfileFit& curves)
{
    if (!grid.calibration) return grid.hydro;
    const auto& ref = grid.calibration->reference;
    const auto graph = generate_skeleton(ref, curves.upper, curves.lower);
    const auto routing = route_cables(graph);
    return calibrate(graph, routing, segment_stiffnesses(ref, grid.stiffness), grid.actuation.amplitude,
                     grid.actuation.frequency, grid.hydro, grid.calibration->target_speed,
                     grid.samples_per_period);
}

/// Evaluates every grid point on up to `jobs` threads (0 = hardware
/// concurrency). Failed points become error records. Output is sorted by
/// label and does not depend on the schedule.
inline std::vector<DesignRecord> run_sweep(const DesignGrid& grid, unsigned jobs = 0,
                                           const ProfileFit& curves = reference_fit())
{
    validate(grid);
    const HydroParams hydro = calibrated_hydro(grid, curves);

    std::vector<SkeletonSpec> specs;
    for (const auto& h : grid.h1_h2_values) {
        for (const double r : grid.thickness_ratios) {
            for (const int n : grid.n_ribs_values) {
                SkeletonSpec spec = grid.base_spec;
                spec.h1_h2 = h;
                spec.thickness_ratio = r;
                spec.n_ribs = n;
                specs.push_back(spec);
            }
        }
    }

    std::vector<DesignRecord> records(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            auto& record = records[i];
            record.spec = specs[i];
            record.source = kSourceSimulated;
            try {
                record.label = design_label(specs[i]);
                record.result = evaluate_design(specs[i], grid, hydro, curves);
            } catch (const std::exception& e) {
                record.result.reset();
                record.error = e.what();
            }
        }
    };
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, specs.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const DesignRecord& a, const DesignRecord& b) { return a.label < b.label; });
    return records;
}

/// True when `a` is at least as fast and at most as costly as `b`, and
/// strictly better in one of the two.
inline bool dominates(const SwimResult& a, const SwimResult& b)
{
    return a.speed >= b.speed && a.cot <= b.cot && (a.speed > b.speed || a.cot < b.cot);
}

/// Non-dominated records under (maximize speed, minimize COT). Error records
/// are ignored; exact ties are all kept. Sorted by descending speed.
inline std::vector<DesignRecord> pareto_front(const std::vector<DesignRecord>& records)
{
    std::vector<DesignRecord> front;
    for (const auto& candidate : records) {
        if (!candidate.ok()) continue;
        const bool dominated = std::any_of(records.begin(), records.end(), [&](const DesignRecord& other) {
            return other.ok() && dominates(*other.result, *candidate.result);
        });
        if (!dominated) front.push_back(candidate);
    }
    std::sort(front.begin(), front.end(), [](const DesignRecord& a, const DesignRecord& b) {
        if (a.result->speed != b.result->speed) return a.result->speed > b.result->speed;
        if (a.result->cot != b.result->cot) return a.result->cot < b.result->cot;
        return a.label < b.label;
    });
    return front;
}

struct Table1Row {
    double h1, h2, thickness_ratio;
    double speed_mm_s, speed_bl_s, cot;
};

/// The six measured skeleton rows: speed (mm/s), speed (bl/s), COT.
inline constexpr Table1Row kTable1[6] = {
    {1, 1, 1, 133.5607, 0.411, 146}, {1, 1, 2, 125.4027, 0.386, 136}, {1, 1, 3, 127.8671, 0.393, 136},
    {1, 2, 1, 163.1813, 0.502, 95},  {1, 2, 2, 86.8601, 0.267, 175},  {1, 2, 3, 78.7879, 0.243, 193},
};

/// The measured rows as records. Speed, bl/s and COT are the printed values;
/// mass is the derived robot mass, body length the derived shared length and
/// power is recovered per row as COT * m * v.
inline std::vector<DesignRecord> table1_reference()
{
    std::vector<DesignRecord> records;
    const auto presets = six_presets();
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& row = kTable1[i];
        DesignRecord r;
        r.label = preset_label(i);
        r.spec = presets[i];
        SwimResult s;
        s.speed = row.speed_mm_s / 1000.0;
        s.speed_bl = row.speed_bl_s;
        s.cot = row.cot;
        s.mass = kDerivedMassKg;
        s.body_length = kDerivedBodyLengthM;
        s.power = row.cot * s.mass * s.speed;
        r.result = s;
        r.source = kSourcePaperReference;
        r.derived_fields = {"power_w", "mass_kg", "body_length_m"};
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace dolphin
