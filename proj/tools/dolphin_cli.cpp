// dolphin: command-line front end for the skeleton design toolkit.

#include "dolphin/dolphin.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace dolphin;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void check_output_path(const std::string& path)
{
    if (path.empty()) return;
    const fs::path parent = fs::absolute(path).parent_path();
    if (!fs::is_directory(parent)) throw ValidationError("output directory does not exist: " + parent.string());
    if (fs::is_directory(path)) throw ValidationError("output path is a directory: " + path);
}

/// Writes through a sibling temp file and renames, so a failure never
/// leaves a partial file behind. Empty path means stdout.
void emit(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    const fs::path target(path);
    std::random_device rd;
    const fs::path temp = target.parent_path() / ("." + target.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw ComputationError("cannot write '" + temp.string() + "'");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw ComputationError("write failed for '" + path + "'");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp, ec);
        throw ComputationError("cannot move output into place at '" + path + "'");
    }
}

std::pair<double, double> parse_pair(const std::string& text, char sep, const char* what)
{
    const auto pos = text.find(sep);
    if (pos == std::string::npos) throw ValidationError(std::string(what) + ": expected a" + sep + "b, got '" + text + "'");
    try {
        return {csv::parse_real(text.substr(0, pos), 0), csv::parse_real(text.substr(pos + 1), 0)};
    } catch (const ParseError&) {
        throw ValidationError(std::string(what) + ": malformed value '" + text + "'");
    }
}

SkeletonGraph load_skeleton(const std::string& path) { return skeleton_from_json(read_file(path)); }

struct FitInput {
    ProfileFit fit;
    double chord = 1.0;
};

FitInput load_fit(const std::string& path)
{
    if (path.empty()) return {reference_fit(), 1.0};
    const auto j = json::parse(read_file(path));
    FitInput in{json::profile_fit_from_json(j), 1.0};
    if (const auto it = j.find("chord_m"); it != j.end()) in.chord = json::detail::number(*it, "/chord_m");
    return in;
}

std::vector<DesignRecord> load_records(const std::string& path)
{
    const auto text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return records_from_json(json::parse(text));
    std::istringstream in(text);
    return read_records_csv(in);
}

ReportFormat format_for(const std::string& flag, const std::string& out)
{
    if (!flag.empty()) return parse_report_format(flag);
    return fs::path(out).extension() == ".json" ? ReportFormat::json : ReportFormat::csv;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Design and simulation toolkit for cable-driven fish-bone dolphin tails"};
    app.set_config("--config", "", "key=value file with option defaults (see README)");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // fit
    auto* fit = app.add_subcommand("fit", "Fit degree-N polynomials to the body profile");
    std::string fit_profile, fit_out, fit_excise = "0.40:0.61";
    int fit_degree = kDefaultFitDegree;
    std::size_t fit_fill = kDefaultGapFill;
    fit->add_option("--profile", fit_profile, "Profile CSV (x_m,y_upper_m,y_lower_m); bundled profile if omitted")
        ->check(CLI::ExistingFile);
    fit->add_option("--degree", fit_degree, "Polynomial degree")->capture_default_str();
    fit->add_option("--excise", fit_excise, "Dorsal fin interval lo:hi in m, removed from the upper curve")
        ->capture_default_str();
    fit->add_option("--fill", fit_fill, "Spline points inserted across the excised gap")->capture_default_str();
    fit->add_option("--out", fit_out, "Output JSON (stdout if omitted)");

    // skeleton
    auto* skel = app.add_subcommand("skeleton", "Generate a skeleton graph");
    std::string skel_preset, skel_h1h2 = "1:1", skel_fit, skel_out;
    SkeletonSpec skel_spec;
    skel->add_option("--preset", skel_preset, "type1..type6");
    skel->add_option("--h1h2", skel_h1h2, "Height ratio h1:h2 (h1 above the spine)")->capture_default_str();
    skel->add_option("--thickness-ratio", skel_spec.thickness_ratio, "First:last rib thickness")->capture_default_str();
    skel->add_option("--ribs", skel_spec.n_ribs, "Number of ribs")->capture_default_str();
    skel->add_option("--thickness-first", skel_spec.thickness_first_mm, "First rib thickness in mm")
        ->capture_default_str();
    skel->add_option("--length", skel_spec.body_length, "Body length in m")->capture_default_str();
    skel->add_option("--head-fraction", skel_spec.head_fraction, "Rigid head share of the body")->capture_default_str();
    skel->add_option("--fit", skel_fit, "Profile fit JSON from `fit`; bundled fit if omitted")->check(CLI::ExistingFile);
    skel->add_option("--out", skel_out, "Output JSON (stdout if omitted)");

    // bend
    auto* bend = app.add_subcommand("bend", "Solve the tail pose for a cable command");
    std::string bend_skeleton, bend_out;
    ActuationCommand bend_cmd;
    StiffnessModel bend_stiffness;
    bend->add_option("--skeleton", bend_skeleton, "Skeleton JSON")->required()->check(CLI::ExistingFile);
    bend->add_option("--delta-top", bend_cmd.delta_top, "Top cable shortening in m (negative pays out)")
        ->capture_default_str();
    bend->add_option("--delta-bottom", bend_cmd.delta_bottom, "Bottom cable shortening in m")->capture_default_str();
    bend->add_option("--k-ref", bend_stiffness.k_ref, "Joint stiffness at 3 mm, N m/rad")->capture_default_str();
    bend->add_option("--out", bend_out, "Output JSON (stdout if omitted)");

    // swim
    auto* swim = app.add_subcommand("swim", "Predict steady speed, power and COT");
    std::string swim_skeleton, swim_out;
    Actuation swim_act;
    HydroParams swim_hydro;
    StiffnessModel swim_stiffness;
    double swim_mass = kDerivedMassKg;
    int swim_samples = kDefaultSamplesPerPeriod;
    std::optional<double> swim_target;
    swim->add_option("--skeleton", swim_skeleton, "Skeleton JSON")->required()->check(CLI::ExistingFile);
    swim->add_option("--amplitude", swim_act.amplitude, "Cable amplitude in m")->capture_default_str();
    swim->add_option("--freq", swim_act.frequency, "Actuation frequency in Hz")->capture_default_str();
    swim->add_option("--calibrate-speed", swim_target, "Fit the drag coefficient so this skeleton swims at m/s");
    swim->add_option("--drag-coeff", swim_hydro.drag_coeff, "Body drag coefficient")->capture_default_str();
    swim->add_option("--frontal-area", swim_hydro.frontal_area, "Frontal area in m^2")->capture_default_str();
    swim->add_option("--tip-span", swim_hydro.tip_span, "Fluke trailing-edge depth in m")->capture_default_str();
    swim->add_option("--k-ref", swim_stiffness.k_ref, "Joint stiffness at 3 mm, N m/rad")->capture_default_str();
    swim->add_option("--mass", swim_mass, "Robot mass in kg")->capture_default_str();
    swim->add_option("--samples", swim_samples, "Time samples per period")->capture_default_str();
    swim->add_option("--out", swim_out, "Output JSON (stdout if omitted)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Evaluate a design grid");
    std::string sweep_grid, sweep_out, sweep_plot, sweep_format;
    unsigned sweep_jobs = 0;
    bool sweep_reference = false;
    auto* grid_opt = sweep->add_option("--grid", sweep_grid, "Grid JSON")->check(CLI::ExistingFile);
    auto* ref_opt = sweep->add_flag("--reference", sweep_reference, "Emit the six measured reference records");
    grid_opt->excludes(ref_opt);
    sweep->add_option("--out", sweep_out, "Report file (stdout if omitted)");
    sweep->add_option("--format", sweep_format, "csv or json (default from --out extension)");
    sweep->add_option("--plot", sweep_plot, "Also write speed_mm_s,cot scatter data here");
    sweep->add_option("--jobs", sweep_jobs, "Worker threads (0 = all cores)")->capture_default_str();

    // pareto
    auto* pareto = app.add_subcommand("pareto", "Keep the speed/COT non-dominated records");
    std::string pareto_in, pareto_out, pareto_format;
    pareto->add_option("--records", pareto_in, "Report CSV or JSON from `sweep`")->required()->check(CLI::ExistingFile);
    pareto->add_option("--out", pareto_out, "Output report (stdout if omitted)");
    pareto->add_option("--format", pareto_format, "csv or json (default from --out extension)");

    // export
    auto* exp = app.add_subcommand("export", "Draw a skeleton as SVG");
    std::string export_skeleton, export_svg;
    exp->add_option("--skeleton", export_skeleton, "Skeleton JSON")->required()->check(CLI::ExistingFile);
    exp->add_option("--svg", export_svg, "Output SVG")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Power, speed and COT from measured logs");
    std::string analyze_power, analyze_track, analyze_out;
    double analyze_mass = kDerivedMassKg;
    analyze->add_option("--power-log", analyze_power, "CSV t_s,voltage_v,current_a")->required()->check(CLI::ExistingFile);
    analyze->add_option("--track", analyze_track, "CSV t_s,x_m")->required()->check(CLI::ExistingFile);
    analyze->add_option("--mass", analyze_mass, "Robot mass in kg")->capture_default_str();
    analyze->add_option("--out", analyze_out, "Output JSON (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (fit->parsed()) {
            check_output_path(fit_out);
            const auto [lo, hi] = parse_pair(fit_excise, ':', "--excise");
            const auto samples = fit_profile.empty() ? reference_profile() : load_profile_file(fit_profile);
            const auto result = fit_profile_pipeline(samples, fit_degree, lo, hi, fit_fill);
            auto j = json::to_json(result);
            j["chord_m"] = samples.body_length;
            emit(fit_out, j.dump(2) + "\n");
        } else if (skel->parsed()) {
            check_output_path(skel_out);
            SkeletonSpec spec = skel_spec;
            if (!skel_preset.empty()) {
                const auto p = preset_by_name(skel_preset);
                if (!p) throw ValidationError("unknown preset '" + skel_preset + "' (expected type1..type6)");
                for (const char* flag : {"--h1h2", "--thickness-ratio", "--ribs"}) {
                    if (skel->count(flag) > 0) {
                        throw ValidationError(std::string(flag) + " cannot be combined with --preset");
                    }
                }
                spec.h1_h2 = p->h1_h2;
                spec.thickness_ratio = p->thickness_ratio;
                spec.n_ribs = p->n_ribs;
            } else {
                const auto [h1, h2] = parse_pair(skel_h1h2, ':', "--h1h2");
                spec.h1_h2 = {h1, h2};
            }
            const auto in = load_fit(skel_fit);
            emit(skel_out, skeleton_to_json(generate_skeleton(spec, in.fit.upper, in.fit.lower, in.chord)));
        } else if (bend->parsed()) {
            check_output_path(bend_out);
            const auto graph = load_skeleton(bend_skeleton);
            const auto routing = route_cables(graph);
            const auto pose = bend_from_cables(graph, routing, bend_cmd, segment_stiffnesses(graph, bend_stiffness));
            emit(bend_out, json::to_json(pose).dump(2) + "\n");
        } else if (swim->parsed()) {
            check_output_path(swim_out);
            const auto graph = load_skeleton(swim_skeleton);
            const auto routing = route_cables(graph);
            const auto k = segment_stiffnesses(graph, swim_stiffness);
            const auto history = sample_kinematics(graph, routing, k, swim_act.amplitude, swim_act.frequency, swim_samples);
            const HydroParams hydro = swim_target ? calibrate(history, swim_hydro, *swim_target) : swim_hydro;
            const double speed = steady_speed(history, hydro);
            const double power = predict_power(PowerModel{}, swim_act.amplitude, swim_act.frequency);
            auto j = json::to_json(make_swim_result(speed, power, swim_mass, graph.body_length()));
            j["speed_mm_s"] = speed * 1000.0;
            j["hydro"] = json::to_json(hydro);
            emit(swim_out, j.dump(2) + "\n");
        } else if (sweep->parsed()) {
            if (sweep_grid.empty() && !sweep_reference) throw ValidationError("sweep needs --grid or --reference");
            check_output_path(sweep_out);
            check_output_path(sweep_plot);
            const auto format = format_for(sweep_format, sweep_out);
            std::vector<DesignRecord> records;
            if (sweep_reference) {
                records = table1_reference();
            } else {
                records = run_sweep(json::design_grid_from_json(json::parse(read_file(sweep_grid))), sweep_jobs);
            }
            const auto report = emit_report(records, format);
            const auto plot = emit_plot_data(records);
            emit(sweep_out, report);
            if (!sweep_plot.empty()) emit(sweep_plot, plot);
        } else if (pareto->parsed()) {
            check_output_path(pareto_out);
            const auto format = format_for(pareto_format, pareto_out);
            const auto front = pareto_front(load_records(pareto_in));
            if (front.empty()) throw ComputationError("no successful records to rank");
            emit(pareto_out, emit_report(front, format));
        } else if (exp->parsed()) {
            check_output_path(export_svg);
            emit(export_svg, skeleton_to_svg(load_skeleton(export_skeleton)).to_string());
        } else if (analyze->parsed()) {
            check_output_path(analyze_out);
            MeasurementLog log;
            {
                std::istringstream in(read_file(analyze_power));
                log.samples = read_power_log(in);
            }
            {
                std::istringstream in(read_file(analyze_track));
                log.track = read_track(in);
            }
            const double power = average_power(log);
            const double speed = speed_from_track(log);
            json::Json j{{"power_w", power}, {"speed_m_s", speed}, {"mass_kg", analyze_mass}};
            j["cot"] = speed > 0.0 ? json::Json(cot(power, analyze_mass, speed)) : json::Json(nullptr);
            emit(analyze_out, j.dump(2) + "\n");
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
