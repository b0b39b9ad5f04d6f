#pragma once

// Sweep reports: CSV/JSON tables with a Pareto flag and speed-vs-COT plot data.

#include "dolphin/csv.hpp"
#include "dolphin/explorer.hpp"
#include "dolphin/json_io.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace dolphin {

enum class ReportFormat { csv, json };

inline constexpr char kReportCsvHeader[] =
    "label,h1,h2,thickness_ratio,n_ribs,speed_mm_s,speed_bl_s,power_w,mass_kg,cot,pareto,source";
inline constexpr char kPlotCsvHeader[] = "speed_mm_s,cot";

inline ReportFormat parse_report_format(const std::string& name)
{
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw ValidationError("unknown report format '" + name + "' (expected csv or json)");
}

namespace detail {

inline std::set<std::string> pareto_labels(const std::vector<DesignRecord>& records)
{
    std::set<std::string> labels;
    for (const auto& r : pareto_front(records)) labels.insert(r.label);
    return labels;
}

inline std::string cot_text(double cot) { return std::isfinite(cot) ? csv::format_real(cot) : "inf"; }

} // namespace detail

/// Renders records in `format`. Failed records keep their row with empty
/// metric cells (CSV) or a null result plus an "error" reason (JSON).
inline std::string emit_report(const std::vector<DesignRecord>& records, ReportFormat format)
{
    if (records.empty()) throw ValidationError("report needs at least one record");
    const auto front = detail::pareto_labels(records);
    std::ostringstream out;
    if (format == ReportFormat::json) {
        json::Json list = json::Json::array();
        for (const auto& r : records) list.push_back(json::to_json(r, front.contains(r.label)));
        out << list.dump(2) << '\n';
        return out.str();
    }
    out << kReportCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.label << ',' << csv::format_real(r.spec.h1_h2.h1) << ',' << csv::format_real(r.spec.h1_h2.h2) << ','
            << csv::format_real(r.spec.thickness_ratio) << ',' << r.spec.n_ribs << ',';
        if (r.result) {
            const auto& s = *r.result;
            out << csv::format_real(s.speed * 1000.0) << ',' << csv::format_real(s.speed_bl) << ','
                << csv::format_real(s.power) << ',' << csv::format_real(s.mass) << ',' << detail::cot_text(s.cot);
        } else {
            out << ",,,,";
        }
        out << ',' << (front.contains(r.label) ? "true" : "false") << ',' << r.source << '\n';
    }
    return out.str();
}

/// Two-column `speed_mm_s,cot` scatter data for successful records.
inline std::string emit_plot_data(const std::vector<DesignRecord>& records)
{
    std::ostringstream out;
    out << kPlotCsvHeader << '\n';
    for (const auto& r : records) {
        if (!r.ok()) continue;
        out << csv::format_real(r.result->speed * 1000.0) << ',' << detail::cot_text(r.result->cot) << '\n';
    }
    return out.str();
}

inline std::vector<DesignRecord> records_from_json(const json::Json& j)
{
    if (!j.is_array()) throw ParseError("/: expected an array of records");
    std::vector<DesignRecord> records;
    for (std::size_t i = 0; i < j.size(); ++i) records.push_back(json::design_record_from_json(j[i], "/" + std::to_string(i)));
    return records;
}

/// Reads a CSV report back into records. Spec fields outside the report
/// columns take their defaults; body length is recovered as speed / (bl/s).
inline std::vector<DesignRecord> read_records_csv(std::istream& in)
{
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || csv::trim(line) != kReportCsvHeader) {
        throw ParseError("line 1: expected header '" + std::string(kReportCsvHeader) + "'");
    }
    std::vector<DesignRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (csv::trim(line).empty()) continue;
        const auto f = csv::split(csv::trim(line));
        if (f.size() != 12) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 12 fields, got " + std::to_string(f.size()));
        }
        DesignRecord r;
        r.label = std::string(csv::trim(f[0]));
        r.spec.h1_h2 = {csv::parse_real(f[1], line_no), csv::parse_real(f[2], line_no)};
        r.spec.thickness_ratio = csv::parse_real(f[3], line_no);
        r.spec.n_ribs = static_cast<int>(csv::parse_real(f[4], line_no));
        r.source = std::string(csv::trim(f[11]));
        if (csv::trim(f[5]).empty()) {
            r.error = "no result";
        } else {
            SwimResult s;
            s.speed = csv::parse_real(f[5], line_no) / 1000.0;
            s.speed_bl = csv::parse_real(f[6], line_no);
            s.power = csv::parse_real(f[7], line_no);
            s.mass = csv::parse_real(f[8], line_no);
            s.cot = csv::trim(f[9]) == "inf" ? std::numeric_limits<double>::infinity() : csv::parse_real(f[9], line_no);
            s.body_length = s.speed_bl > 0.0 ? s.speed / s.speed_bl : r.spec.body_length;
            r.result = s;
        }
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace dolphin
