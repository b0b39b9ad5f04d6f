#pragma once

#include "dolphin/common.hpp"

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace dolphin::csv {

/// Splits one CSV record on commas. Quoting is not supported; none of the
/// formats read here carry quoted fields.
inline std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

/// Parses a decimal real; throws ParseError naming `line_no` on failure.
inline double parse_real(std::string_view field, std::size_t line_no)
{
    field = trim(field);
    double value = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(field) +
                         "' is not a finite decimal number");
    }
    return value;
}

/// A numeric table with a fixed, exactly matched header.
struct Table {
    std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV whose first line must equal `header`. Blank lines are
/// skipped; every other line must carry exactly as many fields as the header.
inline Table read_numeric(std::istream& in, std::string_view header)
{
    const auto columns = split(header).size();
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError("line 1: missing header '" + std::string(header) + "'");
    }
    ++line_no;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (trim(line) != header) {
        throw ParseError("line 1: expected header '" + std::string(header) + "', got '" +
                         std::string(trim(line)) + "'");
    }
    Table table;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(trim(line));
        if (fields.size() != columns) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(columns) + " fields, got " +
                             std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(columns);
        for (const auto field : fields) row.push_back(parse_real(field, line_no));
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Shortest decimal text that parses back to exactly `value`.
inline std::string format_real(double value)
{
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    (void)ec;
    return std::string(buffer, ptr);
}

} // namespace dolphin::csv
