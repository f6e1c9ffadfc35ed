#pragma once

#include <map>
#include <string>
#include <vector>

#include "halfstat/engine.hpp"

namespace halfstat::cli {

enum class Format { Pretty, Json, Csv };

Format parse_format(const std::string& text);

/// Stable report shape shared by all data-producing commands. Numeric cells
/// that do not apply (fermionic same-mode input) carry NaN and render as
/// "-" (pretty), null (json) or an empty field (csv).
struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<std::string> label_headers;
    /// Numeric column names in emission order, a subset of
    /// {"classical", "boson", "fermion", "residual"}.
    std::vector<std::string> value_columns;
    std::vector<TableRow> rows;
};

Report from_table(const std::string& command, const TableReport& table,
                  std::map<std::string, std::string> params);
Report from_expectation(const std::string& command,
                        const ExpectationReport& rep,
                        std::map<std::string, std::string> params);
Report from_hom_scan(const std::vector<HomPoint>& points,
                     std::map<std::string, std::string> params);

std::string render_report(const Report& report, Format format);

/// Inverse of render_report for the json format; used to keep the schema
/// honest.
Report parse_report_json(const std::string& text);

bool report_equal(const Report& a, const Report& b, double tol = 0.0);

}  // namespace halfstat::cli
