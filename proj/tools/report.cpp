#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace halfstat::cli {

namespace {

using nlohmann::json;

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double row_value(const TableRow& row, const std::string& column) {
    if (column == "classical") return row.classical;
    if (column == "boson") return row.boson;
    if (column == "fermion") return row.fermion;
    if (column == "residual") return row.residual;
    throw std::invalid_argument("unknown report column '" + column + "'");
}

void set_row_value(TableRow& row, const std::string& column, double v) {
    if (column == "classical") row.classical = v;
    else if (column == "boson") row.boson = v;
    else if (column == "fermion") row.fermion = v;
    else if (column == "residual") row.residual = v;
    else throw std::invalid_argument("unknown report column '" + column + "'");
}

std::string pretty_header(const std::string& column) {
    if (column == "classical") return "Classical";
    if (column == "boson") return "Bosonic";
    if (column == "fermion") return "Fermionic";
    return "Residual";
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "pretty") return Format::Pretty;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + text +
                                "' (expected pretty, json or csv)");
}

Report from_table(const std::string& command, const TableReport& table,
                  std::map<std::string, std::string> params) {
    Report r;
    r.command = command;
    r.params = std::move(params);
    r.label_headers = table.label_headers;
    r.value_columns = {"classical", "boson", "fermion", "residual"};
    r.rows = table.rows;
    return r;
}

Report from_expectation(const std::string& command,
                        const ExpectationReport& rep,
                        std::map<std::string, std::string> params) {
    Report r;
    r.command = command;
    r.params = std::move(params);
    r.label_headers = {"observable", "input"};
    r.value_columns = {"classical", "boson", "fermion", "residual"};
    TableRow row;
    row.labels = {rep.observable, std::to_string(rep.input_i) + "," +
                                      std::to_string(rep.input_j)};
    row.classical = rep.value_classical;
    row.boson = rep.value_boson;
    row.fermion = rep.value_fermion;
    row.residual = rep.identity_residual;
    r.rows.push_back(std::move(row));
    return r;
}

Report from_hom_scan(const std::vector<HomPoint>& points,
                     std::map<std::string, std::string> params) {
    Report r;
    r.command = "hom-scan";
    r.params = std::move(params);
    r.label_headers = {"theta"};
    r.value_columns = {"boson", "classical", "fermion"};
    for (const auto& p : points) {
        TableRow row;
        row.labels = {fmt_full(p.theta)};
        row.boson = p.boson;
        row.classical = p.classical;
        row.fermion = p.fermion;
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::string render_report(const Report& report, Format format) {
    if (format == Format::Json) {
        json j;
        j["command"] = report.command;
        j["params"] = report.params;
        j["label_headers"] = report.label_headers;
        j["value_columns"] = report.value_columns;
        j["rows"] = json::array();
        for (const auto& row : report.rows) {
            json jr;
            jr["labels"] = row.labels;
            for (const auto& col : report.value_columns) {
                const double v = row_value(row, col);
                if (std::isnan(v)) jr[col] = nullptr;
                else jr[col] = v;
            }
            j["rows"].push_back(std::move(jr));
        }
        return j.dump(2) + "\n";
    }

    if (format == Format::Csv) {
        std::ostringstream out;
        for (std::size_t i = 0; i < report.label_headers.size(); ++i)
            out << report.label_headers[i] << ",";
        for (std::size_t i = 0; i < report.value_columns.size(); ++i) {
            out << report.value_columns[i];
            out << (i + 1 < report.value_columns.size() ? "," : "");
        }
        out << "\n";
        for (const auto& row : report.rows) {
            for (const auto& label : row.labels) out << label << ",";
            for (std::size_t i = 0; i < report.value_columns.size(); ++i) {
                const double v = row_value(row, report.value_columns[i]);
                if (!std::isnan(v)) out << fmt_full(v);
                out << (i + 1 < report.value_columns.size() ? "," : "");
            }
            out << "\n";
        }
        return out.str();
    }

    // pretty
    std::ostringstream out;
    out << report.command;
    for (const auto& [k, v] : report.params) out << "  " << k << "=" << v;
    out << "\n";
    std::vector<std::size_t> label_width(report.label_headers.size());
    for (std::size_t i = 0; i < report.label_headers.size(); ++i) {
        label_width[i] = report.label_headers[i].size();
        for (const auto& row : report.rows)
            label_width[i] = std::max(label_width[i], row.labels[i].size());
    }
    constexpr int value_width = 17;
    for (std::size_t i = 0; i < report.label_headers.size(); ++i)
        out << std::left << std::setw(static_cast<int>(label_width[i]) + 2)
            << report.label_headers[i];
    for (const auto& col : report.value_columns)
        out << std::right << std::setw(value_width) << pretty_header(col);
    out << "\n";
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.labels.size(); ++i)
            out << std::left << std::setw(static_cast<int>(label_width[i]) + 2)
                << row.labels[i];
        for (const auto& col : report.value_columns) {
            const double v = row_value(row, col);
            out << std::right << std::setw(value_width)
                << (std::isnan(v) ? std::string("-") : fmt_short(v));
        }
        out << "\n";
    }
    return out.str();
}

Report parse_report_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.label_headers = j.at("label_headers").get<std::vector<std::string>>();
    r.value_columns = j.at("value_columns").get<std::vector<std::string>>();
    for (const auto& jr : j.at("rows")) {
        TableRow row;
        row.labels = jr.at("labels").get<std::vector<std::string>>();
        for (const auto& col : r.value_columns) {
            const auto& cell = jr.at(col);
            set_row_value(row, col,
                          cell.is_null() ? std::nan("")
                                         : cell.get<double>());
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

bool report_equal(const Report& a, const Report& b, double tol) {
    if (a.command != b.command || a.params != b.params ||
        a.label_headers != b.label_headers ||
        a.value_columns != b.value_columns || a.rows.size() != b.rows.size())
        return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].labels != b.rows[i].labels) return false;
        for (const auto& col : a.value_columns) {
            const double x = row_value(a.rows[i], col);
            const double y = row_value(b.rows[i], col);
            if (std::isnan(x) != std::isnan(y)) return false;
            if (!std::isnan(x) && std::abs(x - y) > tol) return false;
        }
    }
    return true;
}

}  // namespace halfstat::cli
