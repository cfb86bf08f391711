#include "rfbeats/cli/report.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include "json.hpp"

#include "rfbeats/errors.hpp"

namespace rfbeats::cli {

using nlohmann::ordered_json;

namespace {

std::string number(double v) { return fmt::format("{:.8e}", v); }

double as_double(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* b = std::get_if<bool>(&v)) return *b ? 1.0 : 0.0;
    return std::numeric_limits<double>::quiet_NaN();
}

ordered_json as_json(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) {
        return std::isfinite(*d) ? ordered_json(*d) : ordered_json(nullptr);
    }
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    return nullptr;
}

void write_header_comments(std::ostream& os, const RunConfig& c) {
    os << "# rfbeats " << command_name(c.command);
    if (!c.preset.empty()) os << " preset=" << c.preset;
    os << '\n';
    os << "# " << c.params.describe() << '\n';
    os << fmt::format("# phi={} t_max={} n_t={} w_max={} n_w={} initial={} component={} a33={}\n",
                      c.phi, c.t_max, c.n_t, c.w_max ? fmt::format("{}", *c.w_max) : "auto",
                      c.n_w, format_initial(c.initial), component_name(c.component), c.a33);
    if (c.command == Command::Sweep) {
        os << "# sweep_of=" << command_name(c.sweep_of) << " points=" << c.sweep_points.size()
           << '\n';
    }
}

}  // namespace

void Table::add_column(std::string name, const std::vector<double>& values) {
    if (columns.empty()) {
        rows.assign(values.size(), {});
    } else if (values.size() != rows.size()) {
        throw DimensionMismatch(fmt::format("column {} has {} rows, table has {}", name,
                                            values.size(), rows.size()));
    }
    columns.push_back(std::move(name));
    for (std::size_t k = 0; k < values.size(); ++k) rows[k].push_back(values[k]);
}

void write_csv(std::ostream& os, const RunConfig& config, const Report& report) {
    write_header_comments(os, config);
    if (!report.has_table()) {
        std::string header, row;
        for (const auto& [name, value] : report.scalars) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += name;
            row += number(as_double(value));
        }
        os << header << '\n' << row << '\n';
        return;
    }
    for (const auto& [name, value] : report.scalars) {
        os << "# " << name << '=' << number(as_double(value)) << '\n';
    }
    const Table& t = report.table;
    for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
    os << '\n';
    std::string line;
    for (const auto& row : t.rows) {
        line.clear();
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) line += ',';
            line += number(row[k]);
        }
        os << line << '\n';
    }
}

void write_json(std::ostream& os, const RunConfig& config, const Report& report) {
    ordered_json j;
    j["command"] = command_name(config.command);
    j["preset"] = config.preset;
    j["params"] = {{"omega", config.params.omega},     {"delta_l", config.params.delta_l},
                   {"delta_z", config.params.delta_z}, {"gamma", config.params.gamma},
                   {"phi", config.phi}};
    for (const auto& [name, value] : report.scalars) j[name] = as_json(value);
    if (report.has_table()) {
        ordered_json cols = ordered_json::object();
        const Table& t = report.table;
        for (std::size_t k = 0; k < t.columns.size(); ++k) {
            ordered_json arr = ordered_json::array();
            for (const auto& row : t.rows) {
                arr.push_back(std::isfinite(row[k]) ? ordered_json(row[k]) : ordered_json(nullptr));
            }
            cols[t.columns[k]] = std::move(arr);
        }
        j["columns"] = std::move(cols);
    }
    os << j.dump(2) << '\n';
}

}  // namespace rfbeats::cli
