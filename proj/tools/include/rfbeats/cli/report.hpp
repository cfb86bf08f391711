#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rfbeats/cli/config.hpp"

namespace rfbeats::cli {

/// monostate marks a quantity that is undefined for the parameters
/// (JSON null, CSV "nan").
using Value = std::variant<std::monostate, double, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_column(std::string name, const std::vector<double>& values);
};

struct Report {
    std::vector<std::pair<std::string, Value>> scalars;
    Table table;

    bool has_table() const { return !table.columns.empty(); }
    void add(std::string name, Value v) { scalars.emplace_back(std::move(name), v); }
};

/// `#` comment lines echoing the configuration, then a header row and rows in
/// `{:.8e}`. A report without a table is written as a one-row table of its
/// scalars.
void write_csv(std::ostream& os, const RunConfig& config, const Report& report);

/// Object with "command", "preset", "params", every scalar as a top-level key
/// and, when present, "columns": {name: [values]}.
void write_json(std::ostream& os, const RunConfig& config, const Report& report);

}  // namespace rfbeats::cli
