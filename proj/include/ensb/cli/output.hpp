// SPDX-License-Identifier: Apache-2.0
//
// Table writers. CSV carries the metadata in '#' lines; JSON uses
// {meta, columns, rows}. Failed cells are written as null in both.
#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "ensb/cli/config.hpp"
#include "ensb/cli/scan.hpp"
#include "ensb/errors.hpp"

namespace ensb::cli {

inline constexpr char const* null_marker = "null";

//! precision significant digits, locale-independent.
[[nodiscard]] inline std::string format_number(double v, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

inline void write_csv(std::ostream& os, ScanResult const& r, int precision)
{
    os << "# " << r.meta["tool"].get<std::string>() << ' ' << r.meta["version"].get<std::string>() << '\n';
    os << "# config: " << r.meta["config"].dump() << '\n';
    os << "# derived: " << r.meta["derived"].dump() << '\n';
    for (auto const& w : r.meta["warnings"])
        os << "# warning: " << w.get<std::string>() << '\n';
    for (std::size_t k = 0; k < r.columns.size(); ++k)
        os << (k ? "," : "") << r.columns[k];
    os << ",status\n";
    for (auto const& row : r.rows)
    {
        for (std::size_t k = 0; k < row.cells.size(); ++k)
        {
            if (k)
                os << ',';
            os << (row.cells[k] ? format_number(*row.cells[k], precision) : null_marker);
        }
        std::string status = row.status;
        for (char& ch : status)
            if (ch == ',' || ch == '\n' || ch == '"')
                ch = ';';
        os << ',' << status << '\n';
    }
}

[[nodiscard]] inline json to_json(ScanResult const& r, int precision)
{
    json j;
    j["meta"] = r.meta;
    j["columns"] = r.columns;
    json rows = json::array();
    for (auto const& row : r.rows)
    {
        json cells = json::array();
        for (auto const& c : row.cells)
        {
            if (c)
                cells.push_back(std::stod(format_number(*c, precision)));
            else
                cells.push_back(nullptr);
        }
        rows.push_back({{"values", cells}, {"status", row.status}});
    }
    j["rows"] = rows;
    return j;
}

inline void write_json(std::ostream& os, ScanResult const& r, int precision)
{
    os << to_json(r, precision).dump(2) << '\n';
}

inline void write(std::ostream& os, ScanResult const& r, OutputSpec const& spec)
{
    if (spec.format == Format::json)
        write_json(os, r, spec.precision);
    else
        write_csv(os, r, spec.precision);
}

//! Write to spec.path; throws Error naming the path on I/O failure.
inline void write_file(ScanResult const& r, OutputSpec const& spec)
{
    std::ofstream out(spec.path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open output file '" + spec.path + "'");
    write(out, r, spec);
    out.flush();
    if (!out)
        throw Error("failed writing output file '" + spec.path + "'");
}

}  // namespace ensb::cli
