#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "blendsim/annual_series.hpp"

namespace blendsim {

/// Two-column dialect: UTF-8, header `year,value`, one row per consecutive
/// year, '.' decimal separator, no thousands separators.
AnnualSeries load_series(const std::filesystem::path& path, Unit expected_unit);
void save_series(const AnnualSeries& series, const std::filesystem::path& path);

/// Multi-column report table in the same dialect: first column `year`, one
/// named numeric column per series.
struct CsvTable {
    int start_year = 0;
    std::vector<std::string> columns;            // excludes the year column
    std::vector<std::vector<double>> values;     // values[column][row]

    const std::vector<double>& column(const std::string& name) const;
};

CsvTable load_table(const std::filesystem::path& path);
void save_table(const CsvTable& table, const std::filesystem::path& path);

/// Column of a report table as an AnnualSeries.
AnnualSeries series_from_table(const CsvTable& table, const std::string& column, Unit unit);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace blendsim
