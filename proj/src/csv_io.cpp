#include "blendsim/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace blendsim {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

std::vector<std::string> split_comma(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

double parse_number(const std::string& text, const std::filesystem::path& path, int lineno) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(value)) {
        std::ostringstream os;
        os << path.string() << ":" << lineno << ": non-numeric value '" << text << "'";
        throw NonNumericValueError(os.str());
    }
    return value;
}

int parse_year(const std::string& text, const std::filesystem::path& path, int lineno) {
    int year = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, year);
    if (ec != std::errc() || ptr != end || text.empty()) {
        std::ostringstream os;
        os << path.string() << ":" << lineno << ": non-numeric year '" << text << "'";
        throw NonNumericValueError(os.str());
    }
    return year;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataError("cannot open file: " + path.string());
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(strip_cr(std::move(line)));
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

}  // namespace

AnnualSeries load_series(const std::filesystem::path& path, Unit expected_unit) {
    auto lines = read_lines(path);
    if (lines.empty()) {
        throw MissingDataError("empty file: " + path.string());
    }
    if (lines[0] != "year,value") {
        throw NonNumericValueError(path.string() + ":1: expected header 'year,value', got '" +
                                   lines[0] + "'");
    }
    if (lines.size() == 1) {
        throw MissingDataError("no data rows in " + path.string());
    }
    int start_year = 0;
    std::vector<double> values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        auto fields = split_comma(lines[i]);
        if (fields.size() != 2) {
            std::ostringstream os;
            os << path.string() << ":" << lineno << ": expected 2 fields, got " << fields.size();
            throw NonNumericValueError(os.str());
        }
        int year = parse_year(fields[0], path, lineno);
        double value = parse_number(fields[1], path, lineno);
        if (values.empty()) {
            start_year = year;
        } else if (year != start_year + static_cast<int>(values.size())) {
            std::ostringstream os;
            os << path.string() << ":" << lineno << ": year " << year
               << " breaks the consecutive ascending sequence (expected "
               << start_year + static_cast<int>(values.size()) << ")";
            throw NonConsecutiveYearsError(os.str());
        }
        values.push_back(value);
    }
    return AnnualSeries(start_year, std::move(values), expected_unit);
}

void save_series(const AnnualSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw MissingDataError("cannot write file: " + path.string());
    }
    out << "year,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << series.start_year() + static_cast<int>(i) << ","
            << format_double(series.values()[i]) << "\n";
    }
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return values[i];
        }
    }
    throw MissingDataError("table has no column '" + name + "'");
}

CsvTable load_table(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.size() < 2) {
        throw MissingDataError("empty table: " + path.string());
    }
    auto header = split_comma(lines[0]);
    if (header.size() < 2 || header[0] != "year") {
        throw NonNumericValueError(path.string() + ":1: expected header starting with 'year'");
    }
    CsvTable table;
    table.columns.assign(header.begin() + 1, header.end());
    table.values.resize(table.columns.size());
    int expected_year = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        auto fields = split_comma(lines[i]);
        if (fields.size() != header.size()) {
            std::ostringstream os;
            os << path.string() << ":" << lineno << ": expected " << header.size()
               << " fields, got " << fields.size();
            throw NonNumericValueError(os.str());
        }
        int year = parse_year(fields[0], path, lineno);
        if (i == 1) {
            table.start_year = year;
        } else if (year != expected_year) {
            std::ostringstream os;
            os << path.string() << ":" << lineno << ": year " << year
               << " breaks the consecutive ascending sequence";
            throw NonConsecutiveYearsError(os.str());
        }
        expected_year = year + 1;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            table.values[c].push_back(parse_number(fields[c + 1], path, lineno));
        }
    }
    return table;
}

void save_table(const CsvTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw MissingDataError("cannot write file: " + path.string());
    }
    out << "year";
    for (const auto& col : table.columns) {
        out << "," << col;
    }
    out << "\n";
    const std::size_t rows = table.values.empty() ? 0 : table.values[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
        out << table.start_year + static_cast<int>(r);
        for (const auto& col : table.values) {
            out << "," << format_double(col[r]);
        }
        out << "\n";
    }
}

AnnualSeries series_from_table(const CsvTable& table, const std::string& column, Unit unit) {
    return AnnualSeries(table.start_year, table.column(column), unit);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace blendsim
