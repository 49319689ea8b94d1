#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stcube {

struct CsvRow {
    int line = 0;                     // 1-based line number in the file
    std::vector<std::string> fields;  // trimmed, comments and blanks skipped
};

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// Read a simple comma-separated file: blank lines and lines starting with
/// '#' are skipped; fields are trimmed; no quoting rules.
inline std::vector<CsvRow> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::vector<CsvRow> rows;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        CsvRow row;
        row.line = number;
        std::stringstream ss(stripped);
        std::string field;
        while (std::getline(ss, field, ',')) row.fields.push_back(trim(field));
        if (!stripped.empty() && stripped.back() == ',') row.fields.push_back("");
        rows.push_back(std::move(row));
    }
    return rows;
}

inline double parse_number(const std::string& text, const std::string& path, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(line) +
                                 ": not a number: '" + text + "'");
    }
}

}  // namespace stcube
