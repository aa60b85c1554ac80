#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interp {

/// Scientific notation with 17 significant digits: round-trips any double.
std::string format_value(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Parses simple comma-separated content: first row is the header, `#` lines
/// are skipped. Throws std::invalid_argument naming the line on ragged rows
/// or unparsable numbers (via parse_number below).
CsvTable read_csv(std::istream& in);

double parse_number(const std::string& field, std::size_t line_number);

} // namespace interp
