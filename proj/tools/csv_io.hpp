#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankgini::cli {

/// Bad input file, bad column, bad cell. Maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;  ///< 1-based file line of each row

    std::size_t column(std::string_view name) const;
};

/// Comma-separated, header row required, optional double-quoted fields,
/// LF or CRLF line ends, optional UTF-8 byte-order mark.
CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::string& path);

/// Locale-independent decimal parse of one cell; rejects empty cells,
/// trailing garbage and non-finite values.
double parse_number(std::string_view cell, std::size_t line, std::string_view column);

/// General format with 17 significant digits (trailing zeros dropped),
/// locale independent.
std::string format_number(double x);

std::string format_fixed(double x, int decimals);

} // namespace rankgini::cli
