#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace infoq {

/// Rows of comma-separated numbers. Blank lines and lines starting with '#'
/// are skipped; a first line that does not parse as numbers is a header.
std::vector<std::vector<double>> read_numeric_csv(std::istream& in);

/// "0.5,0.25,0.25" -> {0.5, 0.25, 0.25}. Throws DomainError on junk.
std::vector<double> parse_double_list(std::string_view text);
std::vector<std::int64_t> parse_int_list(std::string_view text);

/// Integers one per line (or comma separated), '#' comments allowed.
std::vector<std::int64_t> read_int_column(std::istream& in);

/// %.12g
std::string format_number(double v);

}  // namespace infoq
