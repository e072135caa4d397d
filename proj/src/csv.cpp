#include "infoq/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>

#include "infoq/error.hpp"

namespace infoq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

bool parse_double(std::string_view field, double& out) {
  if (field.empty()) {
    return false;
  }
  // strtod accepts "inf"/"nan"; callers validate finiteness separately.
  const std::string buf(field);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

bool parse_int(std::string_view field, std::int64_t& out) {
  if (!field.empty() && field.front() == '+') {
    field.remove_prefix(1);
  }
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() && !field.empty();
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

}  // namespace

std::vector<std::vector<double>> read_numeric_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (skippable(view)) {
      continue;
    }
    std::vector<double> row;
    bool ok = true;
    for (std::string_view field : split(view, ',')) {
      double v = 0.0;
      if (!parse_double(field, v)) {
        ok = false;
        break;
      }
      row.push_back(v);
    }
    if (!ok) {
      if (first) {
        first = false;
        continue;
      }
      throw DomainError("CSV line " + std::to_string(line_no) + " is not numeric");
    }
    first = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view field : split(trim(text), ',')) {
    double v = 0.0;
    if (!parse_double(field, v)) {
      throw DomainError("not a number: '" + std::string(field) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (std::string_view field : split(trim(text), ',')) {
    std::int64_t v = 0;
    if (!parse_int(field, v)) {
      throw DomainError("not an integer: '" + std::string(field) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> read_int_column(std::istream& in) {
  std::vector<std::int64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (skippable(view)) {
      continue;
    }
    for (std::int64_t v : parse_int_list(view)) {
      out.push_back(v);
    }
  }
  return out;
}

std::string format_number(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace infoq
