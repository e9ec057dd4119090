#include "csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "saftwave/error.hpp"

namespace saftwave::cli {
namespace {

bool parse_number(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_line(const std::string& line, std::vector<double>& row) {
  row.clear();
  std::string_view rest = line;
  while (true) {
    const auto comma = rest.find(',');
    double v = 0.0;
    if (!parse_number(rest.substr(0, comma), v)) return false;
    row.push_back(v);
    if (comma == std::string_view::npos) return true;
    rest.remove_prefix(comma + 1);
  }
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                     std::chars_format::general, 17);
  return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("nan");
}

CsvWriter::CsvWriter(std::ostream& os,
                     std::initializer_list<std::string_view> header)
    : os_(os), columns_(header.size()) {
  bool first = true;
  for (auto h : header) {
    if (!first) os_ << ',';
    os_ << h;
    first = false;
  }
  os_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  if (values.size() != columns_) {
    throw Error(ErrorKind::InvalidArgument, "csv row width mismatch");
  }
  bool first = true;
  for (double v : values) {
    if (!first) os_ << ',';
    os_ << format_number(v);
    first = false;
  }
  os_ << '\n';
}

std::vector<std::vector<double>> read_rows(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::vector<double> row;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    if (!parse_line(line, row)) {
      if (rows.empty() && lineno == 1) continue;
      throw Error(ErrorKind::InvalidArgument,
                  "csv line " + std::to_string(lineno) + " is not numeric");
    }
    rows.push_back(row);
  }
  return rows;
}

SampledFunction read_signal(std::istream& is) {
  const auto rows = read_rows(is);
  if (rows.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "signal csv needs >= 2 rows");
  }
  const std::size_t width = rows.front().size();
  if (width != 2 && width != 3) {
    throw Error(ErrorKind::InvalidArgument,
                "signal csv needs 2 (x, value) or 3 (x, re, im) columns");
  }
  const double x0 = rows.front()[0];
  const double step = (rows.back()[0] - x0) / static_cast<double>(rows.size() - 1);
  std::vector<cplx> values;
  values.reserve(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != width) {
      throw Error(ErrorKind::InvalidArgument, "ragged signal csv");
    }
    const double want = x0 + static_cast<double>(j) * step;
    if (std::abs(rows[j][0] - want) > 1e-9 * std::max(1.0, std::abs(want))) {
      throw Error(ErrorKind::InvalidArgument, "signal csv x column is not uniform");
    }
    values.emplace_back(rows[j][1], width == 3 ? rows[j][2] : 0.0);
  }
  return SampledFunction(UniformGrid(x0, step, rows.size()), std::move(values));
}

}  // namespace saftwave::cli
