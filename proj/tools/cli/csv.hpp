#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saftwave/grid.hpp"
#include "saftwave/params.hpp"

namespace saftwave::cli {

/// 17 significant digits, locale independent.
std::string format_number(double v);

class CsvWriter {
 public:
  CsvWriter(std::ostream& os, std::initializer_list<std::string_view> header);
  void row(std::initializer_list<double> values);

 private:
  std::ostream& os_;
  std::size_t columns_;
};

/// Numeric rows of a comma-separated file. A first line that does not parse
/// as numbers is treated as a header and skipped.
std::vector<std::vector<double>> read_rows(std::istream& is);

/// (x, value) or (x, re, im) rows on a uniform x grid.
SampledFunction read_signal(std::istream& is);

}  // namespace saftwave::cli
