#include "saftwave/grid.hpp"

#include <algorithm>
#include <cmath>

#include "saftwave/error.hpp"

namespace saftwave {

UniformGrid::UniformGrid(double start, double step, std::size_t count)
    : start_(start), step_(step), count_(count) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start)) {
    throw Error(ErrorKind::InvalidArgument, "grid step must be finite and > 0");
  }
  if (count < 2) {
    throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  }
}

UniformGrid UniformGrid::spanning(double first, double last,
                                  std::size_t count) {
  if (count < 2) {
    throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  }
  return UniformGrid(first, (last - first) / static_cast<double>(count - 1),
                     count);
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> out(count_);
  for (std::size_t j = 0; j < count_; ++j) out[j] = at(j);
  return out;
}

SampledFunction::SampledFunction(UniformGrid grid,
                                 std::vector<std::complex<double>> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "sample count does not match grid size");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::InvalidArgument, "non-finite sample value");
    }
  }
}

SampledFunction SampledFunction::sample(
    const UniformGrid& grid,
    const std::function<std::complex<double>(double)>& fn) {
  std::vector<std::complex<double>> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values[j] = fn(grid[j]);
  return SampledFunction(grid, std::move(values));
}

SampledFunction SampledFunction::zeros(const UniformGrid& grid) {
  return SampledFunction(grid,
                         std::vector<std::complex<double>>(grid.size()));
}

double SampledFunction::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace saftwave
