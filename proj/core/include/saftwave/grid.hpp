#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace saftwave {

/// Points x_j = start + j * step, j = 0 .. count-1, with step > 0 and
/// count >= 2.
class UniformGrid {
 public:
  UniformGrid(double start, double step, std::size_t count);

  /// Grid whose first point is `first` and last point is `last`.
  static UniformGrid spanning(double first, double last, std::size_t count);

  double start() const noexcept { return start_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return count_; }
  double back() const noexcept { return at(count_ - 1); }
  double at(std::size_t j) const noexcept {
    return start_ + static_cast<double>(j) * step_;
  }
  double operator[](std::size_t j) const noexcept { return at(j); }

  std::vector<double> points() const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double start_;
  double step_;
  std::size_t count_;
};

/// Complex samples on a uniform grid. Used for signals and spectra alike.
class SampledFunction {
 public:
  SampledFunction(UniformGrid grid, std::vector<std::complex<double>> values);

  static SampledFunction sample(
      const UniformGrid& grid,
      const std::function<std::complex<double>(double)>& fn);
  static SampledFunction zeros(const UniformGrid& grid);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const std::complex<double>> values() const noexcept {
    return values_;
  }
  std::size_t size() const noexcept { return values_.size(); }
  std::complex<double> operator[](std::size_t j) const noexcept {
    return values_[j];
  }

  double max_abs() const noexcept;

 private:
  UniformGrid grid_;
  std::vector<std::complex<double>> values_;
};

}  // namespace saftwave
