#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "saftwave/grid.hpp"

namespace saftwave::quad {

/// Sum by a fixed binary tree (split at the midpoint, leaves of at most
/// eight terms summed left to right). The result depends only on the
/// values and their order, never on how callers schedule the work.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> v);
double pairwise_sum(std::span<const double> v);

/// Composite trapezoid over uniformly spaced samples. Sizes < 2 give 0.
std::complex<double> trapezoid(std::span<const std::complex<double>> v,
                               double step);
double trapezoid(std::span<const double> v, double step);

/// Calls fn(i) for i in [0, count), split over hardware threads. Each index
/// is handled by exactly one call, so per-index results are deterministic.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn);

/// Integration rule for inner products of chirp-modulated families.
///
/// With breakpoints set, a 5-point Gauss-Legendre rule is applied on every
/// piece; this is exact (to rounding) when the integrand is piecewise
/// polynomial of degree <= 9, which covers piecewise-constant generators.
/// Otherwise a composite trapezoid on [lo, hi] with the given step is used.
struct Domain {
  double lo = -300.0;
  double hi = 300.0;
  double step = 1.0 / 16.0;
  std::vector<double> breakpoints;

  static Domain trapezoid_on(double lo, double hi, double step);
  static Domain pieces(std::vector<double> breakpoints);
};

std::complex<double> integrate(
    const std::function<std::complex<double>(double)>& fn,
    const Domain& domain);

/// <f, g> = integral of f * conj(g).
std::complex<double> inner_product(
    const std::function<std::complex<double>(double)>& f,
    const std::function<std::complex<double>(double)>& g,
    const Domain& domain);

}  // namespace saftwave::quad
