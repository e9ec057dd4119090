#include "saftwave/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <thread>

#include "saftwave/error.hpp"

namespace saftwave::quad {
namespace {

constexpr std::size_t kLeaf = 8;

template <typename T>
T tree_sum(std::span<const T> v) {
  if (v.size() <= kLeaf) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return tree_sum(v.first(half)) + tree_sum(v.subspan(half));
}

template <typename T>
T trapezoid_impl(std::span<const T> v, double step) {
  if (v.size() < 2) return T{};
  // Interior terms and the halved end terms go through one fixed tree.
  std::vector<T> w(v.begin(), v.end());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return tree_sum<T>(w) * step;
}

// 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGlNodes = {
    -0.90617984593866399280, -0.53846931010568309104, 0.0,
    0.53846931010568309104, 0.90617984593866399280};
constexpr std::array<double, 5> kGlWeights = {
    0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889,
    0.47862867049936646804, 0.23692688505618908751};

}  // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
  return tree_sum(v);
}

double pairwise_sum(std::span<const double> v) { return tree_sum(v); }

std::complex<double> trapezoid(std::span<const std::complex<double>> v,
                               double step) {
  return trapezoid_impl(v, step);
}

double trapezoid(std::span<const double> v, double step) {
  return trapezoid_impl(v, step);
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  // A throwing fn must not escape a worker; the lowest chunk's error wins.
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn, &err = errors[w]] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Domain Domain::trapezoid_on(double lo, double hi, double step) {
  if (!(hi > lo) || !(step > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "bad trapezoid domain");
  }
  return Domain{lo, hi, step, {}};
}

Domain Domain::pieces(std::vector<double> breakpoints) {
  if (breakpoints.size() < 2 ||
      !std::is_sorted(breakpoints.begin(), breakpoints.end())) {
    throw Error(ErrorKind::InvalidArgument,
                "piecewise domain needs >= 2 sorted breakpoints");
  }
  Domain d;
  d.lo = breakpoints.front();
  d.hi = breakpoints.back();
  d.breakpoints = std::move(breakpoints);
  return d;
}

std::complex<double> integrate(
    const std::function<std::complex<double>(double)>& fn,
    const Domain& domain) {
  if (!domain.breakpoints.empty()) {
    std::vector<std::complex<double>> parts;
    parts.reserve(domain.breakpoints.size() - 1);
    for (std::size_t i = 0; i + 1 < domain.breakpoints.size(); ++i) {
      const double a = domain.breakpoints[i];
      const double b = domain.breakpoints[i + 1];
      const double mid = 0.5 * (a + b);
      const double half = 0.5 * (b - a);
      std::complex<double> acc{};
      for (std::size_t g = 0; g < kGlNodes.size(); ++g) {
        acc += kGlWeights[g] * fn(mid + half * kGlNodes[g]);
      }
      parts.push_back(acc * half);
    }
    return pairwise_sum(parts);
  }
  const auto n = static_cast<std::size_t>(
                     std::llround((domain.hi - domain.lo) / domain.step)) +
                 1;
  const double step = (domain.hi - domain.lo) / static_cast<double>(n - 1);
  std::vector<std::complex<double>> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = fn(domain.lo + static_cast<double>(j) * step);
  }
  return trapezoid(v, step);
}

std::complex<double> inner_product(
    const std::function<std::complex<double>(double)>& f,
    const std::function<std::complex<double>(double)>& g,
    const Domain& domain) {
  return integrate([&](double x) { return f(x) * std::conj(g(x)); }, domain);
}

}  // namespace saftwave::quad
