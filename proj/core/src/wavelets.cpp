#include "saftwave/wavelets.hpp"

#include <algorithm>
#include <cmath>

#include "saftwave/error.hpp"

namespace saftwave::wavelets {
namespace {

const double kSqrt2 = std::sqrt(2.0);

double half_step_phase(const SaftParams& s, int n) {
  const double nn = static_cast<double>(n);
  return (s.A * nn * nn / 4.0 + s.p * nn) / (2.0 * s.B);
}

// sin(n pi / 2) and cos(n pi / 2) without rounding.
double sin_quarter_turn(int n) {
  switch (((n % 4) + 4) % 4) {
    case 1: return 1.0;
    case 3: return -1.0;
    default: return 0.0;
  }
}

double cos_quarter_turn(int n) { return sin_quarter_turn(n + 1); }

void require_window(int window) {
  if (window < 1) {
    throw Error(ErrorKind::InvalidArgument, "window must be >= 1");
  }
}

}  // namespace

std::string_view to_string(WaveletKind kind) noexcept {
  switch (kind) {
    case WaveletKind::shannon: return "shannon";
    case WaveletKind::haar: return "haar";
  }
  return "unknown";
}

FilterPair shannon_filters(const SaftParams& params, int window) {
  validate(params);
  require_window(window);
  auto h = mra::FilterSequence::zeros(-window, window);
  auto d = mra::FilterSequence::zeros(-window, window);
  for (int n = -window; n <= window; ++n) {
    const cplx phase = std::polar(1.0, -half_step_phase(params, n));
    const double nn = static_cast<double>(n);
    if (n == 0) {
      h.set(n, 1.0 / kSqrt2);
    } else {
      h.set(n, kSqrt2 / (kPi * nn) * sin_quarter_turn(n) * phase);
    }
    if (n == 1) {
      d.set(n, phase / kSqrt2);
    } else {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      d.set(n, kSqrt2 / (kPi * (nn - 1.0)) * sign * cos_quarter_turn(n) *
                   phase);
    }
  }
  return {std::move(h), std::move(d)};
}

double shannon_d_mismatch(const SaftParams& params, int window) {
  const FilterPair pair = shannon_filters(params, window);
  const mra::FilterSequence derived = mra::wavelet_coeffs(params, pair.h);
  const int lo = std::max(pair.d.lo(), derived.lo());
  const int hi = std::min(pair.d.hi(), derived.hi());
  double worst = 0.0;
  for (int n = lo; n <= hi; ++n) {
    worst = std::max(worst, std::abs(pair.d[n] - derived[n]));
  }
  return worst;
}

cplx shannon_psi(const SaftParams& params, int window, double x) {
  const FilterPair pair = shannon_filters(params, window);
  return mra::synthesize_psi(params, mra::shannon_scaling(), pair.d, x);
}

FilterPair haar_filters(const SaftParams& params) {
  validate(params);
  auto h = mra::FilterSequence::zeros(0, 1);
  h.set(0, 1.0 / kSqrt2);
  h.set(1, std::polar(1.0 / kSqrt2, -half_step_phase(params, 1)));
  auto d = mra::wavelet_coeffs(params, h);
  return {std::move(h), std::move(d)};
}

cplx haar_psi(const SaftParams& params, double x) {
  validate(params);
  if (x < 0.0 || x >= 1.0) return 0.0;
  const cplx v = std::polar(1.0, -(params.A * x * x + params.p) / (2.0 * params.B));
  return x < 0.5 ? -v : v;
}

cplx WaveletFamily::psi(double x) const {
  return mra::synthesize_psi(params, phi, d, x);
}

WaveletFamily make_family(WaveletKind kind, const SaftParams& params,
                          int window) {
  if (kind == WaveletKind::shannon) {
    FilterPair pair = shannon_filters(params, window);
    return {kind, params, mra::shannon_scaling(), std::move(pair.h),
            std::move(pair.d)};
  }
  FilterPair pair = haar_filters(params);
  return {kind, params, mra::haar_scaling(), std::move(pair.h),
          std::move(pair.d)};
}

}  // namespace saftwave::wavelets
