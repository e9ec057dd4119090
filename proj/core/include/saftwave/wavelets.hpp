#pragma once

#include <string_view>

#include "saftwave/mra.hpp"
#include "saftwave/params.hpp"

namespace saftwave::wavelets {

enum class WaveletKind { shannon, haar };

std::string_view to_string(WaveletKind kind) noexcept;

struct FilterPair {
  mra::FilterSequence h;
  mra::FilterSequence d;
};

/// Sinc-generated family truncated to |n| <= window, d in closed form.
FilterPair shannon_filters(const SaftParams& params, int window);

/// Largest |d_n(closed form) - wavelet_coeffs(h)_n| over the common window.
double shannon_d_mismatch(const SaftParams& params, int window);

inline constexpr int kShannonSynthesisWindow = 512;
inline constexpr int kShannonSymbolWindow = 4096;

/// Shannon-type mother wavelet by direct synthesis with the closed-form d.
cplx shannon_psi(const SaftParams& params, int window, double x);

/// Indicator-generated family: h_0, h_1 nonzero, d from wavelet_coeffs.
FilterPair haar_filters(const SaftParams& params);

/// Closed-form Haar-type wavelet:
///   -exp{-(i/2B)(A x^2 + p)} on [0, 1/2), +exp{...} on [1/2, 1), 0 elsewhere.
cplx haar_psi(const SaftParams& params, double x);

struct WaveletFamily {
  WaveletKind kind;
  SaftParams params;
  mra::ScalingFunction phi;
  mra::FilterSequence h;
  mra::FilterSequence d;

  cplx psi(double x) const;
};

WaveletFamily make_family(WaveletKind kind, const SaftParams& params,
                          int window = kShannonSynthesisWindow);

}  // namespace saftwave::wavelets
