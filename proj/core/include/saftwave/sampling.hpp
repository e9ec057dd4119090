#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "saftwave/grid.hpp"
#include "saftwave/params.hpp"

namespace saftwave::sampling {

/// Normalized cardinal sine sin(pi t) / (pi t), sinc(0) = 1, exactly zero at
/// nonzero integers.
double sinc(double t) noexcept;

/// Bandwidth Omega_S in the transform domain and the matching Nyquist
/// period T = B pi / Omega_S.
struct BandlimitSpec {
  double omega = kPi;
  double period = 1.0;

  /// Throws Error{InvalidArgument} unless omega > 0.
  static BandlimitSpec for_params(const SaftParams& params, double omega);
};

/// Samples f(nT) for n in [-window, window]; entries outside are zero.
class SampleSet {
 public:
  SampleSet(double period, int window);

  static SampleSet from_function(const std::function<cplx(double)>& f,
                                 double period, int window);

  double period() const noexcept { return period_; }
  int window() const noexcept { return window_; }
  cplx at(int n) const noexcept;
  void set(int n, cplx value);

 private:
  double period_;
  int window_;
  std::vector<cplx> values_;
};

inline constexpr int kDefaultWindow = 64;

/// g(x) = integral of F(zeta) exp{-(i/2B)(-2 x zeta - 2 zeta (Dp - Bq) +
/// D zeta^2)} d zeta, by trapezoid over F's grid. g is band-limited to
/// (-Omega/B, Omega/B) in the ordinary Fourier domain when F is supported in
/// (-Omega, Omega).
SampledFunction gmap(const SaftParams& params, const SampledFunction& F,
                     const UniformGrid& x);

/// Chirp-modulated sinc series through the samples:
///   exp{-(i/2B)(A x^2 + 2 x p)} * sum_n f(nT) exp{(i/2B)(A (nT)^2 + 2 p nT)}
///                                  * sinc(Omega (x - nT) / (B pi)).
/// Throws Error{PeriodMismatch} if the sample period differs from spec.
cplx reconstruct(const SaftParams& params, const SampleSet& samples,
                 const BandlimitSpec& spec, double x);

SampledFunction reconstruct(const SaftParams& params,
                            const SampleSet& samples,
                            const BandlimitSpec& spec,
                            const UniformGrid& x);

}  // namespace saftwave::sampling
