#pragma once

#include <complex>

namespace saftwave {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Augmented parameter matrix S = [A B; C D | p q].
///
/// The transform is defined for unimodular cores (AD - BC = 1) with B > 0;
/// validate() enforces both. All other functions assume a validated matrix.
struct SaftParams {
  double A = 0.0;
  double B = 1.0;
  double C = -1.0;
  double D = 0.0;
  double p = 0.0;
  double q = 0.0;

  double determinant() const noexcept { return A * D - B * C; }
  /// Dp - Bq, the frequency-side shift that appears in every kernel.
  double shift() const noexcept { return D * p - B * q; }
};

inline constexpr double kUnimodularTolerance = 1e-12;

/// Throws Error{NotUnimodular} or Error{NonpositiveB}.
void validate(const SaftParams& params);

/// Core inverse M^-1 together with the offset pair (Dp - Bq, Aq - Cp).
struct InverseParams {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double p = 0.0;
  double q = 0.0;
};

InverseParams invert_params(const SaftParams& params);

/// K_S(x, zeta). The constant 1/sqrt(2 pi i B) uses the principal root,
/// i.e. exp(-i pi/4) / sqrt(2 pi B) for B > 0.
cplx kernel(const SaftParams& params, double x, double zeta);

/// Kernel of the inverse transform, K_{S^-1}(zeta, x), evaluated directly
/// from M^-1. The offsets enter as (Bq - Dp, Cp - Aq); with that sign
/// K_{S^-1}(zeta, x) == conj(prefactor * K_S(x, zeta)) holds exactly.
cplx inverse_kernel(const SaftParams& params, double zeta, double x);

/// exp{(i/2)(CDp^2 + ABq^2 - 2ADpq)}; unit modulus.
cplx prefactor(const SaftParams& params);

/// exp{-(i/2B)(A x^2 + 2 p x)}, the chirp that modulates every basis element.
cplx chirp(const SaftParams& params, double x);

namespace presets {

/// (0, 1, -1, 0 | 0, 0): the transform reduces to the Fourier transform
/// up to the constant phase exp(-i pi/4).
SaftParams fourier();
/// (1, 1, -1, 0 | 2, -1)
SaftParams figure1();
/// (3, 2, 1, 1 | 1, -2)
SaftParams figure2();

}  // namespace presets

}  // namespace saftwave
