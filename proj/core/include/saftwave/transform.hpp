#pragma once

#include <complex>
#include <functional>

#include "saftwave/grid.hpp"
#include "saftwave/params.hpp"

namespace saftwave {

/// Relative magnitude allowed at the first and last sample of an input.
/// The kernels do not decay, so accuracy rests entirely on the input doing so.
inline constexpr double kEdgeMassThreshold = 1e-8;

/// Throws Error{EdgeMassTooLarge} if either end sample exceeds
/// kEdgeMassThreshold * max|f|.
void check_edge_mass(const SampledFunction& f);

/// Samples of O_S[f] on `zeta`, by composite trapezoid over f's grid.
SampledFunction forward(const SaftParams& params, const SampledFunction& f,
                        const UniformGrid& zeta);

/// Inverse transform onto `x`. Integrates F(zeta) * conj(K_S(x, zeta)),
/// which equals prefactor * K_{S^-1}(zeta, x).
SampledFunction inverse(const SaftParams& params, const SampledFunction& F,
                        const UniformGrid& x);

/// Trapezoid estimate of the integral of |f|^2.
double energy(const SampledFunction& f);

/// Whittaker-Shannon interpolation through the samples of f (step of f's
/// grid as the sampling period). Values outside the grid decay to zero.
cplx bandlimited_interpolate(const SampledFunction& f, double x);

/// x -> exp{-(i/2B)(A x^2 (1 - a^2) + 2 x p (1 - a))} f(a x) on `grid`,
/// with f given as an analytic generator. Throws Error{ZeroScale} for a = 0.
SampledFunction chirp_dilate(const SaftParams& params,
                             const std::function<cplx(double)>& f,
                             const UniformGrid& grid, double a);

/// Same, resampling f(a x) by band-limited interpolation of the samples.
SampledFunction chirp_dilate(const SaftParams& params,
                             const SampledFunction& f, double a);

/// Spectral factor shared by both dilation identities:
/// (1/|a|) exp{(i/2B)(2 zeta (Dp - Bq)(1/a - 1) - zeta^2 D (1/a^2 - 1))}.
/// With it, O_S[chirp_dilate(f, a)](zeta) = factor * O_S[f](zeta / a).
cplx dilation_spectral_factor(const SaftParams& params, double a,
                              double zeta);

/// Pre-chirp for the plain dilation identity:
/// exp{(i/2B)(A x^2 (1/a^2 - 1) + 2 p x (1/a - 1))}, so that
/// O_S[f(a .)](zeta) = factor * O_S[prechirp * f](zeta / a).
cplx dilation_prechirp(const SaftParams& params, double a, double x);

}  // namespace saftwave
