#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saftwave/params.hpp"
#include "saftwave/quadrature.hpp"

namespace saftwave::mra {

/// Coefficients c_lo .. c_hi; reads outside the window return zero.
class FilterSequence {
 public:
  FilterSequence(int lo, std::vector<cplx> coeffs);
  static FilterSequence zeros(int lo, int hi);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

  cplx operator[](int n) const noexcept;
  void set(int n, cplx value);

 private:
  int lo_;
  std::vector<cplx> coeffs_;
};

/// Generator phi of the integer-shift family.
struct ScalingFunction {
  std::string label;
  std::function<double(double)> value;
  /// Closed-form Fourier transform (1/sqrt(2 pi)) int phi(x) e^{-i w x} dx,
  /// if known.
  std::function<cplx(double)> fourier;
  /// [lo, hi) for compactly supported, piecewise-constant generators.
  std::optional<std::pair<double, double>> support;
  /// Half-width of the trapezoid window used for inner products otherwise.
  double tail_half_width = 300.0;

  double operator()(double x) const { return value(x); }
};

/// phi = sinc (normalized).
ScalingFunction shannon_scaling();
/// phi = indicator of [0, 1).
ScalingFunction haar_scaling();
/// factor * phi; keeps the closed-form transform and support.
ScalingFunction scaled(const ScalingFunction& phi, double factor);

/// Integration domain suited to inner products of phi-built functions whose
/// shifts live in [shift_lo, shift_hi].
quad::Domain inner_product_domain(const ScalingFunction& phi, int shift_lo,
                                  int shift_hi);

/// phi_{S,k,n}(x) = 2^{k/2} exp{-(i/2B)(A (x^2 - (n/2^k)^2)
///                  + 2p (x - n/2^k))} phi(2^k x - n).
cplx phi_family(const SaftParams& params, const ScalingFunction& phi, int k,
                int n, double x);

/// Gram matrix <phi_{S,0,n}, phi_{S,0,l}> for n, l in [lo, hi], row n-lo.
std::vector<std::vector<cplx>> gram_matrix(const SaftParams& params,
                                           const ScalingFunction& phi, int lo,
                                           int hi);

/// Largest entrywise deviation of a Gram matrix from the identity.
double gram_identity_defect(const std::vector<std::vector<cplx>>& gram);

/// 2 pi * sum_{|k| <= K} |F[phi](zeta + 2 k pi)|^2 - 1. Zero means the
/// integer shifts of phi are orthonormal. Uses phi.fourier when present,
/// otherwise a trapezoid transform over phi's support.
double periodization_defect(const ScalingFunction& phi, double zeta, int K);

/// h_n = sqrt(2) exp{-(i/2B)(A n^2/4 + p n)} int phi(x) conj(phi(2x - n)) dx
/// for n in [lo, hi].
FilterSequence lowpass_from_phi(const SaftParams& params,
                                const ScalingFunction& phi, int lo, int hi);

enum class FilterKind { lowpass, highpass };

/// (1/sqrt 2) sum_n c_n e^{-i n zeta} exp{(i/2B)(A n^2/4 + p n)}.
/// The same trigonometric sum serves S_0 (from h) and S_1 (from d).
cplx symbol(const SaftParams& params, const FilterSequence& coeffs,
            FilterKind kind, double zeta);

/// Callable form of symbol(); 2 pi periodic.
class SymbolFn {
 public:
  SymbolFn(SaftParams params, FilterSequence coeffs, FilterKind kind);
  cplx operator()(double zeta) const;
  FilterKind kind() const noexcept { return kind_; }
  const FilterSequence& coefficients() const noexcept { return coeffs_; }

 private:
  SaftParams params_;
  FilterSequence coeffs_;
  FilterKind kind_;
  std::vector<cplx> weights_;  // c_n * exp{(i/2B)(A n^2/4 + p n)}
};

/// |S_0(zeta/2)|^2 + |S_0(zeta/2 + pi)|^2 - 1.
double qmf_defect(const SaftParams& params, const FilterSequence& h,
                  double zeta);

/// d_k = (-1)^{1-k} conj(h_{1-k}) exp{-(i/2B)(A((1-k)^2 + k^2)/4 + p)}.
/// The result's window is [1 - h.hi, 1 - h.lo]; this is the unique choice
/// that makes S_1(zeta) = e^{-i zeta} conj(S_0(zeta + pi)).
FilterSequence wavelet_coeffs(const SaftParams& params,
                              const FilterSequence& h);

/// S_0(zeta/2) conj(S_1(zeta/2)) + S_0(zeta/2 + pi) conj(S_1(zeta/2 + pi)).
cplx cross_defect(const SaftParams& params, const FilterSequence& h,
                  const FilterSequence& d, double zeta);

/// S_1(zeta) - e^{-i zeta} conj(S_0(zeta + pi)).
cplx highpass_symbol_check(const SaftParams& params, const FilterSequence& h,
                           const FilterSequence& d, double zeta);

/// sqrt(2) sum_k d_k exp{-(i/2B)(A(x^2 - k^2/4) + 2p(x - k/2))} phi(2x - k).
cplx synthesize_psi(const SaftParams& params, const ScalingFunction& phi,
                    const FilterSequence& d, double x);

/// Right-hand side of the refinement equation, sum_n h_n phi_{S,1,n}(x).
cplx refinement_rhs(const SaftParams& params, const ScalingFunction& phi,
                    const FilterSequence& h, double x);

/// max over xs of |phi_{S,0,0}(x) - refinement_rhs(x)|.
double refinement_residual(const SaftParams& params,
                           const ScalingFunction& phi, const FilterSequence& h,
                           const std::vector<double>& xs);

}  // namespace saftwave::mra
