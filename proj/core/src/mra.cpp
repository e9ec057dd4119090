#include "saftwave/mra.hpp"

#include <algorithm>
#include <cmath>

#include "saftwave/error.hpp"
#include "saftwave/sampling.hpp"

namespace saftwave::mra {
namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);
const double kSqrt2 = std::sqrt(2.0);

// (A n^2 / 4 + p n) / 2B, the half-step modulation phase of index n.
double half_step_phase(const SaftParams& s, int n) {
  const double nn = static_cast<double>(n);
  return (s.A * nn * nn / 4.0 + s.p * nn) / (2.0 * s.B);
}

cplx fourier_by_quadrature(const ScalingFunction& phi, double w) {
  auto integrand = [&](double x) {
    return phi(x) * std::polar(1.0, -w * x);
  };
  quad::Domain dom;
  if (phi.support) {
    // Piecewise-constant generators: integrate e^{-iwx} exactly on the
    // support instead of sampling it.
    const auto [a, b] = *phi.support;
    const double mid = 0.5 * (a + b);
    const double height = phi(mid);
    if (w == 0.0) return kInvSqrt2Pi * height * (b - a);
    return kInvSqrt2Pi * height *
           (std::polar(1.0, -w * a) - std::polar(1.0, -w * b)) /
           cplx(0.0, w);
  }
  dom = quad::Domain::trapezoid_on(-phi.tail_half_width, phi.tail_half_width,
                                   1.0 / 16.0);
  return kInvSqrt2Pi * quad::integrate(integrand, dom);
}

}  // namespace

FilterSequence::FilterSequence(int lo, std::vector<cplx> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "filter needs lo <= hi");
  }
}

FilterSequence FilterSequence::zeros(int lo, int hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "filter needs lo <= hi");
  return FilterSequence(lo, std::vector<cplx>(static_cast<std::size_t>(hi - lo + 1)));
}

cplx FilterSequence::operator[](int n) const noexcept {
  if (n < lo_ || n > hi()) return {};
  return coeffs_[static_cast<std::size_t>(n - lo_)];
}

void FilterSequence::set(int n, cplx value) {
  if (n < lo_ || n > hi()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "filter index " + std::to_string(n) + " outside window");
  }
  coeffs_[static_cast<std::size_t>(n - lo_)] = value;
}

ScalingFunction shannon_scaling() {
  ScalingFunction phi;
  phi.label = "sinc";
  phi.value = [](double x) { return sampling::sinc(x); };
  phi.fourier = [](double w) -> cplx {
    const double a = std::abs(w);
    if (a < kPi) return kInvSqrt2Pi;
    if (a == kPi) return 0.5 * kInvSqrt2Pi;
    return 0.0;
  };
  return phi;
}

ScalingFunction haar_scaling() {
  ScalingFunction phi;
  phi.label = "indicator[0,1)";
  phi.value = [](double x) { return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0; };
  phi.fourier = [](double w) -> cplx {
    if (w == 0.0) return kInvSqrt2Pi;
    return kInvSqrt2Pi * (1.0 - std::polar(1.0, -w)) / cplx(0.0, w);
  };
  phi.support = std::pair{0.0, 1.0};
  return phi;
}

ScalingFunction scaled(const ScalingFunction& phi, double factor) {
  ScalingFunction out = phi;
  out.label = std::to_string(factor) + "*" + phi.label;
  out.value = [v = phi.value, factor](double x) { return factor * v(x); };
  if (phi.fourier) {
    out.fourier = [f = phi.fourier, factor](double w) { return factor * f(w); };
  }
  return out;
}

quad::Domain inner_product_domain(const ScalingFunction& phi, int shift_lo,
                                  int shift_hi) {
  if (!phi.support) {
    const double w = phi.tail_half_width;
    return quad::Domain::trapezoid_on(-w, w, 1.0 / 16.0);
  }
  if (shift_lo > shift_hi) std::swap(shift_lo, shift_hi);
  // Level-0 shifts occupy [n + a, n + b), level-1 shifts [(n + a)/2, (n + b)/2).
  const auto [a, b] = *phi.support;
  const double lo = std::min(shift_lo + a, 0.5 * (shift_lo + a));
  const double hi = std::max(shift_hi + b, 0.5 * (shift_hi + b));
  std::vector<double> pts;
  for (double t = std::floor(2.0 * lo) / 2.0; t <= std::ceil(2.0 * hi) / 2.0;
       t += 0.5) {
    pts.push_back(t);
  }
  return quad::Domain::pieces(std::move(pts));
}

cplx phi_family(const SaftParams& s, const ScalingFunction& phi, int k, int n,
                double x) {
  const double c = std::ldexp(static_cast<double>(n), -k);
  const double amp = std::pow(2.0, 0.5 * k);
  const double phase =
      -(s.A * (x * x - c * c) + 2.0 * s.p * (x - c)) / (2.0 * s.B);
  return std::polar(amp, phase) * phi(std::ldexp(x, k) - n);
}

std::vector<std::vector<cplx>> gram_matrix(const SaftParams& params,
                                           const ScalingFunction& phi, int lo,
                                           int hi) {
  const quad::Domain dom = inner_product_domain(phi, lo, hi);
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<cplx>> g(n, std::vector<cplx>(n));
  quad::parallel_for(n * n, [&](std::size_t idx) {
    const int a = lo + static_cast<int>(idx / n);
    const int b = lo + static_cast<int>(idx % n);
    g[idx / n][idx % n] = quad::inner_product(
        [&](double x) { return phi_family(params, phi, 0, a, x); },
        [&](double x) { return phi_family(params, phi, 0, b, x); }, dom);
  });
  return g;
}

double gram_identity_defect(const std::vector<std::vector<cplx>>& gram) {
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram[i].size(); ++j) {
      const cplx target = (i == j) ? cplx(1.0) : cplx(0.0);
      worst = std::max(worst, std::abs(gram[i][j] - target));
    }
  }
  return worst;
}

double periodization_defect(const ScalingFunction& phi, double zeta, int K) {
  if (K < 1) throw Error(ErrorKind::InvalidArgument, "K must be >= 1");
  std::vector<double> terms(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    const double w = zeta + 2.0 * kPi * k;
    const cplx F = phi.fourier ? phi.fourier(w) : fourier_by_quadrature(phi, w);
    terms[static_cast<std::size_t>(k + K)] = std::norm(F);
  }
  return 2.0 * kPi * quad::pairwise_sum(std::span<const double>(terms)) - 1.0;
}

FilterSequence lowpass_from_phi(const SaftParams& params,
                                const ScalingFunction& phi, int lo, int hi) {
  FilterSequence h = FilterSequence::zeros(lo, hi);
  std::vector<cplx> values(h.size());
  quad::parallel_for(h.size(), [&](std::size_t i) {
    const int n = lo + static_cast<int>(i);
    const quad::Domain dom = inner_product_domain(phi, 0, n);
    const cplx corr = quad::integrate(
        [&](double x) { return cplx(phi(x) * phi(2.0 * x - n)); }, dom);
    values[i] = kSqrt2 * std::polar(1.0, -half_step_phase(params, n)) * corr;
  });
  for (std::size_t i = 0; i < values.size(); ++i) {
    h.set(lo + static_cast<int>(i), values[i]);
  }
  return h;
}

SymbolFn::SymbolFn(SaftParams params, FilterSequence coeffs, FilterKind kind)
    : params_(params), coeffs_(std::move(coeffs)), kind_(kind) {
  weights_.resize(coeffs_.size());
  for (int n = coeffs_.lo(); n <= coeffs_.hi(); ++n) {
    weights_[static_cast<std::size_t>(n - coeffs_.lo())] =
        coeffs_[n] * std::polar(1.0, half_step_phase(params_, n));
  }
}

cplx SymbolFn::operator()(double zeta) const {
  // Reduce to [-pi, pi] first so the sum is evaluated on one period.
  const double z = std::remainder(zeta, 2.0 * kPi);
  std::vector<cplx> terms(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double n = static_cast<double>(coeffs_.lo()) + static_cast<double>(i);
    terms[i] = weights_[i] * std::polar(1.0, -n * z);
  }
  return quad::pairwise_sum(terms) / kSqrt2;
}

cplx symbol(const SaftParams& params, const FilterSequence& coeffs,
            FilterKind kind, double zeta) {
  return SymbolFn(params, coeffs, kind)(zeta);
}

double qmf_defect(const SaftParams& params, const FilterSequence& h,
                  double zeta) {
  const SymbolFn s0(params, h, FilterKind::lowpass);
  return std::norm(s0(0.5 * zeta)) + std::norm(s0(0.5 * zeta + kPi)) - 1.0;
}

FilterSequence wavelet_coeffs(const SaftParams& params,
                              const FilterSequence& h) {
  const int lo = 1 - h.hi();
  const int hi = 1 - h.lo();
  FilterSequence d = FilterSequence::zeros(lo, hi);
  for (int k = lo; k <= hi; ++k) {
    const double j = 1.0 - k;
    const double kk = static_cast<double>(k);
    const double phase =
        -(params.A * (j * j + kk * kk) / 4.0 + params.p) / (2.0 * params.B);
    const double sign = ((1 - k) % 2 == 0) ? 1.0 : -1.0;
    d.set(k, sign * std::conj(h[1 - k]) * std::polar(1.0, phase));
  }
  return d;
}

cplx cross_defect(const SaftParams& params, const FilterSequence& h,
                  const FilterSequence& d, double zeta) {
  const SymbolFn s0(params, h, FilterKind::lowpass);
  const SymbolFn s1(params, d, FilterKind::highpass);
  const double w = 0.5 * zeta;
  return s0(w) * std::conj(s1(w)) + s0(w + kPi) * std::conj(s1(w + kPi));
}

cplx highpass_symbol_check(const SaftParams& params, const FilterSequence& h,
                           const FilterSequence& d, double zeta) {
  const SymbolFn s0(params, h, FilterKind::lowpass);
  const SymbolFn s1(params, d, FilterKind::highpass);
  return s1(zeta) - std::polar(1.0, -zeta) * std::conj(s0(zeta + kPi));
}

cplx synthesize_psi(const SaftParams& params, const ScalingFunction& phi,
                    const FilterSequence& d, double x) {
  std::vector<cplx> terms(d.size());
  for (int k = d.lo(); k <= d.hi(); ++k) {
    const double c = 0.5 * k;
    const double phase =
        -(params.A * (x * x - c * c) + 2.0 * params.p * (x - c)) /
        (2.0 * params.B);
    terms[static_cast<std::size_t>(k - d.lo())] =
        d[k] * std::polar(1.0, phase) * phi(2.0 * x - k);
  }
  return kSqrt2 * quad::pairwise_sum(terms);
}

cplx refinement_rhs(const SaftParams& params, const ScalingFunction& phi,
                    const FilterSequence& h, double x) {
  return synthesize_psi(params, phi, h, x);
}

double refinement_residual(const SaftParams& params,
                           const ScalingFunction& phi, const FilterSequence& h,
                           const std::vector<double>& xs) {
  std::vector<double> r(xs.size());
  quad::parallel_for(xs.size(), [&](std::size_t i) {
    r[i] = std::abs(phi_family(params, phi, 0, 0, xs[i]) -
                    refinement_rhs(params, phi, h, xs[i]));
  });
  return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

}  // namespace saftwave::mra
