#include "saftwave/transform.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "saftwave/error.hpp"
#include "saftwave/quadrature.hpp"
#include "saftwave/sampling.hpp"

namespace saftwave {

void check_edge_mass(const SampledFunction& f) {
  const double peak = f.max_abs();
  const double first = std::abs(f[0]);
  const double last = std::abs(f[f.size() - 1]);
  if (first > kEdgeMassThreshold * peak || last > kEdgeMassThreshold * peak) {
    std::ostringstream msg;
    msg << "|f| at grid edges (" << first << ", " << last
        << ") exceeds " << kEdgeMassThreshold << " * max (" << peak << ")";
    throw Error(ErrorKind::EdgeMassTooLarge, msg.str());
  }
}

SampledFunction forward(const SaftParams& params, const SampledFunction& f,
                        const UniformGrid& zeta) {
  validate(params);
  check_edge_mass(f);
  const auto& xg = f.grid();
  const double B = params.B;
  const double E = params.shift();
  const cplx norm = 1.0 / std::sqrt(cplx(0.0, 2.0 * kPi * B));

  // f(x) exp{(i/2B)(A x^2 + 2 p x)}; the zeta-only factor is applied once.
  std::vector<cplx> pre(xg.size());
  for (std::size_t j = 0; j < xg.size(); ++j) {
    const double x = xg[j];
    pre[j] = f[j] * std::polar(1.0, (params.A * x * x + 2.0 * params.p * x) /
                                         (2.0 * B));
  }

  std::vector<cplx> out(zeta.size());
  quad::parallel_for(zeta.size(), [&](std::size_t m) {
    const double z = zeta[m];
    std::vector<cplx> integrand(xg.size());
    for (std::size_t j = 0; j < xg.size(); ++j) {
      integrand[j] = pre[j] * std::polar(1.0, -xg[j] * z / B);
    }
    const cplx outer = norm * std::polar(1.0, (-2.0 * z * E +
                                               params.D * (z * z + params.p *
                                                                       params.p)) /
                                                  (2.0 * B));
    out[m] = outer * quad::trapezoid(integrand, xg.step());
  });
  return SampledFunction(zeta, std::move(out));
}

SampledFunction inverse(const SaftParams& params, const SampledFunction& F,
                        const UniformGrid& x) {
  validate(params);
  check_edge_mass(F);
  const auto& zg = F.grid();
  const double B = params.B;
  const double E = params.shift();
  const cplx norm = std::conj(1.0 / std::sqrt(cplx(0.0, 2.0 * kPi * B)));

  std::vector<cplx> pre(zg.size());
  for (std::size_t j = 0; j < zg.size(); ++j) {
    const double z = zg[j];
    pre[j] = F[j] *
             std::polar(1.0, -(params.D * z * z - 2.0 * z * E) / (2.0 * B));
  }

  std::vector<cplx> out(x.size());
  quad::parallel_for(x.size(), [&](std::size_t m) {
    const double xm = x[m];
    std::vector<cplx> integrand(zg.size());
    for (std::size_t j = 0; j < zg.size(); ++j) {
      integrand[j] = pre[j] * std::polar(1.0, xm * zg[j] / B);
    }
    const cplx outer =
        norm * std::polar(1.0, -(params.A * xm * xm + 2.0 * xm * params.p +
                                 params.D * params.p * params.p) /
                                   (2.0 * B));
    out[m] = outer * quad::trapezoid(integrand, zg.step());
  });
  return SampledFunction(x, std::move(out));
}

double energy(const SampledFunction& f) {
  std::vector<double> sq(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) sq[j] = std::norm(f[j]);
  return quad::trapezoid(std::span<const double>(sq), f.grid().step());
}

cplx bandlimited_interpolate(const SampledFunction& f, double x) {
  const auto& g = f.grid();
  std::vector<cplx> terms(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    terms[j] = f[j] * sampling::sinc((x - g[j]) / g.step());
  }
  return quad::pairwise_sum(terms);
}

namespace {

void require_nonzero_scale(double a) {
  if (a == 0.0 || !std::isfinite(a)) {
    throw Error(ErrorKind::ZeroScale, "dilation factor must be nonzero");
  }
}

cplx dilation_chirp(const SaftParams& s, double a, double x) {
  return std::polar(1.0, -(s.A * x * x * (1.0 - a * a) +
                           2.0 * x * s.p * (1.0 - a)) /
                             (2.0 * s.B));
}

}  // namespace

SampledFunction chirp_dilate(const SaftParams& params,
                             const std::function<cplx(double)>& f,
                             const UniformGrid& grid, double a) {
  require_nonzero_scale(a);
  return SampledFunction::sample(grid, [&](double x) {
    return dilation_chirp(params, a, x) * f(a * x);
  });
}

SampledFunction chirp_dilate(const SaftParams& params,
                             const SampledFunction& f, double a) {
  require_nonzero_scale(a);
  if (a == 1.0) return f;
  return SampledFunction::sample(f.grid(), [&](double x) {
    return dilation_chirp(params, a, x) * bandlimited_interpolate(f, a * x);
  });
}

cplx dilation_spectral_factor(const SaftParams& s, double a, double zeta) {
  require_nonzero_scale(a);
  const double phase = (2.0 * zeta * s.shift() * (1.0 / a - 1.0) -
                        zeta * zeta * s.D * (1.0 / (a * a) - 1.0)) /
                       (2.0 * s.B);
  return std::polar(1.0 / std::abs(a), phase);
}

cplx dilation_prechirp(const SaftParams& s, double a, double x) {
  require_nonzero_scale(a);
  return std::polar(1.0, (s.A * x * x * (1.0 / (a * a) - 1.0) +
                          2.0 * s.p * x * (1.0 / a - 1.0)) /
                             (2.0 * s.B));
}

}  // namespace saftwave
