#include "saftwave/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "saftwave/error.hpp"
#include "saftwave/quadrature.hpp"

namespace saftwave::sampling {

double sinc(double t) noexcept {
  if (t == 0.0) return 1.0;
  if (std::abs(t) < 1e-9) {
    const double u = kPi * t;
    return 1.0 - u * u / 6.0;
  }
  // sin(pi t) with the argument reduced to [-1/2, 1/2] so integers give
  // exact zeros.
  const double k = std::nearbyint(t);
  const double r = t - k;
  double s = std::sin(kPi * r);
  if (std::fmod(k, 2.0) != 0.0) s = -s;
  return s / (kPi * t);
}

BandlimitSpec BandlimitSpec::for_params(const SaftParams& params,
                                        double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorKind::InvalidArgument, "bandwidth must be > 0");
  }
  return BandlimitSpec{omega, params.B * kPi / omega};
}

SampleSet::SampleSet(double period, int window)
    : period_(period), window_(window) {
  if (!(period > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "sample period must be > 0");
  }
  if (window < 1) {
    throw Error(ErrorKind::InvalidArgument, "sample window must be >= 1");
  }
  values_.assign(static_cast<std::size_t>(2 * window + 1), cplx{});
}

SampleSet SampleSet::from_function(const std::function<cplx(double)>& f,
                                   double period, int window) {
  SampleSet s(period, window);
  for (int n = -window; n <= window; ++n) s.set(n, f(n * period));
  return s;
}

cplx SampleSet::at(int n) const noexcept {
  if (n < -window_ || n > window_) return {};
  return values_[static_cast<std::size_t>(n + window_)];
}

void SampleSet::set(int n, cplx value) {
  if (n < -window_ || n > window_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "sample index " + std::to_string(n) + " outside window");
  }
  values_[static_cast<std::size_t>(n + window_)] = value;
}

SampledFunction gmap(const SaftParams& params, const SampledFunction& F,
                     const UniformGrid& x) {
  validate(params);
  const auto& zg = F.grid();
  const double B = params.B;
  const double E = params.shift();
  std::vector<cplx> pre(zg.size());
  for (std::size_t j = 0; j < zg.size(); ++j) {
    const double z = zg[j];
    pre[j] = F[j] *
             std::polar(1.0, -(params.D * z * z - 2.0 * z * E) / (2.0 * B));
  }
  std::vector<cplx> out(x.size());
  quad::parallel_for(x.size(), [&](std::size_t m) {
    std::vector<cplx> integrand(zg.size());
    for (std::size_t j = 0; j < zg.size(); ++j) {
      integrand[j] = pre[j] * std::polar(1.0, x[m] * zg[j] / B);
    }
    out[m] = quad::trapezoid(integrand, zg.step());
  });
  return SampledFunction(x, std::move(out));
}

namespace {

void check_period(const SampleSet& samples, const BandlimitSpec& spec) {
  const double T = spec.period;
  if (std::abs(samples.period() - T) > 1e-12 * std::max(1.0, std::abs(T))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "samples taken every " << samples.period() << ", band-limit period "
        << T;
    throw Error(ErrorKind::PeriodMismatch, msg.str());
  }
}

}  // namespace

cplx reconstruct(const SaftParams& params, const SampleSet& samples,
                 const BandlimitSpec& spec, double x) {
  check_period(samples, spec);
  const double T = spec.period;
  const double B = params.B;
  const double scale = spec.omega / (B * kPi);
  const int N = samples.window();
  std::vector<cplx> terms(static_cast<std::size_t>(2 * N + 1));
  for (int n = -N; n <= N; ++n) {
    const double t = n * T;
    const cplx modulation =
        std::polar(1.0, (params.A * t * t + 2.0 * params.p * t) / (2.0 * B));
    terms[static_cast<std::size_t>(n + N)] =
        samples.at(n) * modulation * sinc(scale * (x - t));
  }
  return chirp(params, x) * quad::pairwise_sum(terms);
}

SampledFunction reconstruct(const SaftParams& params,
                            const SampleSet& samples,
                            const BandlimitSpec& spec,
                            const UniformGrid& x) {
  check_period(samples, spec);
  std::vector<cplx> out(x.size());
  quad::parallel_for(x.size(), [&](std::size_t m) {
    out[m] = reconstruct(params, samples, spec, x[m]);
  });
  return SampledFunction(x, std::move(out));
}

}  // namespace saftwave::sampling
