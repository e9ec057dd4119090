#include "saftwave/params.hpp"

#include <cmath>
#include <sstream>

#include "saftwave/error.hpp"

namespace saftwave {
namespace {

// Kernel formula for any B != 0.
cplx raw_kernel(double A, double B, double D, double p, double q, double x,
                double zeta) {
  const cplx norm = 1.0 / std::sqrt(cplx(0.0, 2.0 * kPi * B));
  const double phase = (A * x * x + 2.0 * x * (p - zeta) -
                        2.0 * zeta * (D * p - B * q) +
                        D * (zeta * zeta + p * p)) /
                       (2.0 * B);
  return norm * std::polar(1.0, phase);
}

}  // namespace

void validate(const SaftParams& params) {
  const double det = params.determinant();
  if (!(std::abs(det - 1.0) <= kUnimodularTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "AD - BC = " << det << ", expected 1";
    throw Error(ErrorKind::NotUnimodular, msg.str());
  }
  if (!(params.B > 0.0)) {
    std::ostringstream msg;
    msg << "B = " << params.B << ", expected B > 0";
    throw Error(ErrorKind::NonpositiveB, msg.str());
  }
}

InverseParams invert_params(const SaftParams& s) {
  return InverseParams{s.D, -s.B, -s.C, s.A, s.D * s.p - s.B * s.q,
                       s.A * s.q - s.C * s.p};
}

cplx kernel(const SaftParams& s, double x, double zeta) {
  return raw_kernel(s.A, s.B, s.D, s.p, s.q, x, zeta);
}

cplx inverse_kernel(const SaftParams& s, double zeta, double x) {
  const InverseParams inv = invert_params(s);
  return raw_kernel(inv.A, inv.B, inv.D, -inv.p, -inv.q, zeta, x);
}

cplx prefactor(const SaftParams& s) {
  const double phase =
      0.5 * (s.C * s.D * s.p * s.p + s.A * s.B * s.q * s.q -
             2.0 * s.A * s.D * s.p * s.q);
  return std::polar(1.0, phase);
}

cplx chirp(const SaftParams& s, double x) {
  return std::polar(1.0, -(s.A * x * x + 2.0 * s.p * x) / (2.0 * s.B));
}

namespace presets {

SaftParams fourier() { return SaftParams{0.0, 1.0, -1.0, 0.0, 0.0, 0.0}; }
SaftParams figure1() { return SaftParams{1.0, 1.0, -1.0, 0.0, 2.0, -1.0}; }
SaftParams figure2() { return SaftParams{3.0, 2.0, 1.0, 1.0, 1.0, -2.0}; }

}  // namespace presets
}  // namespace saftwave
