#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "saftwave/error.hpp"
#include "saftwave/mra.hpp"

using namespace saftwave;
using namespace saftwave::mra;

namespace {

const double kRt2 = std::sqrt(2.0);

FilterSequence haar_h(const SaftParams& s) {
  auto h = FilterSequence::zeros(0, 1);
  h.set(0, 1.0 / kRt2);
  h.set(1, std::polar(1.0 / kRt2, -(s.A / 4.0 + s.p) / (2.0 * s.B)));
  return h;
}

// Closed-form sinc filter, written out independently.
cplx shannon_h(const SaftParams& s, int n) {
  if (n == 0) return 1.0 / kRt2;
  return kRt2 / (kPi * n) * std::sin(n * kPi / 2.0) *
         std::polar(1.0, -(s.A * n * n / 4.0 + s.p * n) / (2.0 * s.B));
}

FilterSequence shannon_h_window(const SaftParams& s, int N) {
  auto h = FilterSequence::zeros(-N, N);
  for (int n = -N; n <= N; ++n) h.set(n, shannon_h(s, n));
  return h;
}

std::vector<double> random_zetas(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> z(count);
  for (auto& v : z) v = u(rng);
  return z;
}

}  // namespace

TEST(FilterSequenceTest, WindowSemantics) {
  auto h = FilterSequence::zeros(-2, 3);
  EXPECT_EQ(h.size(), 6u);
  h.set(3, 1.5);
  EXPECT_EQ(h[3], cplx(1.5));
  EXPECT_EQ(h[4], cplx(0.0));
  EXPECT_EQ(h[-9], cplx(0.0));
  EXPECT_THROW(h.set(4, 1.0), Error);
  EXPECT_THROW(FilterSequence::zeros(2, 1), Error);
}

TEST(PhiFamily, Examples) {
  const SaftParams s = presets::figure1();
  const auto sinc = shannon_scaling();
  EXPECT_EQ(phi_family(s, sinc, 0, 0, 0.0), cplx(1.0));
  for (double x : {-0.7, 0.2, 1.9}) {
    const cplx want = kRt2 * std::polar(1.0, -(s.A * x * x + 2 * s.p * x) / (2 * s.B)) *
                      oracle::sinc(2 * x);
    EXPECT_LE(std::abs(phi_family(s, sinc, 1, 0, x) - want), 1e-14);
  }
}

TEST(Gram, SincFamilyIsOrthonormal) {
  const auto g = gram_matrix(presets::figure1(), shannon_scaling(), -2, 2);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_LE(gram_identity_defect(g), 2e-3);
}

TEST(Gram, HaarFamilyIsOrthonormal) {
  const auto g = gram_matrix(presets::figure2(), haar_scaling(), -3, 3);
  EXPECT_LE(gram_identity_defect(g), 1e-12);
}

TEST(Gram, ScaledGeneratorIsNot) {
  const auto g = gram_matrix(presets::figure1(), scaled(haar_scaling(), 2.0), 0, 1);
  EXPECT_NEAR(gram_identity_defect(g), 3.0, 1e-12);
}

TEST(Periodization, Sinc) {
  for (double z : {0.1, 1.0, 2.5, 4.0, 6.0}) {
    EXPECT_NEAR(periodization_defect(shannon_scaling(), z, 3), 0.0, 1e-9);
  }
  EXPECT_NEAR(periodization_defect(scaled(shannon_scaling(), 2.0), 1.0, 3), 3.0, 1e-9);
}

TEST(Periodization, Indicator) {
  EXPECT_LE(std::abs(periodization_defect(haar_scaling(), kPi, 10000)), 2e-4);
  for (int i = 0; i < 64; ++i) {
    const double z = 2.0 * kPi * i / 64.0;
    EXPECT_LE(std::abs(periodization_defect(haar_scaling(), z, 10000)), 2e-4) << z;
  }
}

TEST(Periodization, QuadratureFallbackWithoutClosedForm) {
  auto phi = haar_scaling();
  phi.fourier = nullptr;
  EXPECT_LE(std::abs(periodization_defect(phi, 1.0, 10000)), 2e-4);
}

TEST(Lowpass, SincMatchesClosedForm) {
  const SaftParams s = presets::figure1();
  const auto h = lowpass_from_phi(s, shannon_scaling(), -8, 8);
  EXPECT_NEAR(h[0].real(), 1.0 / kRt2, 3e-3);
  EXPECT_LE(std::abs(h[2]), 3e-3);
  EXPECT_NEAR(std::abs(h[1]), kRt2 / kPi, 3e-3);
  for (int n = -8; n <= 8; ++n) EXPECT_LE(std::abs(h[n] - shannon_h(s, n)), 3e-3) << n;
}

TEST(Lowpass, IndicatorMatchesHaar) {
  const SaftParams s = presets::figure2();
  const auto h = lowpass_from_phi(s, haar_scaling(), -2, 3);
  const auto want = haar_h(s);
  for (int n = -2; n <= 3; ++n) EXPECT_LE(std::abs(h[n] - want[n]), 1e-14) << n;
}

TEST(Lowpass, ClassicalShannonIsReal) {
  const auto h = lowpass_from_phi(presets::fourier(), shannon_scaling(), -6, 6);
  for (int n = -6; n <= 6; ++n) {
    EXPECT_EQ(h[n].imag(), 0.0);
    EXPECT_NEAR(h[n].real(), kRt2 * oracle::sinc_correlation(n), 3e-3);
  }
}

TEST(Symbol, HaarClosedForm) {
  for (const SaftParams& s : {presets::figure1(), presets::figure2()}) {
    const auto h = haar_h(s);
    EXPECT_LE(std::abs(symbol(s, h, FilterKind::lowpass, 0.0) - 1.0), 1e-15);
    EXPECT_LE(std::abs(symbol(s, h, FilterKind::lowpass, kPi)), 1e-15);
    for (double z : random_zetas(50, 1)) {
      const cplx want = (1.0 + std::polar(1.0, -z)) / 2.0;
      EXPECT_LE(std::abs(symbol(s, h, FilterKind::lowpass, z) - want), 1e-14);
    }
  }
}

TEST(Symbol, Periodic) {
  const SaftParams s = presets::figure2();
  const auto h = shannon_h_window(s, 64);
  const SymbolFn s0(s, h, FilterKind::lowpass);
  for (double z : random_zetas(50, 2)) {
    for (int k : {-3, 1, 7}) {
      EXPECT_LE(std::abs(s0(z + 2.0 * kPi * k) - s0(z)), 1e-12);
    }
  }
}

TEST(Qmf, HaarExact) {
  for (const SaftParams& s : {presets::figure1(), presets::figure2()}) {
    for (double z : random_zetas(100, 3)) EXPECT_LE(std::abs(qmf_defect(s, haar_h(s), z)), 1e-12);
  }
}

TEST(Qmf, ZeroFilter) {
  EXPECT_EQ(qmf_defect(presets::figure1(), FilterSequence::zeros(0, 3), 0.4), -1.0);
}

TEST(Qmf, ShannonAwayFromBandEdges) {
  const SaftParams s = presets::figure1();
  const auto h = shannon_h_window(s, 4096);
  int checked = 0;
  for (double z = -kPi; z < kPi; z += 0.05) {
    const double half = std::abs(std::remainder(z / 2.0, kPi));
    if (std::abs(half - kPi / 2.0) < 0.1) continue;
    EXPECT_LE(std::abs(qmf_defect(s, h, z)), 1e-2) << z;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(WaveletCoeffs, Haar) {
  const SaftParams s = presets::figure1();
  const auto d = wavelet_coeffs(s, haar_h(s));
  EXPECT_NEAR(std::abs(d[0]), 1.0 / kRt2, 1e-15);
  EXPECT_NEAR(std::abs(d[1]), 1.0 / kRt2, 1e-15);
  EXPECT_EQ(d[2], cplx(0.0));
  EXPECT_LE(std::abs(d[0] + 1.0 / kRt2), 1e-15);
}

TEST(WaveletCoeffs, ZeroAndShannon) {
  const auto zero = wavelet_coeffs(presets::figure1(), FilterSequence::zeros(-2, 2));
  for (int k = zero.lo(); k <= zero.hi(); ++k) EXPECT_EQ(zero[k], cplx(0.0));
  const auto d = wavelet_coeffs(presets::figure1(), shannon_h_window(presets::figure1(), 32));
  EXPECT_NEAR(std::abs(d[1]), 1.0 / kRt2, 1e-15);
}

TEST(CrossDefect, HaarVanishes) {
  for (const SaftParams& s : {presets::figure1(), presets::figure2()}) {
    const auto h = haar_h(s);
    const auto d = wavelet_coeffs(s, h);
    for (double z : random_zetas(100, 4)) EXPECT_LE(std::abs(cross_defect(s, h, d, z)), 1e-12);
  }
}

TEST(CrossDefect, ZeroHighpass) {
  const SaftParams s = presets::figure1();
  EXPECT_EQ(cross_defect(s, haar_h(s), FilterSequence::zeros(0, 1), 0.3), cplx(0.0));
}

TEST(CrossDefect, ShannonAwayFromBandEdges) {
  const SaftParams s = presets::figure2();
  const auto h = shannon_h_window(s, 4096);
  const auto d = wavelet_coeffs(s, h);
  for (double z = -kPi; z < kPi; z += 0.1) {
    const double half = std::abs(std::remainder(z / 2.0, kPi));
    if (std::abs(half - kPi / 2.0) < 0.1) continue;
    EXPECT_LE(std::abs(cross_defect(s, h, d, z)), 2e-2) << z;
  }
}

TEST(HighpassCheck, Examples) {
  const SaftParams s = presets::figure1();
  const auto h = haar_h(s);
  const auto d = wavelet_coeffs(s, h);
  for (double z : random_zetas(50, 5)) {
    EXPECT_LE(std::abs(highpass_symbol_check(s, h, d, z)), 1e-12);
    const cplx zero_branch = highpass_symbol_check(s, h, FilterSequence::zeros(0, 1), z);
    EXPECT_NEAR(std::abs(zero_branch), std::abs(std::sin(z / 2.0)), 1e-14);
  }
  const auto hs = shannon_h_window(presets::figure2(), 256);
  EXPECT_LE(std::abs(highpass_symbol_check(presets::figure2(), hs,
                                           wavelet_coeffs(presets::figure2(), hs), 0.0)),
            1e-10);
}

TEST(Synthesis, ZeroCoefficients) {
  EXPECT_EQ(synthesize_psi(presets::figure1(), haar_scaling(), FilterSequence::zeros(0, 1), 0.3),
            cplx(0.0));
}

TEST(Synthesis, HaarWaveletIsChirpedSignPattern) {
  const SaftParams s = presets::figure1();
  const auto d = wavelet_coeffs(s, haar_h(s));
  for (double x = -0.5; x < 1.5; x += 0.01) {
    const cplx v = synthesize_psi(s, haar_scaling(), d, x);
    if (x < 0.0 || x >= 1.0) {
      EXPECT_EQ(v, cplx(0.0));
    } else {
      EXPECT_NEAR(std::abs(v), 1.0, 1e-14);
    }
  }
}

TEST(Synthesis, HaarWaveletOrthogonalToScalingFunction) {
  for (const SaftParams& s : {presets::figure1(), presets::figure2()}) {
    const auto d = wavelet_coeffs(s, haar_h(s));
    const auto phi = haar_scaling();
    const auto dom = inner_product_domain(phi, 0, 1);
    const cplx ip = quad::inner_product([&](double x) { return phi_family(s, phi, 0, 0, x); },
                                        [&](double x) { return synthesize_psi(s, phi, d, x); },
                                        dom);
    EXPECT_LE(std::abs(ip), 1e-10);
  }
}

TEST(Refinement, HaarExact) {
  std::vector<double> xs;
  for (int i = 0; i < 1024; ++i) xs.push_back(-0.5 + 2.0 * i / 1024.0);
  for (const SaftParams& s : {presets::figure1(), presets::figure2()}) {
    EXPECT_LE(refinement_residual(s, haar_scaling(), haar_h(s), xs), 1e-10);
  }
}

TEST(Refinement, ShannonResidualDecreasesWithWindow) {
  const SaftParams s = presets::figure1();
  std::vector<double> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(-4.0 + 8.0 * (i + 0.37) / 64.0);
  double prev = 1e300;
  for (int N : {32, 64, 128, 256}) {
    const double r = refinement_residual(s, shannon_scaling(), shannon_h_window(s, N), xs);
    EXPECT_LT(r, prev) << N;
    prev = r;
  }
}
