#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "sectorlab/geometry.hpp"
#include "sectorlab/operators.hpp"
#include "sectorlab/roots.hpp"

namespace sectorlab {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const double kSqrtLn2 = std::sqrt(std::log(2.0));

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Blend, IdentityAngles) {
  const RealPolynomial p{3.0, -1.0, 0.5, 2.0};
  const auto f = rotation_blend(p, {0.0, 0.0, 0.0});
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(std::abs(f.poly[k] - 2.0 * p[k]), 0.0, 1e-15);
  EXPECT_TRUE(f.real_coefficients);

  const auto g = rotation_blend(p, {kPi, 0.0, 0.0});
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(std::abs(g.poly[k] - 2.0 * p[k] * (k % 2 ? -1.0 : 1.0)), 0.0, 1e-15);
}

TEST(Blend, QuadraticOnDiscBoundary) {
  const RealPolynomial p{2.0, -2.0, 1.0};
  const double alpha = kPi / 8;
  const auto f = rotation_blend(p, {alpha, 0.0, 0.0});
  // 2 c_k cos(k alpha): [4, -4 cos(pi/8), 2 cos(pi/4)] = [4, -4 cos(pi/8), sqrt 2]
  EXPECT_NEAR(std::abs(f.poly[0] - 4.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.poly[1] + 4.0 * std::cos(alpha)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.poly[2] - std::sqrt(2.0)), 0.0, 1e-15);

  const auto zs = find_roots(f.real_factor);
  const auto d = jensen_sector_disc(1.0, 1.0, alpha);
  const double re = 4.0 * std::cos(alpha) / (2.0 * std::sqrt(2.0));
  const double im = std::sqrt(16.0 * std::sqrt(2.0) - 16.0 * std::cos(alpha) * std::cos(alpha)) / (2.0 * std::sqrt(2.0));
  ASSERT_EQ(zs.zeros.size(), 2u);
  for (const auto& z : zs.zeros) {
    EXPECT_NEAR(z.location.real(), re, 1e-14);
    EXPECT_NEAR(std::abs(z.location.imag()), im, 1e-14);
    EXPECT_NEAR(std::abs(z.location - d.center), d.radius, 1e-14);
  }
  EXPECT_NEAR(re, 1.306563, 1e-6);
  EXPECT_NEAR(im, 1.0589241444, 1e-10);
}

// f is a unimodular phase times a real polynomial, and conjugation-closed when lambda + beta = 0.
TEST(Blend, PhaseTimesRealFactor) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0), ang(0.0, 2 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(6);
    for (auto& x : c) x = u(rng);
    const RealPolynomial p(c);
    const BlendParams bp{ang(rng) / 2, ang(rng), ang(rng)};
    const auto f = rotation_blend(p, bp);
    EXPECT_NEAR(std::abs(f.phase), 1.0, 1e-15);
    for (int k = 0; k <= f.poly.degree(); ++k) {
      const cd direct = p[k] * (std::polar(1.0, bp.lambda + k * bp.alpha) + std::polar(1.0, bp.beta - k * bp.alpha));
      EXPECT_NEAR(std::abs(f.poly[k] - direct), 0.0, 1e-13);
    }
    const auto g = rotation_blend(p, {bp.alpha, bp.lambda, -bp.lambda});
    EXPECT_TRUE(g.real_coefficients);
    for (int k = 0; k <= g.poly.degree(); ++k) EXPECT_NEAR(g.poly[k].imag(), 0.0, 1e-13);
  }
}

TEST(Blend, AllCancel) {
  // lambda - beta = pi with alpha = 0 gives e^{i lambda} + e^{i beta} = 0.
  EXPECT_EQ(kind_of([] { rotation_blend(RealPolynomial{1.0, 1.0}, {0.0, kPi / 2, -kPi / 2}); }),
            ErrorKind::ZeroPolynomialResult);
}

TEST(Sequences, GaussOnQuadratic) {
  const auto t = apply_sequence(RealPolynomial{2.0, -2.0, 1.0}, Gauss{kSqrtLn2});
  EXPECT_NEAR(t.poly[0], 2.0, 1e-15);
  EXPECT_NEAR(t.poly[1], -std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t.poly[2], 0.25, 1e-15);
  const double disc = t.poly[1] * t.poly[1] - 4 * t.poly[0] * t.poly[2];
  EXPECT_NEAR(disc, 0.0, 1e-14);
  EXPECT_NEAR(-t.poly[1] / (2 * t.poly[2]), 2 * std::sqrt(2.0), 1e-14);
}

TEST(Sequences, CosineStepOnQuadratic) {
  const auto t = apply_sequence(RealPolynomial{1.0, -2.0, 1.0}, CosineStep{kPi / 6, 1});
  EXPECT_NEAR(t.poly[1], -std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(t.poly[2], 0.5, 1e-15);
  auto zs = find_roots(t.poly).locations();
  std::sort(zs.begin(), zs.end(), [](cd a, cd b) { return a.real() < b.real(); });
  ASSERT_EQ(zs.size(), 2u);
  EXPECT_NEAR(zs[0].real(), std::sqrt(3.0) - 1.0, 1e-14);
  EXPECT_NEAR(zs[1].real(), std::sqrt(3.0) + 1.0, 1e-14);
  EXPECT_NEAR(zs[0].real(), 0.732051, 1e-6);
}

TEST(Sequences, ExplicitIdentityAndDrop) {
  const RealPolynomial p{3.0, 1.0, 4.0};
  EXPECT_EQ(apply_sequence(p, Explicit{{1.0, 1.0, 1.0}}).poly, p);
  const auto t = apply_sequence(RealPolynomial{1.0, 1.0}, Explicit{{1.0, 0.0}});
  EXPECT_TRUE(t.degree_dropped());
  EXPECT_EQ(t.poly, RealPolynomial{1.0});
  EXPECT_EQ(kind_of([] { apply_sequence(RealPolynomial{1.0, 1.0, 1.0}, Explicit{{1.0, 1.0}}); }),
            ErrorKind::HypothesisViolation);
  EXPECT_EQ(kind_of([] { apply_sequence(RealPolynomial{1.0, 1.0}, Explicit{{0.0, 0.0}}); }),
            ErrorKind::DegenerateSequence);
}

TEST(Sequences, CosineStepHypothesis) {
  // alpha n / N = 1.2 * 3 / 2 >= pi/2
  EXPECT_EQ(kind_of([] { apply_sequence(RealPolynomial{1.0, 0.0, 0.0, 1.0}, CosineStep{1.2, 2}); }),
            ErrorKind::HypothesisViolation);
  EXPECT_NO_THROW(apply_sequence(RealPolynomial{1.0, 0.0, 1.0}, CosineStep{1.2, 2}));
}

TEST(Sequences, CosineAffine) {
  const RealPolynomial p{1.0, -2.0, 1.0};
  const auto q = cosine_affine_transform(p, 0.0, kPi / 3);
  EXPECT_NEAR(q[0], 1.0, 1e-15);
  EXPECT_NEAR(q[1], -1.0, 1e-15);
  EXPECT_NEAR(q[2], -0.5, 1e-15);
  auto zs = find_roots(q).locations();
  std::sort(zs.begin(), zs.end(), [](cd a, cd b) { return a.real() < b.real(); });
  EXPECT_NEAR(zs[0].real(), -1.0 - std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(zs[1].real(), -1.0 + std::sqrt(3.0), 1e-14);
  EXPECT_EQ(cosine_affine_transform(p, 0.0, 0.0), p);
  EXPECT_EQ(kind_of([&] { cosine_affine_transform(p, kPi / 2, 0.0); }), ErrorKind::DegenerateSequence);
}

TEST(Sequences, TermsAndRatios) {
  const MultiplierSequence g = Gauss{0.5};
  EXPECT_NEAR(g.term(3), std::exp(-0.25 * 9 / 2), 1e-16);
  const MultiplierSequence seqs[] = {Gauss{0.7}, CosineStep{0.3, 4}, CosineAffine{0.1, 0.2}, LaguerreQ{0.5},
                                     LaguerreQ{-0.5}, ExpPower{0.3, 1.5}, Explicit{{1.0, 0.5, 0.3, 0.1}}};
  for (const auto& ms : seqs) {
    for (int n = 0; n + 2 <= (ms.length_limit() < 0 ? 10 : ms.length_limit()); ++n) {
      const double direct = ms.term(n) * ms.term(n + 2) / (ms.term(n + 1) * ms.term(n + 1));
      EXPECT_NEAR(ms.rn(n), direct, 1e-13 * std::max(1.0, std::abs(direct))) << ms.to_spec() << " n=" << n;
    }
  }
}

TEST(Sequences, ParseRoundTrip) {
  for (const char* spec : {"gauss:alpha=0.5", "cosstep:alpha=0.3,N=4", "cosaffine:lambda=0,theta=1", "laguerre:q=0.5",
                           "exppower:alpha=0.3,p=1.5", "explicit:1,0.5,0.25"}) {
    EXPECT_EQ(parse_sequence(spec).to_spec(), spec);
  }
  EXPECT_EQ(parse_sequence(parse_sequence("gauss:alpha=0.1").to_spec()).to_spec(), "gauss:alpha=0.1");
}

TEST(Sequences, ParseErrors) {
  for (const char* spec : {"gauss", "foo:alpha=1", "gauss:beta=1", "gauss:alpha=x", "cosstep:alpha=0.3,N=1.5",
                           "cosstep:alpha=0.3", "laguerre:q=1", "explicit:"}) {
    EXPECT_EQ(kind_of([&] { parse_sequence(spec); }), ErrorKind::InvalidArgument) << spec;
  }
}

TEST(Bounds, GaussSector) {
  EXPECT_NEAR(predicted_sector_after_gauss(kPi / 4, kSqrtLn2), 0.0, 1e-7);
  const double expect = std::acos(std::exp(0.125) * std::cos(kPi / 4));
  EXPECT_NEAR(predicted_sector_after_gauss(kPi / 4, 0.5), expect, 1e-15);
  EXPECT_NEAR(expect, 0.6414032479, 1e-10);
  EXPECT_EQ(predicted_sector_after_gauss(0.0, 0.9), 0.0);
}

TEST(Bounds, CosineStepSector) {
  const double expect = std::acos(std::cos(kPi / 4) / std::cos(kPi / 8));
  EXPECT_NEAR(predicted_sector_after_cosine_step(kPi / 4, kPi / 8, 1), expect, 1e-15);
  EXPECT_EQ(predicted_sector_after_cosine_step(0.0, 0.3, 2), 0.0);
  EXPECT_NEAR(predicted_sector_after_cosine_step(kPi / 3, kPi / 3, 1), 0.0, 1e-7);
}

TEST(Bounds, CosinePowerLimit) {
  const double limit = std::exp(-0.5);
  EXPECT_LT(std::abs(cosine_power_limit(1.0, 100) - limit), 1e-4);
  EXPECT_LT(std::abs(cosine_power_limit(1.0, 1000) - limit), 1e-6);
  // alpha^4 / (12 N^2) e^{-alpha^2/2}
  EXPECT_NEAR(std::abs(cosine_power_limit(1.0, 100) - limit), limit / 12e4, 1e-8);
  EXPECT_EQ(cosine_power_limit(0.0, 7), 1.0);
  EXPECT_NEAR(cosine_power_limit(1.0, 1), std::cos(1.0), 1e-15);
  EXPECT_EQ(kind_of([] { cosine_power_limit(2.0, 1); }), ErrorKind::DomainError);
}

TEST(ExpPoly, PrincipalZeros) {
  auto a = exp_poly_principal_zeros(RealPolynomial{2.0, -2.0, 1.0});
  ASSERT_EQ(a.size(), 2u);
  std::sort(a.begin(), a.end(), [](cd x, cd y) { return x.imag() < y.imag(); });
  EXPECT_NEAR(a[1].real(), std::log(std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(a[1].imag(), kPi / 4, 1e-15);
  EXPECT_NEAR(a[0].imag(), -kPi / 4, 1e-15);
  EXPECT_NEAR(std::abs(exp_poly_principal_zeros(RealPolynomial{-1.0, 1.0})[0]), 0.0, 1e-15);
  EXPECT_NEAR(exp_poly_principal_zeros(RealPolynomial{-std::exp(1.0), 1.0})[0].real(), 1.0, 1e-15);
  EXPECT_EQ(kind_of([] { exp_poly_principal_zeros(RealPolynomial{1.0, 1.0}); }), ErrorKind::ZeroOutsideRightHalfPlane);
  EXPECT_EQ(kind_of([] { exp_poly_principal_zeros(RealPolynomial{0.0, 1.0}); }), ErrorKind::ZeroOutsideRightHalfPlane);
}

TEST(Bounds, Strip) {
  EXPECT_NEAR(predicted_strip_after_gauss(kPi / 4, kSqrtLn2), 0.0, 1e-7);
  const double expect = std::acos(std::exp(0.125) * std::cos(1.0));
  EXPECT_NEAR(predicted_strip_after_gauss(1.0, 0.5), expect, 1e-15);
  EXPECT_NEAR(expect, 0.9119023568, 1e-10);
  EXPECT_EQ(predicted_strip_after_gauss(0.0, 0.4), 0.0);
  EXPECT_NEAR(bc_strip_bound(1.0, 0.5), std::sqrt(0.75), 1e-15);
  EXPECT_EQ(bc_strip_bound(0.3, 0.5), 0.0);
  EXPECT_EQ(bc_strip_bound(1.0, 0.0), 1.0);
}

}  // namespace
}  // namespace sectorlab
