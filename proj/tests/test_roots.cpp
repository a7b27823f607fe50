#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "sectorlab/poly.hpp"
#include "sectorlab/roots.hpp"

namespace sectorlab {
namespace {

using cd = std::complex<double>;

// Finds the entry of zs nearest to z.
const Zero& nearest(const ZeroSet& zs, cd z) {
  return *std::min_element(zs.zeros.begin(), zs.zeros.end(), [&](const Zero& a, const Zero& b) {
    return std::abs(a.location - z) < std::abs(b.location - z);
  });
}

TEST(FindRoots, Quadratics) {
  const auto zs = find_roots(RealPolynomial{1.0, 0.0, 1.0});
  ASSERT_EQ(zs.zeros.size(), 2u);
  EXPECT_NEAR(std::abs(nearest(zs, {0, 1}).location - cd(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(nearest(zs, {0, -1}).location - cd(0, -1)), 0.0, 1e-15);
  EXPECT_EQ(zs.total_multiplicity(), 2);

  const auto ws = find_roots(RealPolynomial{2.0, -2.0, 1.0});
  ASSERT_EQ(ws.zeros.size(), 2u);
  EXPECT_NEAR(std::abs(nearest(ws, {1, 1}).location - cd(1, 1)), 0.0, 1e-15);
}

TEST(FindRoots, TripleRootMerges) {
  const auto zs = find_roots(RealPolynomial{-1.0, 3.0, -3.0, 1.0});
  ASSERT_EQ(zs.zeros.size(), 1u);
  EXPECT_EQ(zs.zeros[0].multiplicity, 3);
  EXPECT_NEAR(std::abs(zs.zeros[0].location - 1.0), 0.0, 1e-12);
  EXPECT_EQ(zs.expanded().size(), 3u);
}

TEST(FindRoots, MixedMultiplicities) {
  // (z-1)^2 (z-3) ((z-1)^2 + 4)
  const auto p = from_sector_roots({{1.0, 1.0, 3.0}, {{1.0, 2.0}}});
  const auto zs = find_roots(p);
  ASSERT_EQ(zs.zeros.size(), 4u);
  EXPECT_EQ(nearest(zs, 1.0).multiplicity, 2);
  EXPECT_EQ(nearest(zs, 3.0).multiplicity, 1);
  EXPECT_NEAR(std::abs(nearest(zs, {1, 2}).location - cd(1, 2)), 0.0, 1e-12);
}

TEST(FindRoots, ZeroAtOrigin) {
  const auto zs = find_roots(RealPolynomial{0.0, 0.0, 2.0, -3.0, 1.0});
  EXPECT_EQ(nearest(zs, 0.0).multiplicity, 2);
  EXPECT_EQ(nearest(zs, 0.0).location, cd(0.0));
  EXPECT_NEAR(nearest(zs, 2.0).location.real(), 2.0, 1e-14);
}

TEST(FindRoots, ConstantIsRejected) {
  try {
    find_roots(RealPolynomial{5.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeZero);
  }
}

TEST(FindRoots, RandomDegreeTen) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(11);
    for (auto& x : c) x = u(rng);
    const RealPolynomial p(c);
    const auto zs = find_roots(p);
    EXPECT_EQ(zs.total_multiplicity(), p.degree());
    EXPECT_LE(residual_report(to_complex(p), zs), 1e-9);
    // Real input: the zero set is closed under conjugation.
    for (const auto& z : zs.zeros) {
      const auto& w = nearest(zs, std::conj(z.location));
      EXPECT_EQ(w.location, std::conj(z.location));
      EXPECT_EQ(w.multiplicity, z.multiplicity);
    }
  }
}

TEST(FindRoots, VietaOnSeparatedZeros) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mod(0.5, 2.0), ang(0.1, 1.4);
  for (int trial = 0; trial < 50; ++trial) {
    SectorRootSpec spec;
    for (int i = 0; i < 3; ++i) spec.real_roots.push_back(1.0 + i + 0.3 * mod(rng));
    for (int i = 0; i < 2; ++i) {
      const auto z = std::polar(mod(rng), ang(rng));
      spec.pairs.push_back({z.real(), z.imag()});
    }
    const auto p = from_sector_roots(spec);
    const auto zs = find_roots(p);
    cd sum = 0.0, prod = 1.0;
    for (const auto& z : zs.expanded()) {
      sum += z;
      prod *= z;
    }
    const int n = p.degree();
    EXPECT_NEAR(sum.real(), -p[n - 1], 1e-10 * std::abs(p[n - 1]));
    EXPECT_NEAR(std::abs(sum.imag()), 0.0, 1e-12);
    EXPECT_NEAR(prod.real(), (n % 2 ? -1.0 : 1.0) * p[0], 1e-10 * std::abs(p[0]));
  }
}

TEST(FindRoots, ComplexInput) {
  // p(e^{i phi} z) has the zeros of p rotated by -phi.
  const RealPolynomial p{2.0, -2.0, 1.0};
  const double phi = 0.3;
  const auto zs = find_roots(rotate_argument(p, phi));
  ASSERT_EQ(zs.zeros.size(), 2u);
  for (cd z : {cd(1, 1), cd(1, -1)}) {
    const cd w = z * std::polar(1.0, -phi);
    EXPECT_NEAR(std::abs(nearest(zs, w).location - w), 0.0, 1e-14);
  }
}

TEST(FindRoots, RealScalableComplexInput) {
  // A complex multiple of a real polynomial keeps its real zeros on the axis.
  const auto p = from_sector_roots({{1.0, 1.0, 2.0}, {}});
  ComplexPolynomial::Coeffs c(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) c[k] = p[k] * std::polar(1.0, 0.7);
  const auto zs = find_roots(ComplexPolynomial(c));
  for (const auto& z : zs.zeros) EXPECT_EQ(z.location.imag(), 0.0);
  EXPECT_EQ(nearest(zs, 1.0).multiplicity, 2);
}

TEST(DeflateOrigin, Examples) {
  const auto a = deflate_origin(RealPolynomial{0.0, 0.0, 2.0, -3.0, 1.0});
  EXPECT_EQ(a.multiplicity, 2);
  EXPECT_EQ(a.quotient, (RealPolynomial{2.0, -3.0, 1.0}));
  const auto b = deflate_origin(RealPolynomial{5.0});
  EXPECT_EQ(b.multiplicity, 0);
  EXPECT_EQ(b.quotient, RealPolynomial{5.0});
  const auto c = deflate_origin(RealPolynomial{0.0, 1.0});
  EXPECT_EQ(c.multiplicity, 1);
  EXPECT_EQ(c.quotient, RealPolynomial{1.0});
}

TEST(Residual, ExactAndPerturbed) {
  const auto p = to_complex(RealPolynomial{2.0, -2.0, 1.0});
  EXPECT_LT(relative_residual(p, {1.0, 1.0}), 1e-15);
  const cd z(1.0 + 1e-6, 1.0);
  const double direct = std::abs(2.0 - 2.0 * z + z * z) / (2.0 * std::norm(z));
  const double r = relative_residual(p, z);
  EXPECT_GT(r, 0.0);
  EXPECT_NEAR(r, direct, 1e-6 * direct);
}

TEST(ZerosCsv, Format) {
  const auto csv = zeros_to_csv(find_roots(RealPolynomial{1.0, 0.0, 1.0}));
  EXPECT_EQ(csv.rfind("re,im,multiplicity,residual\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(SolverConfig, Validation) {
  SolverConfig cfg;
  cfg.residual_accept = -1.0;
  EXPECT_THROW(cfg.validate(), Error);
}

}  // namespace
}  // namespace sectorlab
