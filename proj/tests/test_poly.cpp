#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "sectorlab/poly.hpp"
#include "sectorlab/poly_json.hpp"

namespace sectorlab {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void expect_coeffs(const RealPolynomial& p, std::initializer_list<double> expected, double tol = 0.0) {
  ASSERT_EQ(p.degree() + 1, static_cast<int>(expected.size()));
  int k = 0;
  for (double c : expected) EXPECT_NEAR(p[k++], c, tol) << "k = " << k - 1;
}

TEST(Polynomial, StripsTrailingZeros) {
  const RealPolynomial p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading(), 2.0);
  EXPECT_EQ(p.scale(), 2.0);
}

TEST(Polynomial, RejectsZeroAndNonFinite) {
  try {
    RealPolynomial{0.0, 0.0};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
  try {
    RealPolynomial{1.0, std::nan("")};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Polynomial, FromSectorRoots) {
  expect_coeffs(from_sector_roots({{}, {{1.0, 1.0}}}), {2.0, -2.0, 1.0});
  expect_coeffs(from_sector_roots({{1.0, 1.0}, {}}), {1.0, -2.0, 1.0});
  expect_coeffs(from_sector_roots({{1.0, 2.0}, {}}), {2.0, -3.0, 1.0});
  expect_coeffs(from_sector_roots({{1.0, 2.0}, {}}, -3.0), {-6.0, 9.0, -3.0});
}

TEST(Polynomial, FromSectorRootsRejectsLeftZeros) {
  for (const SectorRootSpec& bad : {SectorRootSpec{{-1.0}, {}}, SectorRootSpec{{}, {{0.0, 1.0}}},
                                    SectorRootSpec{{}, {{1.0, -1.0}}}}) {
    try {
      from_sector_roots(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonpositiveRootPart);
    }
  }
}

TEST(Polynomial, SectorRootSpecArgument) {
  const SectorRootSpec spec{{2.0}, {{1.0, 1.0}, {1.0, std::sqrt(3.0)}}};
  EXPECT_EQ(spec.degree(), 5);
  EXPECT_NEAR(spec.max_argument(), kPi / 3, 1e-15);
  EXPECT_EQ(spec.zeros().size(), 5u);
  EXPECT_EQ((SectorRootSpec{{1.0, 3.0}, {}}.max_argument()), 0.0);
}

// Vieta: sum and product of the zeros against the expanded coefficients.
TEST(Polynomial, FromSectorRootsVieta) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mod(0.3, 3.0), ang(0.05, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    SectorRootSpec spec;
    const int reals = static_cast<int>(rng() % 4), pairs = static_cast<int>(rng() % 4);
    for (int i = 0; i < reals; ++i) spec.real_roots.push_back(mod(rng));
    for (int i = 0; i < pairs; ++i) {
      const auto z = std::polar(mod(rng), ang(rng));
      spec.pairs.push_back({z.real(), z.imag()});
    }
    if (spec.degree() == 0) continue;
    const auto p = from_sector_roots(spec);
    const int n = p.degree();
    cd sum = 0.0, prod = 1.0;
    for (const auto& z : spec.zeros()) {
      sum += z;
      prod *= z;
    }
    EXPECT_EQ(p.leading(), 1.0);
    EXPECT_NEAR(-p[n - 1], sum.real(), 1e-12 * (1 + std::abs(sum)));
    EXPECT_NEAR((n % 2 ? -1.0 : 1.0) * p[0], prod.real(), 1e-12 * (1 + std::abs(prod)));
  }
}

TEST(Polynomial, Eval) {
  const RealPolynomial p{2.0, -2.0, 1.0};
  EXPECT_EQ(std::abs(eval(p, cd(1.0, 1.0))), 0.0);
  EXPECT_EQ(eval(RealPolynomial{1.0}, cd(3.0, -7.0)), cd(1.0, 0.0));
  EXPECT_EQ(eval(RealPolynomial{0.0, 0.0, 1.0}, cd(0.0, 2.0)), cd(-4.0, 0.0));
}

TEST(Polynomial, RotateArgument) {
  const RealPolynomial p{2.0, -2.0, 1.0};
  const auto same = rotate_argument(p, 0.0);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(same[k], cd(p[k]));

  const auto q = rotate_argument(RealPolynomial{0.0, 0.0, 1.0}, kPi / 2);
  EXPECT_NEAR(std::abs(q[2] - cd(-1.0, 0.0)), 0.0, 1e-15);

  const double phi = kPi / 8;
  const auto r = rotate_argument(p, phi);
  EXPECT_NEAR(std::abs(r[1] - (-2.0) * std::polar(1.0, phi)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r[2] - std::polar(1.0, 2 * phi)), 0.0, 1e-15);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 5; ++i) {
    const cd z(u(rng), u(rng));
    EXPECT_NEAR(std::abs(eval(r, z) - eval(p, std::polar(1.0, phi) * z)), 0.0, 1e-13);
  }
}

TEST(Polynomial, SignPattern) {
  EXPECT_EQ(coefficient_sign_pattern(RealPolynomial{2.0, -2.0, 1.0}), SignPattern::Alternating);
  EXPECT_EQ(coefficient_sign_pattern(RealPolynomial{1.0, 2.0, 1.0}), SignPattern::ConstantSign);
  EXPECT_EQ(coefficient_sign_pattern(RealPolynomial{1.0, 0.0, -1.0}), SignPattern::Other);
  EXPECT_EQ(to_string(SignPattern::Alternating), "alternating");
}

TEST(Polynomial, RealPart) {
  const ComplexPolynomial p{cd(1.0, 2.0), cd(0.0, 1.0), cd(3.0, 0.0)};
  EXPECT_FALSE(has_real_coefficients(p));
  expect_coeffs(real_part(p), {1.0, 0.0, 3.0});
  EXPECT_TRUE(has_real_coefficients(to_complex(RealPolynomial{1.0, 2.0})));
}

TEST(PolyJson, CoeffsRoundTrip) {
  const RealPolynomial p{2.0, -2.0, 1.0};
  EXPECT_EQ(polynomial_from_json(polynomial_to_json(p)), p);
  EXPECT_EQ(polynomial_from_json_text(R"({"coeffs": [2, -2, 1]})"), p);
}

TEST(PolyJson, RootsForm) {
  const auto p = polynomial_from_json_text(R"({"roots": {"real": [1, 2], "pairs": [[1, 1]], "lead": 2}})");
  EXPECT_EQ(p, from_sector_roots({{1.0, 2.0}, {{1.0, 1.0}}}, 2.0));
}

TEST(PolyJson, Diagnostics) {
  const auto message = [](const std::string& text) {
    try {
      polynomial_from_json_text(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
      return e.detail();
    }
    return std::string("no error");
  };
  EXPECT_NE(message("{\"coeffs\": [1,\n 2,, 3]}").find("line 2, column 4"), std::string::npos);
  EXPECT_NE(message(R"({"coeffs": [1, "a"]})").find("coeffs[1]"), std::string::npos);
  EXPECT_NE(message(R"({"roots": {"pairs": [[1]]}})").find("roots.pairs[0]"), std::string::npos);
  EXPECT_NE(message(R"({"coeffs": []})").find("coeffs"), std::string::npos);
  EXPECT_NE(message(R"({"other": 1})").find("missing"), std::string::npos);
}

}  // namespace
}  // namespace sectorlab
