#include "sectorlab/poly.hpp"

namespace sectorlab {

ComplexPolynomial to_complex(const RealPolynomial& p) {
  return ComplexPolynomial(p.coeffs().cast<std::complex<double>>().eval());
}

bool has_real_coefficients(const ComplexPolynomial& p, double tol) {
  return p.coeffs().imag().cwiseAbs().maxCoeff() <= tol * p.scale();
}

RealPolynomial real_part(const ComplexPolynomial& p) { return RealPolynomial(p.coeffs().real().eval()); }

std::vector<std::complex<double>> SectorRootSpec::zeros() const {
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (double x : real_roots) out.emplace_back(x, 0.0);
  for (const auto& [a, b] : pairs) {
    out.emplace_back(a, b);
    out.emplace_back(a, -b);
  }
  return out;
}

double SectorRootSpec::max_argument() const {
  double theta = 0.0;
  for (const auto& [a, b] : pairs) theta = std::max(theta, std::atan2(b, a));
  return theta;
}

void SectorRootSpec::validate() const {
  for (double x : real_roots) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw Error(ErrorKind::NonpositiveRootPart, "real zero " + std::to_string(x) + " is negative");
  }
  for (const auto& [a, b] : pairs) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
      throw Error(ErrorKind::NonpositiveRootPart,
                  "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") needs a > 0 and b > 0");
  }
}

RealPolynomial from_sector_roots(const SectorRootSpec& spec, double lead) {
  spec.validate();
  if (lead == 0.0 || !std::isfinite(lead)) throw Error(ErrorKind::InvalidArgument, "leading coefficient must be nonzero");

  // Monic factors, smallest magnitude first, accumulated in extended precision.
  struct Factor {
    long double magnitude;
    std::vector<long double> coeffs;
  };
  std::vector<Factor> factors;
  for (double x : spec.real_roots) factors.push_back({x, {-static_cast<long double>(x), 1.0L}});
  for (const auto& [a, b] : spec.pairs) {
    const long double la = a, lb = b;
    const long double modulus2 = la * la + lb * lb;
    factors.push_back({std::sqrt(modulus2), {modulus2, -2.0L * la, 1.0L}});
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Factor& l, const Factor& r) { return l.magnitude < r.magnitude; });

  std::vector<long double> acc{1.0L};
  for (const auto& factor : factors) {
    std::vector<long double> next(acc.size() + factor.coeffs.size() - 1, 0.0L);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < factor.coeffs.size(); ++j) next[i + j] += acc[i] * factor.coeffs[j];
    acc = std::move(next);
  }

  RealPolynomial::Coeffs coeffs(static_cast<Eigen::Index>(acc.size()));
  for (std::size_t k = 0; k < acc.size(); ++k) coeffs[static_cast<Eigen::Index>(k)] = static_cast<double>(acc[k] * lead);
  return RealPolynomial(std::move(coeffs));
}

std::string_view to_string(SignPattern pattern) {
  switch (pattern) {
    case SignPattern::Alternating: return "alternating";
    case SignPattern::ConstantSign: return "constant-sign";
    case SignPattern::Other: return "other";
  }
  return "other";
}

SignPattern coefficient_sign_pattern(const RealPolynomial& p) {
  const auto& c = p.coeffs();
  Eigen::Index first = 0;
  while (c[first] == 0.0) ++first;

  bool all_positive = true, all_negative = true, interior_zero = false, alternating = true;
  int previous_sign = 0;
  for (Eigen::Index k = first; k < c.size(); ++k) {
    if (c[k] == 0.0) {
      interior_zero = true;
      continue;
    }
    const int sign = c[k] > 0.0 ? 1 : -1;
    all_positive &= sign > 0;
    all_negative &= sign < 0;
    if (previous_sign != 0 && sign == previous_sign) alternating = false;
    previous_sign = sign;
  }
  if (all_positive || all_negative) return SignPattern::ConstantSign;
  if (alternating && !interior_zero) return SignPattern::Alternating;
  return SignPattern::Other;
}

}  // namespace sectorlab
