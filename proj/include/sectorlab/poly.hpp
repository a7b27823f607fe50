#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "sectorlab/error.hpp"

namespace sectorlab {

/// Dense univariate polynomial, coefficients in ascending degree order
/// (coeffs[k] multiplies z^k). Trailing zero coefficients are stripped on
/// construction; the zero polynomial cannot be represented.
template <typename Scalar_>
class Polynomial {
 public:
  using Scalar = Scalar_;
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit Polynomial(Coeffs coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(static_cast<Eigen::Index>(coeffs.size())) {
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.data());
    normalize();
  }

  explicit Polynomial(const std::vector<Scalar>& coeffs)
      : coeffs_(Eigen::Map<const Coeffs>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()))) {
    normalize();
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeffs& coeffs() const { return coeffs_; }
  Scalar operator[](int k) const { return coeffs_[k]; }
  Scalar leading() const { return coeffs_[coeffs_.size() - 1]; }

  /// Coefficient magnitude scale max_k |c_k|; every relative tolerance refers to it.
  RealScalar scale() const { return coeffs_.cwiseAbs().maxCoeff(); }

  /// Horner evaluation at a real or complex point.
  template <typename T>
  auto operator()(const T& z) const {
    using Result = decltype(Scalar{} * z);
    Result acc = Result(coeffs_[coeffs_.size() - 1]);
    for (Eigen::Index k = coeffs_.size() - 2; k >= 0; --k) acc = acc * z + Result(coeffs_[k]);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    Eigen::Index n = coeffs_.size();
    while (n > 0 && coeffs_[n - 1] == Scalar(0)) --n;
    if (n == 0) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial is not a valid operand");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!std::isfinite(std::abs(coeffs_[k])))
        throw Error(ErrorKind::InvalidArgument, "non-finite coefficient at index " + std::to_string(k));
    }
    coeffs_.conservativeResize(n);
  }

  Coeffs coeffs_;
};

using RealPolynomial = Polynomial<double>;
using ComplexPolynomial = Polynomial<std::complex<double>>;

/// Horner evaluation; exact for degree 0.
template <typename Scalar>
std::complex<double> eval(const Polynomial<Scalar>& p, std::complex<double> z) {
  return std::complex<double>(p(z));
}

ComplexPolynomial to_complex(const RealPolynomial& p);

/// True when every imaginary part is at most `tol * scale()`.
bool has_real_coefficients(const ComplexPolynomial& p, double tol = 0.0);

/// Real part of the coefficients. Throws ZeroPolynomial if nothing survives.
RealPolynomial real_part(const ComplexPolynomial& p);

/// Conjugate pair of zeros a +- i b with a > 0, b > 0.
struct ConjugatePair {
  double a;
  double b;
};

/// Zeros of a real polynomial with every zero in a closed right-half-plane sector:
/// nonnegative real zeros and conjugate pairs with positive real part.
struct SectorRootSpec {
  std::vector<double> real_roots;
  std::vector<ConjugatePair> pairs;

  int degree() const { return static_cast<int>(real_roots.size() + 2 * pairs.size()); }
  /// Every zero as a complex number, pairs expanded as (a+ib, a-ib).
  std::vector<std::complex<double>> zeros() const;
  /// Largest |arg| over all zeros; 0 when there are no conjugate pairs.
  double max_argument() const;
  void validate() const;
};

/// lead * prod (z - x_k) * prod ((z - a_k)^2 + b_k^2), expanded.
RealPolynomial from_sector_roots(const SectorRootSpec& spec, double lead = 1.0);

/// q(z) = p(e^{i phi} z), i.e. c_k -> c_k e^{i k phi}.
template <typename Scalar>
ComplexPolynomial rotate_argument(const Polynomial<Scalar>& p, double phi) {
  ComplexPolynomial::Coeffs out(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) out[k] = std::complex<double>(p[k]) * std::polar(1.0, k * phi);
  return ComplexPolynomial(std::move(out));
}

enum class SignPattern { Alternating, ConstantSign, Other };

std::string_view to_string(SignPattern pattern);

/// Sign structure of the coefficients from the lowest nonzero one to the leading one.
/// A zero coefficient in that range makes the pattern Other unless all nonzero
/// coefficients share a sign.
SignPattern coefficient_sign_pattern(const RealPolynomial& p);

}  // namespace sectorlab
