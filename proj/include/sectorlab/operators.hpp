#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "sectorlab/poly.hpp"
#include "sectorlab/roots.hpp"

namespace sectorlab {

/// gamma_k = exp(-alpha^2 k^2 / 2)
struct Gauss {
  double alpha;
};
/// gamma_k = cos(alpha k / N); admissible on degree n only while alpha n / N < pi/2.
struct CosineStep {
  double alpha;
  int N;
};
/// gamma_k = cos(lambda + k theta)
struct CosineAffine {
  double lambda;
  double theta;
};
/// gamma_k = q^(k^2), -1 < q < 1
struct LaguerreQ {
  double q;
};
/// gamma_k = exp(-alpha k^p)
struct ExpPower {
  double alpha;
  double p;
};
/// gamma_k = values[k]; undefined past the end of the list.
struct Explicit {
  std::vector<double> values;
};

/// Diagonal operator T[z^k] = gamma_k z^k, given by a named family.
class MultiplierSequence {
 public:
  using Family = std::variant<Gauss, CosineStep, CosineAffine, LaguerreQ, ExpPower, Explicit>;

  MultiplierSequence(Family family);  // NOLINT(google-explicit-constructor)
  template <typename F>
    requires std::is_constructible_v<Family, F> && (!std::is_same_v<std::remove_cvref_t<F>, Family>)
  MultiplierSequence(F&& family) : MultiplierSequence(Family(std::forward<F>(family))) {}  // NOLINT

  const Family& family() const { return family_; }

  double term(int k) const;
  /// gamma_n gamma_{n+2} / gamma_{n+1}^2, in closed form where the family has one.
  double rn(int n) const;
  /// Largest k for which term(k) is defined; -1 for unbounded families.
  int length_limit() const;

  /// Round-trips through parse_sequence.
  std::string to_spec() const;

 private:
  Family family_;
};

/// Parses "gauss:alpha=0.5", "cosstep:alpha=0.3,N=4", "cosaffine:lambda=0,theta=1.0",
/// "laguerre:q=0.5", "exppower:alpha=0.3,p=1.5", "explicit:1,0.5,0.25".
/// Unknown or malformed specs raise InvalidArgument.
MultiplierSequence parse_sequence(std::string_view spec);

struct BlendParams {
  double alpha = 0.0;
  double lambda = 0.0;
  double beta = 0.0;
};

/// Result of an operator whose leading coefficient may vanish.
template <typename Scalar>
struct Transformed {
  Polynomial<Scalar> poly;
  int source_degree;

  bool degree_dropped() const { return poly.degree() < source_degree; }
};

/// The blend factors as e^{i phi} * 2 cos(mu + k alpha) with phi = (lambda + beta)/2,
/// mu = (lambda - beta)/2, so f = phase * real_factor for every choice of parameters.
struct BlendResult : Transformed<std::complex<double>> {
  std::complex<double> phase;
  RealPolynomial real_factor;
  /// phase is +-1, i.e. lambda + beta is a multiple of 2 pi.
  bool real_coefficients;
};

/// f(z) = e^{i lambda} p(e^{i alpha} z) + e^{i beta} p(e^{-i alpha} z),
/// coefficientwise c_k (e^{i(lambda + k alpha)} + e^{i(beta - k alpha)}).
/// Zeros are best taken from real_factor, which carries no complex rounding.
/// Throws ZeroPolynomialResult when every coefficient cancels.
BlendResult rotation_blend(const RealPolynomial& p, const BlendParams& bp);

/// c_k -> gamma_k c_k. Throws HypothesisViolation for a CosineStep with
/// alpha n / N >= pi/2, or an explicit list shorter than the degree needs;
/// DegenerateSequence when every coefficient is annihilated.
Transformed<double> apply_sequence(const RealPolynomial& p, const MultiplierSequence& ms);

/// c_k -> cos(lambda + k theta) c_k. Throws DegenerateSequence when nothing survives.
RealPolynomial cosine_affine_transform(const RealPolynomial& p, double lambda, double theta);

/// arccos(min{1, e^{alpha^2/2} cos theta}), the sector after the Gauss operator.
double predicted_sector_after_gauss(double theta, double alpha);

/// arccos(min{1, cos theta sec(alpha / N)}), the sector after one cosine step.
double predicted_sector_after_cosine_step(double theta, double alpha, int N);

/// [cos(alpha/N)]^(N^2). Throws DomainError unless |alpha/N| < pi/2.
double cosine_power_limit(double alpha, int N);

/// Principal logarithms of the zeros of p: the principal-strip zeros of the
/// exponential polynomial sum c_k e^{kz}. One entry per distinct zero.
/// Throws ZeroOutsideRightHalfPlane if p(0) = 0 or some zero has Re z <= 0.
std::vector<std::complex<double>> exp_poly_principal_zeros(const RealPolynomial& p, const SolverConfig& cfg = {});

/// arccos(min{1, e^{alpha^2/2} cos A}).
double predicted_strip_after_gauss(double A, double alpha);

/// sqrt(max{A^2 - alpha^2, 0}), the strip bound for exp(-alpha^2 D^2 / 2) on R[z].
double bc_strip_bound(double A, double alpha);

}  // namespace sectorlab
