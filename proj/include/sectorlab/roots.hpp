#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sectorlab/poly.hpp"

namespace sectorlab {

struct SolverConfig {
  int max_iterations = 200;
  /// Aberth step size, relative to |z|, below which an iterate is frozen.
  double convergence_tol = 1e-13;
  /// Largest accepted |p(z)| / (scale * max(1,|z|)^degree).
  double residual_accept = 1e-9;
  /// Iterates closer than cluster_tol * max(1,|z|) are merged into one multiple zero.
  double cluster_tol = 1e-6;
  /// |Im z| <= real_snap_tol * max(1,|z|) is snapped to the real axis.
  double real_snap_tol = 1e-9;
  double seed_radius_factor = 1.0;

  void validate() const;
};

struct Zero {
  std::complex<double> location;
  int multiplicity = 1;
  double residual = 0.0;
};

/// Distinct zeros with multiplicities; multiplicities sum to source_degree.
struct ZeroSet {
  std::vector<Zero> zeros;
  int source_degree = 0;

  int total_multiplicity() const;
  /// One entry per distinct zero.
  std::vector<std::complex<double>> locations() const;
  /// Each zero repeated according to its multiplicity.
  std::vector<std::complex<double>> expanded() const;
};

/// All zeros by simultaneous Aberth-Ehrlich iteration followed by Newton
/// polishing and multiplicity clustering. Real-coefficient input gets an
/// exactly conjugation-closed result.
///
/// Throws DegreeZero for constants and NonConvergence when some zero still
/// has a residual above cfg.residual_accept.
ZeroSet find_roots(const ComplexPolynomial& p, const SolverConfig& cfg = {});
ZeroSet find_roots(const RealPolynomial& p, const SolverConfig& cfg = {});

template <typename Scalar>
struct OriginDeflation {
  Polynomial<Scalar> quotient;
  int multiplicity;
};

/// p(z) = z^k q(z) with q(0) != 0.
template <typename Scalar>
OriginDeflation<Scalar> deflate_origin(const Polynomial<Scalar>& p) {
  int k = 0;
  while (p[k] == Scalar(0)) ++k;
  return {Polynomial<Scalar>(p.coeffs().tail(p.degree() + 1 - k).eval()), k};
}

/// |p(z)| / (scale * max(1,|z|)^degree), evaluated in extended precision.
double relative_residual(const ComplexPolynomial& p, std::complex<double> z);

/// Worst relative residual over the entries of zs.
double residual_report(const ComplexPolynomial& p, const ZeroSet& zs);

/// Header "re,im,multiplicity,residual" followed by one row per zero.
std::string zeros_to_csv(const ZeroSet& zs);

}  // namespace sectorlab
