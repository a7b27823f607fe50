#include "sectorlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

namespace sectorlab {

namespace {

using Real = long double;
using Complex = std::complex<long double>;

constexpr Real kWorkingEps = std::numeric_limits<Real>::epsilon();
// Coefficients arrive in double precision; inclusion radii must not pretend otherwise.
constexpr Real kInputEps = 2.0L * std::numeric_limits<double>::epsilon();
constexpr int kPolishSteps = 5;
// Overlapping inclusion discs only merge iterates this close (relative to max(1,|z|));
// beyond it the overlap reflects global ill-conditioning, not a multiple zero.
constexpr Real kMaxClusterGap = 1e-3L;
// Irrational fraction of a full turn added to the equispaced seed angles.
constexpr Real kSeedAngleOffset = 0.6180339887498948482L;

struct WorkPoly {
  std::vector<Complex> c;
  std::vector<Real> abs_c;

  explicit WorkPoly(const ComplexPolynomial& p) {
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) {
      c.emplace_back(p[k].real(), p[k].imag());
      abs_c.push_back(std::abs(c.back()));
    }
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }

  Complex value(Complex z) const {
    Complex acc = c.back();
    for (int k = degree() - 1; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
    return acc;
  }

  void value_and_derivative(Complex z, Complex& value, Complex& derivative) const {
    value = c.back();
    derivative = Complex(0);
    for (int k = degree() - 1; k >= 0; --k) {
      derivative = derivative * z + value;
      value = value * z + c[static_cast<std::size_t>(k)];
    }
  }

  /// sum_k |c_k| |z|^k, the scale of rounding errors in value(z).
  Real magnitude(Real modulus) const {
    Real acc = abs_c.back();
    for (int k = degree() - 1; k >= 0; --k) acc = acc * modulus + abs_c[static_cast<std::size_t>(k)];
    return acc;
  }
};

std::vector<Complex> initial_guesses(const WorkPoly& p, Real radius_factor) {
  const int d = p.degree();
  const Real log_radius = (std::log(p.abs_c.front()) - std::log(p.abs_c.back())) / d;
  const Real radius = std::exp(log_radius) * radius_factor;
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const Real angle = 2.0L * std::numbers::pi_v<Real> * (k + kSeedAngleOffset) / d;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }
  return z;
}

/// Gauss-Seidel Aberth-Ehrlich sweeps; converged iterates are frozen.
void aberth(const WorkPoly& p, std::vector<Complex>& z, const SolverConfig& cfg) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      Complex value, derivative;
      p.value_and_derivative(z[i], value, derivative);
      if (std::abs(value) <= 8.0L * kWorkingEps * p.magnitude(std::abs(z[i]))) {
        done[i] = true;
        continue;
      }
      Complex repulsion(0);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i && z[j] != z[i]) repulsion += Real(1) / (z[i] - z[j]);
      }
      const Complex denominator = derivative - value * repulsion;
      if (denominator == Complex(0)) {
        all_done = false;
        continue;
      }
      const Complex step = value / denominator;
      z[i] -= step;
      // Freeze on the Newton correction: the Aberth step alone is tiny for an
      // iterate wedged between neighbours even far from any zero.
      const bool small_step = std::abs(step) <= cfg.convergence_tol * std::abs(z[i]);
      const bool small_newton = derivative != Complex(0) &&
                                std::abs(value / derivative) <= cfg.convergence_tol * std::abs(z[i]);
      if (small_step && small_newton)
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) break;
  }
}

void polish(const WorkPoly& p, Complex& z) {
  Real best = std::abs(p.value(z));
  for (int s = 0; s < kPolishSteps && best > 0; ++s) {
    Complex value, derivative;
    p.value_and_derivative(z, value, derivative);
    if (derivative == Complex(0)) return;
    const Complex candidate = z - value / derivative;
    const Real r = std::abs(p.value(candidate));
    if (!(r < best)) return;
    z = candidate;
    best = r;
  }
}

WorkPoly derivative(const WorkPoly& p, int order) {
  WorkPoly out = p;
  for (int j = 0; j < order; ++j) {
    std::vector<Complex> next;
    for (std::size_t k = 1; k < out.c.size(); ++k) next.push_back(out.c[k] * static_cast<Real>(k));
    out.c = std::move(next);
  }
  out.abs_c.clear();
  for (const auto& ck : out.c) out.abs_c.push_back(std::abs(ck));
  return out;
}

/// An m-fold zero of p is a simple zero of p^(m-1); Newton there, starting at the
/// cluster mean, recovers it to working precision. Steps may not leave the cluster.
Complex refine_multiple(const WorkPoly& p, Complex mean, int multiplicity, Real spread) {
  const WorkPoly d = derivative(p, multiplicity - 1);
  if (d.degree() < 1) return mean;
  Complex z = mean;
  Real best = std::abs(d.value(z));
  for (int s = 0; s < kPolishSteps && best > 0; ++s) {
    Complex value, slope;
    d.value_and_derivative(z, value, slope);
    if (slope == Complex(0)) break;
    const Complex candidate = z - value / slope;
    const Real r = std::abs(d.value(candidate));
    if (!(r < best) || std::abs(candidate - mean) > spread) break;
    z = candidate;
    best = r;
  }
  return z;
}

/// Radius of a disc around z[i] guaranteed (up to input rounding) to hold a zero:
/// d * max(|p(z_i)|, input noise) / (|c_d| prod_{j != i} |z_i - z_j|).
std::vector<Real> inclusion_radii(const WorkPoly& p, const std::vector<Complex>& z) {
  const std::size_t d = z.size();
  std::vector<Real> radii(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Real modulus = std::abs(z[i]);
    const Real value = std::max(std::abs(p.value(z[i])), kInputEps * p.magnitude(modulus));
    Real log_radius = std::log(static_cast<Real>(d)) + std::log(value) - std::log(p.abs_c.back());
    bool coincident = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      const Real gap = std::abs(z[i] - z[j]);
      if (gap == 0) {
        coincident = true;
        break;
      }
      log_radius -= std::log(gap);
    }
    radii[i] = coincident ? std::numeric_limits<Real>::infinity() : std::exp(log_radius);
  }
  return radii;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

/// |p(z)| / sum_k |c_k| |z|^k: the relative coefficient perturbation that makes z exact.
Real backward_error(const WorkPoly& p, Complex z) {
  const Real magnitude = p.magnitude(std::abs(z));
  return magnitude == 0 ? Real(0) : std::abs(p.value(z)) / magnitude;
}

Real relative_residual_ld(const WorkPoly& p, Real scale, Complex z) {
  const Real modulus = std::max(Real(1), std::abs(z));
  const Real denom = scale * std::pow(modulus, static_cast<Real>(p.degree()));
  return std::abs(p.value(z)) / denom;
}

struct Cluster {
  Complex location;
  int multiplicity;
};

/// Merges iterates whose inclusion discs overlap or which sit within
/// cluster_tol of each other, provided the merged mean is still an acceptable
/// zero. Singletons are Newton-polished; a cluster of m iterates is refined
/// from its mean as a simple zero of p^(m-1).
std::vector<Cluster> cluster(const WorkPoly& p, const std::vector<Complex>& z, const SolverConfig& cfg) {
  const std::size_t d = z.size();
  const auto radii = inclusion_radii(p, z);
  DisjointSets sets(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Real gap = std::abs(z[i] - z[j]);
      const Real near = cfg.cluster_tol * std::max({Real(1), std::abs(z[i]), std::abs(z[j])});
      const Real cap = kMaxClusterGap * std::max({Real(1), std::abs(z[i]), std::abs(z[j])});
      if (gap <= near || (gap <= cap && gap <= radii[i] + radii[j])) sets.unite(i, j);
    }
  }

  std::vector<Cluster> out;
  std::vector<std::vector<std::size_t>> members(d);
  for (std::size_t i = 0; i < d; ++i) members[sets.find(i)].push_back(i);
  for (std::size_t root = 0; root < d; ++root) {
    const auto& group = members[root];
    if (group.empty()) continue;
    if (group.size() > 1) {
      Complex mean(0);
      for (std::size_t i : group) mean += z[i];
      mean /= static_cast<Real>(group.size());
      Real spread = 0;
      for (std::size_t i : group) spread = std::max(spread, std::abs(z[i] - mean));
      const int multiplicity = static_cast<int>(group.size());
      const Complex location = refine_multiple(p, mean, multiplicity, spread);
      if (backward_error(p, location) <= cfg.residual_accept) {
        out.push_back({location, multiplicity});
        continue;
      }
    }
    for (std::size_t i : group) {
      Complex zi = z[i];
      polish(p, zi);
      out.push_back({zi, 1});
    }
  }
  return out;
}

void snap_to_real_axis(std::vector<Cluster>& zeros, Real snap_tol) {
  for (auto& zero : zeros) {
    if (std::abs(zero.location.imag()) <= snap_tol * std::max(Real(1), std::abs(zero.location)))
      zero.location = Complex(zero.location.real(), 0);
  }
}

/// Pairs each upper-half-plane zero with its nearest mirrored partner and
/// replaces both by the averaged conjugate pair. Unpaired leftovers go to the axis.
void enforce_conjugate_symmetry(std::vector<Cluster>& zeros) {
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (zeros[i].location.imag() > 0) upper.push_back(i);
    if (zeros[i].location.imag() < 0) lower.push_back(i);
  }
  std::vector<bool> used(zeros.size(), false);
  for (std::size_t u : upper) {
    std::size_t best = zeros.size();
    Real best_gap = std::numeric_limits<Real>::infinity();
    for (std::size_t l : lower) {
      if (used[l]) continue;
      const Real gap = std::abs(zeros[u].location - std::conj(zeros[l].location));
      if (gap < best_gap) {
        best_gap = gap;
        best = l;
      }
    }
    if (best == zeros.size()) continue;
    used[u] = used[best] = true;
    const Complex w = (zeros[u].location + std::conj(zeros[best].location)) / Real(2);
    zeros[u].location = w;
    zeros[best].location = std::conj(w);
  }
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!used[i] && zeros[i].location.imag() != 0) zeros[i].location = Complex(zeros[i].location.real(), 0);
  }
}

ZeroSet solve(const ComplexPolynomial& p, const SolverConfig& cfg, bool real_input) {
  cfg.validate();
  if (p.degree() < 1) throw Error(ErrorKind::DegreeZero, "a constant polynomial has no zeros");

  const WorkPoly full(p);
  const auto [quotient, origin] = deflate_origin(p);

  std::vector<Cluster> zeros;
  if (quotient.degree() >= 1) {
    const WorkPoly q(quotient);
    auto z = initial_guesses(q, cfg.seed_radius_factor);
    aberth(q, z, cfg);
    zeros = cluster(q, z, cfg);
    snap_to_real_axis(zeros, cfg.real_snap_tol);
    if (real_input) enforce_conjugate_symmetry(zeros);
  }

  ZeroSet out;
  out.source_degree = p.degree();
  if (origin > 0) out.zeros.push_back({{0.0, 0.0}, origin, 0.0});
  for (const auto& zero : zeros) {
    const std::complex<double> location(static_cast<double>(zero.location.real()),
                                        static_cast<double>(zero.location.imag()));
    out.zeros.push_back({location, zero.multiplicity, 0.0});
  }
  Real worst_backward = 0;
  Complex worst_location;
  for (auto& zero : out.zeros) {
    zero.residual = relative_residual(p, zero.location);
    const Complex location(zero.location.real(), zero.location.imag());
    const Real error = backward_error(full, location);
    if (!(error <= worst_backward)) {
      worst_backward = error;
      worst_location = location;
    }
  }
  if (!(worst_backward <= cfg.residual_accept)) {
    char msg[192];
    std::snprintf(msg, sizeof msg, "zero %.17Lg%+.17Lgi has backward error %.3Lg > %.3g", worst_location.real(),
                  worst_location.imag(), worst_backward, cfg.residual_accept);
    throw Error(ErrorKind::NonConvergence, msg);
  }

  std::sort(out.zeros.begin(), out.zeros.end(), [](const Zero& a, const Zero& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() > b.location.imag();
  });

  const auto worst = std::max_element(out.zeros.begin(), out.zeros.end(),
                                      [](const Zero& a, const Zero& b) { return a.residual < b.residual; });
  if (worst != out.zeros.end() && !(worst->residual <= cfg.residual_accept)) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "zero %.17g%+.17gi has relative residual %.3g > %.3g", worst->location.real(),
                  worst->location.imag(), worst->residual, cfg.residual_accept);
    throw Error(ErrorKind::NonConvergence, msg);
  }
  return out;
}

}  // namespace

void SolverConfig::validate() const {
  if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max_iterations must be at least 1");
  for (double tol : {convergence_tol, residual_accept, cluster_tol, real_snap_tol, seed_radius_factor}) {
    if (!(tol > 0.0) || !std::isfinite(tol))
      throw Error(ErrorKind::InvalidArgument, "solver tolerances must be positive and finite");
  }
}

int ZeroSet::total_multiplicity() const {
  int total = 0;
  for (const auto& zero : zeros) total += zero.multiplicity;
  return total;
}

std::vector<std::complex<double>> ZeroSet::locations() const {
  std::vector<std::complex<double>> out;
  out.reserve(zeros.size());
  for (const auto& zero : zeros) out.push_back(zero.location);
  return out;
}

std::vector<std::complex<double>> ZeroSet::expanded() const {
  std::vector<std::complex<double>> out;
  for (const auto& zero : zeros) out.insert(out.end(), static_cast<std::size_t>(zero.multiplicity), zero.location);
  return out;
}

ZeroSet find_roots(const ComplexPolynomial& p, const SolverConfig& cfg) {
  if (has_real_coefficients(p)) return solve(p, cfg, true);
  // A common complex factor times a real polynomial: solve the real one, whose
  // zeros come out exactly conjugate-symmetric.
  Eigen::Index largest = 0;
  p.coeffs().cwiseAbs().maxCoeff(&largest);
  const std::complex<double> phase = p.coeffs()[largest] / std::abs(p.coeffs()[largest]);
  const ComplexPolynomial::Coeffs rotated = p.coeffs() / phase;
  if (rotated.imag().cwiseAbs().maxCoeff() <= 8.0 * std::numeric_limits<double>::epsilon() * p.scale()) {
    const ComplexPolynomial::Coeffs real = rotated.real().cast<std::complex<double>>();
    return solve(ComplexPolynomial(real), cfg, true);
  }
  return solve(p, cfg, false);
}

ZeroSet find_roots(const RealPolynomial& p, const SolverConfig& cfg) { return solve(to_complex(p), cfg, true); }

double relative_residual(const ComplexPolynomial& p, std::complex<double> z) {
  const WorkPoly work(p);
  return static_cast<double>(relative_residual_ld(work, p.scale(), Complex(z.real(), z.imag())));
}

double residual_report(const ComplexPolynomial& p, const ZeroSet& zs) {
  double worst = 0.0;
  for (const auto& zero : zs.zeros) worst = std::max(worst, relative_residual(p, zero.location));
  return worst;
}

std::string zeros_to_csv(const ZeroSet& zs) {
  std::string out = "re,im,multiplicity,residual\n";
  char line[128];
  for (const auto& zero : zs.zeros) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%d,%.6g\n", zero.location.real(), zero.location.imag(),
                  zero.multiplicity, zero.residual);
    out += line;
  }
  return out;
}

}  // namespace sectorlab
