#pragma once

#include <complex>
#include <span>

#include "sectorlab/roots.hpp"

namespace sectorlab {

/// Default angular slack, in radians, for sector membership.
inline constexpr double kDefaultAngleTol = 1e-9;

/// Closed sector S(theta) = {z : |arg z| <= theta} with the origin, 0 <= theta < pi/2.
class Sector {
 public:
  explicit Sector(double half_angle);
  double half_angle() const { return half_angle_; }

 private:
  double half_angle_;
};

/// Closed horizontal strip {z : |Im z| <= A}.
class Strip {
 public:
  explicit Strip(double half_width);
  double half_width() const { return half_width_; }

 private:
  double half_width_;
};

/// Jensen sector-disc for a zero a + ib and rotation angle alpha.
///
/// Center c = cos(alpha) (a^2 + b^2) / a on the real axis, radius sqrt(c^2 - a^2 - b^2).
/// The center is negative when the reference angle exceeds pi/2; the disc is
/// then the mirror image of the one for pi - alpha. Empty discs are a tagged
/// state with center and radius zero.
struct SectorDisc {
  double center = 0.0;
  double radius = 0.0;
  bool empty = true;

  static SectorDisc none() { return {}; }
};

/// Reduces alpha modulo 2 pi into (-pi, pi] and folds it onto [0, pi].
double reference_angle(double alpha);

/// Throws NonpositiveRootPart unless a > 0 and b > 0.
SectorDisc jensen_sector_disc(double a, double b, double alpha);

struct Tangency {
  /// The disc touches the rays arg z = +-gamma.
  double gamma;
  /// The touching points lie on |z| = |a + ib|.
  double modulus;
};

/// Throws EmptyDisc for an empty disc.
Tangency disc_tangency_data(const SectorDisc& disc, double a, double b, double alpha);

/// Principal argument in (-pi, pi].
double principal_arg(std::complex<double> z);

bool in_sector(std::complex<double> z, const Sector& s, double tol = kDefaultAngleTol);
bool in_double_sector(std::complex<double> z, const Sector& s, double tol = kDefaultAngleTol);
bool in_strip(std::complex<double> z, const Strip& s, double tol = 0.0);
/// |z - c| <= r + tol * max(1, |z|); always false for an empty disc.
bool in_disc(std::complex<double> z, const SectorDisc& d, double tol = 0.0);

/// max |arg z| over the nonzero points. Throws NotInRightHalfPlane when that
/// reaches pi/2, naming the offending point.
double min_enclosing_sector(std::span<const std::complex<double>> points);
double min_enclosing_sector(const ZeroSet& zs);

/// max over nonzero points of min(|arg z|, |arg(-z)|), always in [0, pi/2].
double min_enclosing_double_sector(std::span<const std::complex<double>> points);
double min_enclosing_double_sector(const ZeroSet& zs);

/// max |Im z|.
double min_enclosing_strip(std::span<const std::complex<double>> points);

}  // namespace sectorlab
