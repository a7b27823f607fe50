#include "sectorlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace sectorlab {

namespace {

constexpr double kPi = std::numbers::pi;

// cos^2(alpha) - cos^2(theta) as a product of sines, exact near the emptiness boundary.
double cos_squared_gap(double alpha, double theta) {
  const double difference = -2.0 * std::sin(0.5 * (alpha + theta)) * std::sin(0.5 * (alpha - theta));
  return difference * (std::cos(alpha) + std::cos(theta));
}

void require_nonempty(std::span<const std::complex<double>> points, const char* what) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " of an empty point set");
}

}  // namespace

Sector::Sector(double half_angle) : half_angle_(half_angle) {
  if (!(half_angle >= 0.0 && half_angle < kPi / 2))
    throw Error(ErrorKind::InvalidArgument, "sector half-angle must lie in [0, pi/2)");
}

Strip::Strip(double half_width) : half_width_(half_width) {
  if (!(half_width >= 0.0) || !std::isfinite(half_width))
    throw Error(ErrorKind::InvalidArgument, "strip half-width must be nonnegative");
}

double reference_angle(double alpha) {
  double reduced = std::remainder(alpha, 2.0 * kPi);  // [-pi, pi]
  return std::abs(reduced);
}

SectorDisc jensen_sector_disc(double a, double b, double alpha) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::NonpositiveRootPart, "Jensen sector-disc needs a > 0 and b > 0");
  const double ref = reference_angle(alpha);
  const double theta = std::atan2(b, a);
  const double gap = cos_squared_gap(ref, theta);
  // |sec alpha| >= sec theta  <=>  cos^2 alpha <= cos^2 theta
  if (!(gap > 0.0)) return SectorDisc::none();
  const double modulus2 = a * a + b * b;
  const double modulus = std::sqrt(modulus2);
  const double cos_theta = a / modulus;
  SectorDisc disc;
  disc.center = std::cos(ref) * modulus2 / a;
  disc.radius = modulus * std::sqrt(gap) / cos_theta;
  disc.empty = false;
  return disc;
}

Tangency disc_tangency_data(const SectorDisc& disc, double a, double b, double alpha) {
  if (disc.empty) throw Error(ErrorKind::EmptyDisc, "tangency data of an empty Jensen sector-disc");
  const double ref = reference_angle(alpha);
  const double theta = std::atan2(b, a);
  const double modulus = std::hypot(a, b);
  const double cos_alpha = std::cos(ref);
  // cos gamma = cos theta sec alpha; sin gamma from the stable gap.
  const double cos_gamma = std::cos(theta) / cos_alpha;
  const double sin_gamma = std::sqrt(std::max(0.0, cos_squared_gap(ref, theta))) / std::abs(cos_alpha);
  const double gamma = std::atan2(sin_gamma, cos_gamma);

  const double distance_to_ray = std::abs(disc.center) * sin_gamma;
  if (std::abs(distance_to_ray - disc.radius) > 1e-12 * std::max(disc.radius, std::abs(disc.center))) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "disc is not tangent to arg z = %.17g (distance %.17g, radius %.17g)", gamma,
                  distance_to_ray, disc.radius);
    throw Error(ErrorKind::DomainError, msg);
  }
  return {gamma, modulus};
}

double principal_arg(std::complex<double> z) {
  const double arg = std::arg(z);
  return arg == -kPi ? kPi : arg;
}

bool in_sector(std::complex<double> z, const Sector& s, double tol) {
  if (z == std::complex<double>(0.0)) return true;
  return std::abs(principal_arg(z)) <= s.half_angle() + tol;
}

bool in_double_sector(std::complex<double> z, const Sector& s, double tol) {
  return in_sector(z, s, tol) || in_sector(-z, s, tol);
}

bool in_strip(std::complex<double> z, const Strip& s, double tol) {
  return std::abs(z.imag()) <= s.half_width() + tol;
}

bool in_disc(std::complex<double> z, const SectorDisc& d, double tol) {
  if (d.empty) return false;
  return std::abs(z - d.center) <= d.radius + tol * std::max(1.0, std::abs(z));
}

double min_enclosing_sector(std::span<const std::complex<double>> points) {
  require_nonempty(points, "enclosing sector");
  double theta = 0.0;
  for (auto z : points) {
    if (z == std::complex<double>(0.0)) continue;
    const double arg = std::abs(principal_arg(z));
    if (arg >= kPi / 2) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "zero %.17g%+.17gi has |arg| = %.17g >= pi/2", z.real(), z.imag(), arg);
      throw Error(ErrorKind::NotInRightHalfPlane, msg);
    }
    theta = std::max(theta, arg);
  }
  return theta;
}

double min_enclosing_sector(const ZeroSet& zs) {
  const auto points = zs.locations();
  return min_enclosing_sector(points);
}

double min_enclosing_double_sector(std::span<const std::complex<double>> points) {
  if (points.empty()) throw Error(ErrorKind::OffAxis, "enclosing double sector of an empty point set");
  double theta = 0.0;
  for (auto z : points) {
    if (z == std::complex<double>(0.0)) continue;
    const double arg = std::abs(principal_arg(z));
    theta = std::max(theta, std::min(arg, kPi - arg));
  }
  return theta;
}

double min_enclosing_double_sector(const ZeroSet& zs) {
  const auto points = zs.locations();
  return min_enclosing_double_sector(points);
}

double min_enclosing_strip(std::span<const std::complex<double>> points) {
  require_nonempty(points, "enclosing strip");
  double width = 0.0;
  for (auto z : points) width = std::max(width, std::abs(z.imag()));
  return width;
}

}  // namespace sectorlab
