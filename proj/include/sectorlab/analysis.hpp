#pragma once

#include <json.hpp>

#include <array>
#include <chrono>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sectorlab/operators.hpp"
#include "sectorlab/poly.hpp"
#include "sectorlab/roots.hpp"

namespace sectorlab {

enum class TailTrend { IncreasingTowardOne, BoundedAway, Constant, Other };
enum class RnVerdict { FailsNecessaryCondition, Inconclusive };

std::string_view to_string(TailTrend trend);
std::string_view to_string(RnVerdict verdict);

struct RnProfile {
  std::vector<double> values;  // r_0 .. r_{window-1}
  int window = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  /// Heuristic label for the last window/2 values: only a finite window is seen,
  /// so nothing here is a statement about the limsup.
  TailTrend tail_trend = TailTrend::Other;

  /// FailsNecessaryCondition when some r_n >= 1 or the tail climbs towards 1.
  RnVerdict verdict() const;
};

/// r_n for n = 0 .. window-1. Explicit sequences clamp the window to the terms
/// available; fewer than 3 usable indices is an InvalidArgument.
/// Throws ZeroInteriorTerm when some gamma_{n+1} vanishes.
RnProfile rn_profile(const MultiplierSequence& ms, int window = 40);

struct ThreeTermRoots {
  std::array<std::complex<double>, 2> roots;
  /// NaN when gamma_{n+1} = 0.
  double rn;
};

/// Nonzero zeros of T[x^{n+2} - b x^{n+1} + c x^n], i.e. of
/// gamma_{n+2} x^2 - gamma_{n+1} b x + gamma_n c. Larger modulus first.
/// Throws DegenerateLeading when gamma_{n+2} = 0.
ThreeTermRoots three_term_transformed_roots(int n, double b, double c, const MultiplierSequence& ms);

/// a(a^2 + b^2 + x^2 + y^2) - 2x(a^2 + b^2) cos(alpha): negative exactly inside the Jensen sector-disc.
double jsd_bracket(double a, double b, double alpha, std::complex<double> z);

/// Relative mismatch between |(e^{ia}z - a)^2 + b^2|^2 - |(e^{-ia}z - a)^2 + b^2|^2
/// and 8 y sin(alpha) * jsd_bracket, both evaluated directly.
double jsd_modulus_identity_check(double a, double b, double alpha, std::complex<double> z);

struct DoubleSectorDemo {
  double before;
  double after;
  ZeroSet after_zeros;
};

/// Measures 4 + z^4 and 4 gamma_0 + gamma_4 z^4 in the double sector.
/// Throws DegenerateSequence if gamma_0 or gamma_4 vanishes, SignFlip if they differ in sign.
DoubleSectorDemo double_sector_demo(const MultiplierSequence& ms, const SolverConfig& cfg = {});

struct PolyGenSpec {
  int min_degree = 2;
  int max_degree = 16;
  /// Conjugate pairs get arg uniform in [0, theta].
  double theta = 0.785398163397448;
  /// Draw a fresh theta uniformly from [0, theta] for every polynomial.
  bool randomize_theta = false;
  double m_lo = 0.1;
  double m_hi = 10.0;
  /// Probability that the next zero placed is real rather than half of a pair.
  double real_fraction = 0.3;

  void validate() const;
};

/// Deterministic stream for one trial of a campaign.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
/// 53-bit uniform in [0, 1), independent of the standard library's distributions.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

struct GeneratedPoly {
  SectorRootSpec roots;
  double theta;  // placement angle actually used
  RealPolynomial poly;
};

GeneratedPoly generate_polynomial(const PolyGenSpec& gen, std::mt19937_64& rng);

enum class TheoremId { Jsd, JsdQuadratic, Zsro, CosStep, Lms2, PeriodStrip, Roms, DoubleSector, SecondKind, Search };

std::string_view to_string(TheoremId id);
/// "jsd", "jsd-quadratic", "zsro", "cosstep", "lms2", "strip", "roms", "double-sector", "second-kind".
TheoremId parse_theorem_id(std::string_view name);

/// Operator parameters of a campaign. Unset values are drawn per trial.
struct CampaignParams {
  std::optional<double> alpha;
  std::optional<double> lambda;
  std::optional<double> beta;
  /// Angle of cos(lambda + k theta) for lms2.
  std::optional<double> theta;
  std::optional<int> N;
  /// Sequence for roms, double-sector and second-kind.
  std::optional<MultiplierSequence> op;
  SolverConfig solver;
  /// Replaces the theorem's default margin tolerance.
  std::optional<double> tolerance;
  /// 0 picks the hardware concurrency.
  int threads = 0;
};

struct Counterexample {
  std::uint64_t trial;
  RealPolynomial poly;
  nlohmann::json parameters;
  std::complex<double> zero;
  double margin;
};

/// Result of one sequence on the search grid.
struct SequenceProbe {
  std::string spec;
  RnProfile profile;
  /// Sector growth margin over the sampled polynomials (negative = grew).
  std::optional<double> worst_margin;
  int non_reducing = 0;
  /// Angle of the three-term probe at n = window - 1, before and after.
  std::optional<double> three_term_before;
  std::optional<double> three_term_after;
};

struct VerificationReport {
  TheoremId theorem_id = TheoremId::Jsd;
  int trials = 0;
  std::uint64_t seed = 0;
  /// A counterexample is recorded exactly when worst_margin < -tolerance.
  double tolerance = 0.0;
  /// Most violated slack over all measurements; empty if nothing was measured.
  std::optional<double> worst_margin;
  std::optional<Counterexample> counterexample;
  int measured = 0;
  /// Trials where the solver did not converge.
  int skipped = 0;
  /// Trials whose input or transform left the theorem's hypotheses (zero transform,
  /// rounded input outside the half-plane).
  int degenerate = 0;
  std::vector<std::string> skip_messages;
  nlohmann::json parameters;
  std::vector<SequenceProbe> probes;
  std::chrono::duration<double> elapsed{0.0};
};

/// Runs `trials` independent trials; the report does not depend on thread count.
/// Throws HypothesisViolation for fixed parameters the theorem excludes.
VerificationReport verify_theorem(TheoremId id, const PolyGenSpec& gen, const CampaignParams& params, int trials,
                                  std::uint64_t seed);

/// Sector growth hunt for ExpPower / Explicit candidates, plus r_n profiles and
/// a three-term probe per candidate. Other families are an InvalidArgument.
VerificationReport search_counterexample(const std::vector<MultiplierSequence>& candidates, const PolyGenSpec& gen,
                                         int trials, std::uint64_t seed, const SolverConfig& solver = {});

/// Elapsed time is left out so identical campaigns serialize identically.
nlohmann::json report_to_json(const VerificationReport& report);

struct StripBoundComparison {
  int points = 0;
  int violations = 0;
  double worst_gap = 0.0;  // min of A* - A'
};

/// A* >= A' on the grid A = 0.05..1.50, alpha = 0.1..1.0.
StripBoundComparison compare_strip_bounds();

}  // namespace sectorlab
