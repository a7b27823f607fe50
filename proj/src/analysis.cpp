#include "sectorlab/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "sectorlab/geometry.hpp"
#include "sectorlab/poly_json.hpp"

namespace sectorlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxSkipMessages = 5;

// Tolerances of the individual checks; see the acceptance criteria of each theorem.
constexpr double kDiscTol = 1e-8;
constexpr double kAngleTol = 1e-7;
constexpr double kRealTol = 1e-9;
constexpr double kDoubleSectorTol = 1e-12;
constexpr double kFlatTol = 1e-12;

bool is_zero(std::complex<double> z) { return z == std::complex<double>(0.0); }

struct AngleProbe {
  double angle = 0.0;
  std::complex<double> zero{};
};

/// max |arg z| over nonzero zeros, up to pi for negative reals.
AngleProbe max_abs_arg(const ZeroSet& zs) {
  AngleProbe out;
  for (const auto& zero : zs.zeros) {
    if (is_zero(zero.location)) continue;
    const double arg = std::abs(principal_arg(zero.location));
    if (arg > out.angle || is_zero(out.zero)) {
      out.angle = std::max(out.angle, arg);
      out.zero = zero.location;
    }
  }
  return out;
}

double modulus_scale(std::complex<double> z) { return std::max(1.0, std::abs(z)); }

nlohmann::json complex_json(std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json("random");
}

// ---- campaign engine -------------------------------------------------------

struct TrialOutcome {
  enum class Status { NotMeasured, Measured, Skipped, Degenerate };
  Status status = Status::NotMeasured;
  double margin = kInf;
  std::complex<double> zero{};
  std::optional<RealPolynomial> poly;
  nlohmann::json parameters = nlohmann::json::object();
  std::string message;

  /// Keeps the smaller of the current and the given slack.
  void record(double m, std::complex<double> z) {
    status = Status::Measured;
    m += 0.0;  // no -0 in reports
    if (m < margin) {
      margin = m;
      zero = z;
    }
  }
};

using TrialFn = std::function<TrialOutcome(std::uint64_t)>;

TrialOutcome guarded(const TrialFn& fn, std::uint64_t trial) {
  try {
    return fn(trial);
  } catch (const Error& e) {
    TrialOutcome out;
    switch (e.kind()) {
      case ErrorKind::NonConvergence:
        out.status = TrialOutcome::Status::Skipped;
        break;
      case ErrorKind::ZeroPolynomialResult:
      case ErrorKind::DegenerateSequence:
      case ErrorKind::SignFlip:
      case ErrorKind::NotInRightHalfPlane:
        out.status = TrialOutcome::Status::Degenerate;
        break;
      default:
        throw;
    }
    out.message = e.what();
    return out;
  }
}

std::vector<TrialOutcome> run_trials(int trials, int threads, const TrialFn& fn) {
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, trials));
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) out[static_cast<std::size_t>(t)] = guarded(fn, static_cast<std::uint64_t>(t));
    return out;
  }

  std::atomic<int> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  int failure_trial = trials;
  auto work = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        out[static_cast<std::size_t>(t)] = guarded(fn, static_cast<std::uint64_t>(t));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (t < failure_trial) {
          failure_trial = t;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Folds trial outcomes in trial order, so ties resolve to the earliest trial.
void merge(VerificationReport& report, const std::vector<TrialOutcome>& outcomes, std::uint64_t trial_offset = 0) {
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const auto& o = outcomes[t];
    const std::uint64_t trial = trial_offset + t;
    using S = TrialOutcome::Status;
    if (o.status == S::Skipped || o.status == S::Degenerate) {
      (o.status == S::Skipped ? report.skipped : report.degenerate)++;
      if (report.skip_messages.size() < kMaxSkipMessages)
        report.skip_messages.push_back("trial " + std::to_string(trial) + ": " + o.message);
      continue;
    }
    if (o.status != S::Measured) continue;
    report.measured++;
    if (!report.worst_margin || o.margin < *report.worst_margin) {
      report.worst_margin = o.margin;
      if (o.margin < -report.tolerance && o.poly) {
        report.counterexample = Counterexample{trial, *o.poly, o.parameters, o.zero, o.margin};
      }
    }
  }
}

/// Zeros of a generated input, rejected if rounding pushed one out of the half-plane.
ZeroSet input_zeros(const RealPolynomial& p, const SolverConfig& cfg, double& theta_p) {
  auto zs = find_roots(p, cfg);
  const auto probe = max_abs_arg(zs);
  if (!(probe.angle < kPi / 2)) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "rounded input has zero %.17g%+.17gi outside the open right half-plane",
                  probe.zero.real(), probe.zero.imag());
    throw Error(ErrorKind::NotInRightHalfPlane, msg);
  }
  theta_p = probe.angle;
  return zs;
}

double draw_or(const std::optional<double>& fixed, std::mt19937_64& rng, double lo, double hi) {
  const double drawn = uniform(rng, lo, hi);
  return fixed ? *fixed : drawn;
}

nlohmann::json gen_json(const PolyGenSpec& gen) {
  return {{"degree", {gen.min_degree, gen.max_degree}},
          {"theta", gen.theta},
          {"randomize_theta", gen.randomize_theta},
          {"magnitude", {gen.m_lo, gen.m_hi}},
          {"real_fraction", gen.real_fraction}};
}

// ---- per-theorem trials ------------------------------------------------------

struct Campaign {
  PolyGenSpec gen;
  CampaignParams params;
  std::uint64_t seed;
};

TrialOutcome jsd_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  auto g = generate_polynomial(c.gen, rng);
  const double alpha = draw_or(c.params.alpha, rng, 0.0, kPi);
  const double lambda = draw_or(c.params.lambda, rng, 0.0, 2 * kPi);
  const double beta = draw_or(c.params.beta, rng, 0.0, 2 * kPi);

  TrialOutcome out;
  out.parameters = {{"alpha", alpha}, {"lambda", lambda}, {"beta", beta}, {"placement_theta", g.theta}};
  double theta_p = 0.0;
  const auto zp = input_zeros(g.poly, c.params.solver, theta_p);
  std::vector<SectorDisc> discs;
  for (const auto& zero : zp.zeros) {
    if (zero.location.imag() <= 0.0) continue;
    const auto disc = jensen_sector_disc(zero.location.real(), zero.location.imag(), alpha);
    if (!disc.empty) discs.push_back(disc);
  }
  const auto blend = rotation_blend(g.poly, {alpha, lambda, beta});
  out.poly = g.poly;
  const auto zf = find_roots(blend.real_factor, c.params.solver);
  for (const auto& zero : zf.zeros) {
    const auto z = zero.location;
    if (z.imag() == 0.0) continue;
    const double s = modulus_scale(z);
    // The real axis is allowed too; a nonreal zero this close to it is rounding.
    double slack = -std::abs(z.imag()) / s;
    for (const auto& d : discs) slack = std::max(slack, (d.radius - std::abs(z - d.center)) / s);
    out.record(slack, z);
  }
  return out;
}

TrialOutcome jsd_quadratic_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  const double u_theta = uniform01(rng);
  const double u_alpha = uniform01(rng);
  const double log_modulus = uniform(rng, std::log(c.gen.m_lo), std::log(c.gen.m_hi));
  const double lambda = draw_or(c.params.lambda, rng, 0.0, 2 * kPi);
  const double beta = draw_or(c.params.beta, rng, 0.0, 2 * kPi);

  // Nonempty disc: the reference angle lies below theta_k (or above pi - theta_k).
  double theta_k, alpha;
  if (c.params.alpha) {
    alpha = *c.params.alpha;
    const double ref = reference_angle(alpha);
    const double floor = std::min(ref, kPi - ref);
    theta_k = floor + (kPi / 2 - floor) * (0.01 + 0.98 * u_theta);
  } else {
    theta_k = kPi / 2 * (0.01 + 0.98 * u_theta);
    alpha = theta_k * u_alpha;
  }
  const double modulus = std::exp(log_modulus);
  const double a = modulus * std::cos(theta_k);
  const double b = modulus * std::sin(theta_k);

  TrialOutcome out;
  out.parameters = {{"alpha", alpha}, {"lambda", lambda}, {"beta", beta}, {"a", a}, {"b", b}};
  const RealPolynomial p{a * a + b * b, -2.0 * a, 1.0};
  out.poly = p;
  const auto disc = jensen_sector_disc(a, b, alpha);
  if (disc.empty) {
    out.status = TrialOutcome::Status::Degenerate;
    out.message = "Jensen sector-disc is empty";
    return out;
  }
  const auto blend = rotation_blend(p, {alpha, lambda, beta});
  const auto zf = find_roots(blend.real_factor, c.params.solver);
  for (const auto& zero : zf.zeros) {
    if (zero.location.imag() == 0.0) continue;
    out.record(-std::abs(std::abs(zero.location - disc.center) - disc.radius) / disc.radius, zero.location);
  }
  return out;
}

/// Shared by the sector theorems: measured theta_p, operator, measured angle after.
template <class Predict, class Operator>
TrialOutcome sector_trial(const Campaign& c, TrialOutcome out, const GeneratedPoly& g,
                          Operator&& apply, Predict&& predict) {
  double theta_p = 0.0;
  input_zeros(g.poly, c.params.solver, theta_p);
  out.poly = g.poly;
  out.parameters["placement_theta"] = g.theta;
  out.parameters["measured_theta"] = theta_p;
  const RealPolynomial q = apply(g.poly);
  const auto probe = max_abs_arg(find_roots(q, c.params.solver));
  out.record(predict(theta_p) - probe.angle, probe.zero);
  return out;
}

TrialOutcome zsro_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  const auto g = generate_polynomial(c.gen, rng);
  const double alpha = draw_or(c.params.alpha, rng, 0.0, 1.0);
  TrialOutcome out;
  out.parameters = {{"alpha", alpha}};
  return sector_trial(
      c, std::move(out), g,
      [&](const RealPolynomial& p) { return apply_sequence(p, MultiplierSequence(Gauss{alpha})).poly; },
      [&](double theta) { return predicted_sector_after_gauss(theta, alpha); });
}

int cosine_step_N(double alpha, int degree) {
  return static_cast<int>(std::floor(2.0 * std::abs(alpha) * degree / kPi)) + 1;
}

TrialOutcome cosstep_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  const auto g = generate_polynomial(c.gen, rng);
  const double u = uniform01(rng);
  const int n = g.poly.degree();
  double alpha;
  int N;
  if (c.params.N) {
    N = *c.params.N;
    alpha = c.params.alpha ? *c.params.alpha : u * std::min(kPi / 2, kPi / 2 * N / n);
  } else {
    alpha = c.params.alpha ? *c.params.alpha : u * kPi / 2;
    N = cosine_step_N(alpha, n);
  }
  TrialOutcome out;
  out.parameters = {{"alpha", alpha}, {"N", N}};
  return sector_trial(
      c, std::move(out), g,
      [&](const RealPolynomial& p) { return apply_sequence(p, MultiplierSequence(CosineStep{alpha, N})).poly; },
      [&](double theta) { return predicted_sector_after_cosine_step(theta, alpha, N); });
}

TrialOutcome lms2_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  PolyGenSpec gen = c.gen;
  gen.real_fraction = 1.0;
  const auto g = generate_polynomial(gen, rng);
  const double lambda = draw_or(c.params.lambda, rng, 0.0, 2 * kPi);
  const double theta = draw_or(c.params.theta, rng, 0.0, 2 * kPi);
  TrialOutcome out;
  out.parameters = {{"lambda", lambda}, {"theta", theta}};
  out.poly = g.poly;
  const auto zp = find_roots(g.poly, c.params.solver);
  for (const auto& zero : zp.zeros) {
    if (zero.location.imag() != 0.0 || !(zero.location.real() > 0.0))
      throw Error(ErrorKind::NotInRightHalfPlane, "rounded input lost a positive real zero");
  }
  const auto q = cosine_affine_transform(g.poly, lambda, theta);
  for (const auto& zero : find_roots(q, c.params.solver).zeros)
    out.record(-std::abs(zero.location.imag()) / modulus_scale(zero.location), zero.location);
  return out;
}

TrialOutcome strip_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  const auto g = generate_polynomial(c.gen, rng);
  const double alpha = draw_or(c.params.alpha, rng, 0.0, 1.0);
  TrialOutcome out;
  out.parameters = {{"alpha", alpha}, {"placement_theta", g.theta}};
  out.poly = g.poly;
  // Principal strip half-width of p(e^z): max |Im log z_k|.
  double A = 0.0;
  for (const auto& w : exp_poly_principal_zeros(g.poly, c.params.solver)) A = std::max(A, std::abs(w.imag()));
  out.parameters["measured_A"] = A;
  const auto q = apply_sequence(g.poly, MultiplierSequence(Gauss{alpha})).poly;
  const double bound = predicted_strip_after_gauss(A, alpha);
  try {
    for (const auto& w : exp_poly_principal_zeros(q, c.params.solver))
      out.record(bound - std::abs(w.imag()), std::exp(w));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroOutsideRightHalfPlane) throw;
    const auto probe = max_abs_arg(find_roots(q, c.params.solver));
    out.record(bound - probe.angle, probe.zero);
  }
  return out;
}

RealPolynomial one_minus_z_power(int n) {
  RealPolynomial::Coeffs c(n + 1);
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    c[k] = (k % 2 == 0 ? 1.0 : -1.0) * binom;
    binom = binom * (n - k) / (k + 1);
  }
  return RealPolynomial(std::move(c));
}

TrialOutcome roms_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  const int span = c.gen.max_degree - c.gen.min_degree + 1;
  const int n = c.gen.min_degree + std::min(span - 1, static_cast<int>(uniform01(rng) * span));
  const MultiplierSequence ms = c.params.op ? *c.params.op : MultiplierSequence(LaguerreQ{0.5});
  TrialOutcome out;
  out.parameters = {{"n", n}, {"op", ms.to_spec()}};
  const auto p = one_minus_z_power(n);
  out.poly = p;
  const auto q = apply_sequence(p, ms).poly;
  for (const auto& zero : find_roots(q, c.params.solver).zeros) {
    if (is_zero(zero.location)) continue;
    out.record(-std::abs(principal_arg(zero.location)), zero.location);
  }
  return out;
}

MultiplierSequence random_positive_explicit(std::mt19937_64& rng) {
  std::vector<double> values(5);
  for (auto& v : values) v = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
  return MultiplierSequence(Explicit{std::move(values)});
}

TrialOutcome double_sector_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  const MultiplierSequence ms = c.params.op ? *c.params.op : random_positive_explicit(rng);
  TrialOutcome out;
  out.parameters = {{"op", ms.to_spec()}};
  out.poly = RealPolynomial{4.0, 0.0, 0.0, 0.0, 1.0};
  const auto demo = double_sector_demo(ms, c.params.solver);
  out.parameters["before"] = demo.before;
  out.parameters["after"] = demo.after;
  std::complex<double> first = demo.after_zeros.zeros.empty() ? 0.0 : demo.after_zeros.zeros.front().location;
  out.record(demo.after - demo.before, first);
  return out;
}

TrialOutcome second_kind_trial(const Campaign& c, std::uint64_t t) {
  auto rng = trial_rng(c.seed, t);
  const auto g = generate_polynomial(c.gen, rng);
  const double lambda = uniform(rng, 0.0, 2 * kPi);
  const double theta = uniform(rng, 0.0, 2 * kPi);
  const MultiplierSequence ms = c.params.op ? *c.params.op : MultiplierSequence(CosineAffine{lambda, theta});
  TrialOutcome out;
  out.parameters = {{"op", ms.to_spec()}, {"placement_theta", g.theta}};
  out.poly = g.poly;
  double theta_p = 0.0;
  input_zeros(g.poly, c.params.solver, theta_p);
  out.parameters["measured_theta"] = theta_p;
  const auto zq = find_roots(apply_sequence(g.poly, ms).poly, c.params.solver);
  for (const auto& zero : zq.zeros) {
    if (is_zero(zero.location)) continue;
    const double arg = std::abs(principal_arg(zero.location));
    out.record(theta_p - std::min(arg, kPi - arg), zero.location);
  }
  return out;
}

double default_tolerance(TheoremId id) {
  switch (id) {
    case TheoremId::Jsd:
    case TheoremId::JsdQuadratic:
      return kDiscTol;
    case TheoremId::Lms2:
    case TheoremId::Roms:
      return kRealTol;
    case TheoremId::DoubleSector:
      return kDoubleSectorTol;
    default:
      return kAngleTol;
  }
}

void check_fixed_hypotheses(TheoremId id, const PolyGenSpec& gen, const CampaignParams& params) {
  if (id == TheoremId::CosStep && params.alpha) {
    const double alpha = *params.alpha;
    if (!(alpha > 0.0 && alpha < kPi / 2)) {
      char msg[96];
      std::snprintf(msg, sizeof msg, "cosine step needs 0 < alpha < pi/2, got alpha = %.17g", alpha);
      throw Error(ErrorKind::HypothesisViolation, msg);
    }
    if (params.N) {
      const double bound = alpha * gen.max_degree / *params.N;
      if (!(bound < kPi / 2)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "cosine step needs alpha*n/N < pi/2, got %.17g*%d/%d = %.17g >= %.17g", alpha,
                      gen.max_degree, *params.N, bound, kPi / 2);
        throw Error(ErrorKind::HypothesisViolation, msg);
      }
    }
  }
  if (id == TheoremId::CosStep && params.N && *params.N < 1)
    throw Error(ErrorKind::InvalidArgument, "N must be a positive integer");
  if (id == TheoremId::Jsd && params.alpha && !(*params.alpha >= 0.0 && *params.alpha <= kPi))
    throw Error(ErrorKind::HypothesisViolation, "rotation blend theorem needs 0 <= alpha <= pi");
  if ((id == TheoremId::Zsro || id == TheoremId::PeriodStrip) && params.alpha && !std::isfinite(*params.alpha))
    throw Error(ErrorKind::InvalidArgument, "alpha must be finite");
}

}  // namespace

// ---- r_n machinery -------------------------------------------------------------

std::string_view to_string(TailTrend trend) {
  switch (trend) {
    case TailTrend::IncreasingTowardOne:
      return "increasing-toward-1";
    case TailTrend::BoundedAway:
      return "bounded-away";
    case TailTrend::Constant:
      return "constant";
    case TailTrend::Other:
      return "other";
  }
  return "other";
}

std::string_view to_string(RnVerdict verdict) {
  return verdict == RnVerdict::FailsNecessaryCondition ? "fails-necessary-condition" : "inconclusive";
}

RnVerdict RnProfile::verdict() const {
  if (max_value >= 1.0 || tail_trend == TailTrend::IncreasingTowardOne || tail_trend == TailTrend::Constant)
    return RnVerdict::FailsNecessaryCondition;
  return RnVerdict::Inconclusive;
}

RnProfile rn_profile(const MultiplierSequence& ms, int window) {
  if (window < 3) throw Error(ErrorKind::InvalidArgument, "r_n window must be at least 3");
  if (ms.length_limit() >= 0) window = std::min(window, ms.length_limit() - 1);
  if (window < 3)
    throw Error(ErrorKind::InvalidArgument, "explicit sequence is too short for three r_n values");

  RnProfile out;
  out.window = window;
  for (int n = 0; n < window; ++n) out.values.push_back(ms.rn(n));
  const auto [lo, hi] = std::minmax_element(out.values.begin(), out.values.end());
  out.min_value = *lo;
  out.max_value = *hi;

  const std::size_t tail_size = std::max<std::size_t>(2, static_cast<std::size_t>(window) / 2);
  const std::vector<double> tail(out.values.end() - static_cast<std::ptrdiff_t>(tail_size), out.values.end());
  const double first = tail.front();
  const bool flat = std::all_of(tail.begin(), tail.end(), [&](double v) {
    return std::abs(v - first) <= kFlatTol * std::max(1.0, std::abs(first));
  });
  const bool increasing = std::adjacent_find(tail.begin(), tail.end(), std::greater_equal<>()) == tail.end();
  const double tail_max = *std::max_element(tail.begin(), tail.end());
  const double tail_min = *std::min_element(tail.begin(), tail.end());

  if (flat && std::abs(first - 1.0) <= kFlatTol)
    out.tail_trend = TailTrend::Constant;
  else if (flat && first < 1.0 && first > 0.0)
    out.tail_trend = TailTrend::BoundedAway;
  else if (increasing && tail_max < 1.0 && tail_min > 0.0)
    out.tail_trend = TailTrend::IncreasingTowardOne;
  else if (!flat && tail_max < 1.0 && tail_min > 0.0 && !increasing)
    out.tail_trend = TailTrend::BoundedAway;
  else
    out.tail_trend = TailTrend::Other;
  return out;
}

ThreeTermRoots three_term_transformed_roots(int n, double b, double c, const MultiplierSequence& ms) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (!(b > 0.0) || !std::isfinite(b) || !std::isfinite(c))
    throw Error(ErrorKind::InvalidArgument, "three-term polynomial needs b > 0 and finite c");
  const double g0 = ms.term(n);
  const double g1 = ms.term(n + 1);
  const double g2 = ms.term(n + 2);
  if (g2 == 0.0)
    throw Error(ErrorKind::DegenerateLeading, "gamma_" + std::to_string(n + 2) + " = 0 drops the quadratic factor");

  ThreeTermRoots out;
  if (g1 == 0.0) {
    const auto root = std::sqrt(std::complex<double>(-g0 * c / g2));
    out.roots = {root, -root};
    out.rn = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.rn = ms.rn(n);
  const double scale = g1 / g2;
  const double disc = b * b - 4.0 * c * out.rn;
  if (disc >= 0.0) {
    // b > 0: the + branch has no cancellation; the other follows from the product c r_n.
    const double big = 0.5 * (b + std::sqrt(disc));
    out.roots = {scale * big, scale * (c * out.rn / big)};
  } else {
    const double im = 0.5 * std::sqrt(-disc);
    out.roots = {scale * std::complex<double>(0.5 * b, im), scale * std::complex<double>(0.5 * b, -im)};
  }
  if (std::abs(out.roots[1]) > std::abs(out.roots[0])) std::swap(out.roots[0], out.roots[1]);
  return out;
}

double jsd_bracket(double a, double b, double alpha, std::complex<double> z) {
  const double m2 = a * a + b * b;
  const double x = z.real(), y = z.imag();
  return a * (m2 + x * x + y * y) - 2.0 * x * m2 * std::cos(alpha);
}

double jsd_modulus_identity_check(double a, double b, double alpha, std::complex<double> z) {
  using L = long double;
  using C = std::complex<long double>;
  const C w(z.real(), z.imag());
  const C e = std::polar(L(1), L(alpha));
  const C la(a), lb2(L(b) * L(b));
  const C plus = (e * w - la) * (e * w - la) + lb2;
  const C minus = (std::conj(e) * w - la) * (std::conj(e) * w - la) + lb2;
  const L lhs = std::norm(plus) - std::norm(minus);
  const L m2 = L(a) * a + L(b) * b;
  const L x = w.real(), y = w.imag();
  const L rhs = 8 * y * std::sin(L(alpha)) * (L(a) * (m2 + x * x + y * y) - 2 * x * m2 * std::cos(L(alpha)));
  const L denom = std::max({L(1), std::abs(lhs), std::abs(rhs)});
  return static_cast<double>(std::abs(lhs - rhs) / denom);
}

DoubleSectorDemo double_sector_demo(const MultiplierSequence& ms, const SolverConfig& cfg) {
  const double g0 = ms.term(0);
  const double g4 = ms.term(4);
  if (g0 == 0.0 || g4 == 0.0) throw Error(ErrorKind::DegenerateSequence, "double-sector demo needs gamma_0, gamma_4 != 0");
  if ((g0 < 0.0) != (g4 < 0.0)) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "gamma_0 = %.17g and gamma_4 = %.17g differ in sign", g0, g4);
    throw Error(ErrorKind::SignFlip, msg);
  }
  DoubleSectorDemo out{0.0, 0.0, {}};
  out.before = min_enclosing_double_sector(find_roots(RealPolynomial{4.0, 0.0, 0.0, 0.0, 1.0}, cfg));
  out.after_zeros = find_roots(RealPolynomial{4.0 * g0, 0.0, 0.0, 0.0, g4}, cfg);
  out.after = min_enclosing_double_sector(out.after_zeros);
  return out;
}

// ---- generation -------------------------------------------------------------------

void PolyGenSpec::validate() const {
  if (min_degree < 1 || max_degree < min_degree)
    throw Error(ErrorKind::InvalidArgument, "degree range must satisfy 1 <= min <= max");
  if (!(theta >= 0.0 && theta < kPi / 2)) throw Error(ErrorKind::InvalidArgument, "generator theta must lie in [0, pi/2)");
  if (!(m_lo > 0.0 && m_lo <= m_hi && std::isfinite(m_hi)))
    throw Error(ErrorKind::InvalidArgument, "magnitude range must satisfy 0 < m_lo <= m_hi");
  if (!(real_fraction >= 0.0 && real_fraction <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "real_fraction must lie in [0, 1]");
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

GeneratedPoly generate_polynomial(const PolyGenSpec& gen, std::mt19937_64& rng) {
  gen.validate();
  const int span = gen.max_degree - gen.min_degree + 1;
  const int degree = gen.min_degree + std::min(span - 1, static_cast<int>(uniform01(rng) * span));
  const double theta = gen.randomize_theta ? gen.theta * uniform01(rng) : gen.theta;
  const double log_lo = std::log(gen.m_lo), log_hi = std::log(gen.m_hi);

  SectorRootSpec spec;
  int remaining = degree;
  while (remaining > 0) {
    const bool real = remaining == 1 || theta == 0.0 || uniform01(rng) < gen.real_fraction;
    if (real) {
      spec.real_roots.push_back(uniform(rng, gen.m_lo, gen.m_hi));
      remaining -= 1;
      continue;
    }
    const double arg = theta * uniform01(rng);
    const double modulus = std::exp(uniform(rng, log_lo, log_hi));
    if (arg == 0.0) {
      spec.real_roots.insert(spec.real_roots.end(), 2, modulus);
    } else {
      spec.pairs.push_back({modulus * std::cos(arg), modulus * std::sin(arg)});
    }
    remaining -= 2;
  }
  return {spec, theta, from_sector_roots(spec)};
}

// ---- campaigns ------------------------------------------------------------------------

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Jsd:
      return "jsd";
    case TheoremId::JsdQuadratic:
      return "jsd-quadratic";
    case TheoremId::Zsro:
      return "zsro";
    case TheoremId::CosStep:
      return "cosstep";
    case TheoremId::Lms2:
      return "lms2";
    case TheoremId::PeriodStrip:
      return "strip";
    case TheoremId::Roms:
      return "roms";
    case TheoremId::DoubleSector:
      return "double-sector";
    case TheoremId::SecondKind:
      return "second-kind";
    case TheoremId::Search:
      return "search";
  }
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view name) {
  for (auto id : {TheoremId::Jsd, TheoremId::JsdQuadratic, TheoremId::Zsro, TheoremId::CosStep, TheoremId::Lms2,
                  TheoremId::PeriodStrip, TheoremId::Roms, TheoremId::DoubleSector, TheoremId::SecondKind}) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown theorem '" + std::string(name) +
                  "' (expected jsd, jsd-quadratic, zsro, cosstep, lms2, strip, roms, double-sector, second-kind)");
}

VerificationReport verify_theorem(TheoremId id, const PolyGenSpec& gen, const CampaignParams& params, int trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (id == TheoremId::Search) throw Error(ErrorKind::InvalidArgument, "use search_counterexample for searches");
  gen.validate();
  params.solver.validate();
  check_fixed_hypotheses(id, gen, params);
  const auto start = std::chrono::steady_clock::now();

  // A fixed sequence makes every double-sector trial identical.
  if (id == TheoremId::DoubleSector && params.op) trials = 1;

  VerificationReport report;
  report.theorem_id = id;
  report.trials = trials;
  report.seed = seed;
  if (params.tolerance && !(*params.tolerance >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "tolerance must be nonnegative");
  report.tolerance = params.tolerance.value_or(default_tolerance(id));
  report.parameters = {{"generator", gen_json(gen)}};
  auto& p = report.parameters;
  switch (id) {
    case TheoremId::Jsd:
    case TheoremId::JsdQuadratic:
      p["alpha"] = optional_json(params.alpha);
      p["lambda"] = optional_json(params.lambda);
      p["beta"] = optional_json(params.beta);
      break;
    case TheoremId::Zsro:
    case TheoremId::PeriodStrip:
      p["alpha"] = optional_json(params.alpha);
      break;
    case TheoremId::CosStep:
      p["alpha"] = optional_json(params.alpha);
      p["N"] = params.N ? nlohmann::json(*params.N) : nlohmann::json("auto");
      break;
    case TheoremId::Lms2:
      p["lambda"] = optional_json(params.lambda);
      p["theta"] = optional_json(params.theta);
      break;
    case TheoremId::Roms:
      p["op"] = params.op ? params.op->to_spec() : MultiplierSequence(LaguerreQ{0.5}).to_spec();
      break;
    case TheoremId::DoubleSector:
    case TheoremId::SecondKind:
      p["op"] = params.op ? nlohmann::json(params.op->to_spec()) : nlohmann::json("random");
      break;
    case TheoremId::Search:
      break;
  }

  const Campaign campaign{gen, params, seed};
  TrialFn fn;
  switch (id) {
    case TheoremId::Jsd:
      fn = [&](std::uint64_t t) { return jsd_trial(campaign, t); };
      break;
    case TheoremId::JsdQuadratic:
      fn = [&](std::uint64_t t) { return jsd_quadratic_trial(campaign, t); };
      break;
    case TheoremId::Zsro:
      fn = [&](std::uint64_t t) { return zsro_trial(campaign, t); };
      break;
    case TheoremId::CosStep:
      fn = [&](std::uint64_t t) { return cosstep_trial(campaign, t); };
      break;
    case TheoremId::Lms2:
      fn = [&](std::uint64_t t) { return lms2_trial(campaign, t); };
      break;
    case TheoremId::PeriodStrip:
      fn = [&](std::uint64_t t) { return strip_trial(campaign, t); };
      break;
    case TheoremId::Roms:
      fn = [&](std::uint64_t t) { return roms_trial(campaign, t); };
      break;
    case TheoremId::DoubleSector:
      fn = [&](std::uint64_t t) { return double_sector_trial(campaign, t); };
      break;
    case TheoremId::SecondKind:
      fn = [&](std::uint64_t t) { return second_kind_trial(campaign, t); };
      break;
    case TheoremId::Search:
      break;
  }
  merge(report, run_trials(trials, params.threads, fn));
  if (id == TheoremId::DoubleSector && params.op && report.measured == 1) {
    const auto demo = double_sector_demo(*params.op, params.solver);
    p["before"] = demo.before;
    p["after"] = demo.after;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport search_counterexample(const std::vector<MultiplierSequence>& candidates, const PolyGenSpec& gen,
                                         int trials, std::uint64_t seed, const SolverConfig& solver) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (candidates.empty()) throw Error(ErrorKind::InvalidArgument, "search needs at least one candidate sequence");
  for (const auto& ms : candidates) {
    const bool allowed = std::holds_alternative<ExpPower>(ms.family()) || std::holds_alternative<Explicit>(ms.family());
    if (!allowed) throw Error(ErrorKind::InvalidArgument, "search takes exppower or explicit sequences, got " + ms.to_spec());
  }
  gen.validate();
  solver.validate();
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.theorem_id = TheoremId::Search;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = kAngleTol;
  report.parameters = {{"generator", gen_json(gen)}, {"candidates", nlohmann::json::array()}};
  for (const auto& ms : candidates) report.parameters["candidates"].push_back(ms.to_spec());

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const auto& ms = candidates[ci];
    SequenceProbe probe;
    probe.spec = ms.to_spec();
    try {
      probe.profile = rn_profile(ms);
    } catch (const Error&) {
      // Too short or a vanishing interior term: no profile, the sector hunt still runs.
    }
    if (probe.profile.window > 0) {
      try {
        // Roots 1 +- i before; the angle after depends on r_n alone.
        const auto tt = three_term_transformed_roots(probe.profile.window - 1, 2.0, 2.0, ms);
        probe.three_term_before = kPi / 4;
        probe.three_term_after = std::max(std::abs(principal_arg(tt.roots[0])), std::abs(principal_arg(tt.roots[1])));
      } catch (const Error&) {
      }
    }

    const TrialFn fn = [&](std::uint64_t t) {
      auto rng = trial_rng(seed, t);
      const auto g = generate_polynomial(gen, rng);
      TrialOutcome out;
      out.parameters = {{"op", probe.spec}, {"placement_theta", g.theta}};
      out.poly = g.poly;
      double theta_p = 0.0;
      input_zeros(g.poly, solver, theta_p);
      Transformed<double> q = [&] {
        try {
          return apply_sequence(g.poly, ms);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::HypothesisViolation) throw Error(ErrorKind::DegenerateSequence, e.what());
          throw;
        }
      }();
      const auto after = max_abs_arg(find_roots(q.poly, solver));
      out.parameters["measured_theta"] = theta_p;
      out.record(theta_p - after.angle, after.zero);
      return out;
    };
    const auto outcomes = run_trials(trials, 0, fn);
    for (const auto& o : outcomes) {
      if (o.status != TrialOutcome::Status::Measured) continue;
      if (!probe.worst_margin || o.margin < *probe.worst_margin) probe.worst_margin = o.margin;
      const double theta_p = o.parameters["measured_theta"].get<double>();
      if (theta_p > kAngleTol && o.margin <= kAngleTol) probe.non_reducing++;
    }
    merge(report, outcomes, ci * static_cast<std::uint64_t>(trials));
    report.probes.push_back(std::move(probe));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json out;
  out["theorem_id"] = std::string(to_string(report.theorem_id));
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["tolerance"] = report.tolerance;
  out["worst_margin"] = report.worst_margin ? nlohmann::json(*report.worst_margin) : nlohmann::json(nullptr);
  out["measured"] = report.measured;
  out["skipped"] = report.skipped;
  out["degenerate"] = report.degenerate;
  out["skip_messages"] = report.skip_messages;
  out["parameters"] = report.parameters;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out["counterexample"] = {{"trial", c.trial},
                             {"seed", report.seed},
                             {"polynomial", polynomial_to_json(c.poly)},
                             {"parameters", c.parameters},
                             {"zero", complex_json(c.zero)},
                             {"margin", c.margin}};
  } else {
    out["counterexample"] = nullptr;
  }
  if (!report.probes.empty()) {
    auto& probes = out["probes"] = nlohmann::json::array();
    for (const auto& probe : report.probes) {
      nlohmann::json j = {{"op", probe.spec}};
      if (probe.profile.window > 0) {
        j["rn"] = {{"window", probe.profile.window},
                   {"min", probe.profile.min_value},
                   {"max", probe.profile.max_value},
                   {"tail_trend", std::string(to_string(probe.profile.tail_trend))},
                   {"verdict", std::string(to_string(probe.profile.verdict()))}};
      } else {
        j["rn"] = nullptr;
      }
      j["worst_margin"] = probe.worst_margin ? nlohmann::json(*probe.worst_margin) : nlohmann::json(nullptr);
      j["non_reducing"] = probe.non_reducing;
      if (probe.three_term_after)
        j["three_term"] = {{"before", *probe.three_term_before}, {"after", *probe.three_term_after}};
      probes.push_back(std::move(j));
    }
  }
  return out;
}

StripBoundComparison compare_strip_bounds() {
  StripBoundComparison out;
  out.worst_gap = kInf;
  for (int i = 1; i <= 30; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double A = 0.05 * i, alpha = 0.1 * j;
      const double gap = predicted_strip_after_gauss(A, alpha) - bc_strip_bound(A, alpha);
      out.points++;
      if (gap < 0.0) out.violations++;
      out.worst_gap = std::min(out.worst_gap, gap);
    }
  }
  return out;
}

}  // namespace sectorlab
