#include "sectorlab/operators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>

namespace sectorlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// cos(x) with the rounding of x itself taken into account: values that cannot
// be told apart from zero are returned as exactly zero.
double snapped_cos(double x) {
  const double value = std::cos(x);
  return std::abs(value) <= 4.0 * kEps * std::max(1.0, std::abs(x)) ? 0.0 : value;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

// Shortest text that parses back to the same double.
std::string format_number(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ec == std::errc() ? end : buf);
}

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value))
    throw Error(ErrorKind::InvalidArgument,
                "malformed number '" + std::string(text) + "' in sequence spec '" + std::string(context) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

MultiplierSequence::MultiplierSequence(Family family) : family_(std::move(family)) {
  std::visit(Overloaded{
                 [](const Gauss& g) { require(std::isfinite(g.alpha), "gauss: alpha must be finite"); },
                 [](const CosineStep& c) {
                   require(std::isfinite(c.alpha), "cosstep: alpha must be finite");
                   require(c.N >= 1, "cosstep: N must be a positive integer");
                 },
                 [](const CosineAffine& c) {
                   require(std::isfinite(c.lambda) && std::isfinite(c.theta), "cosaffine: lambda and theta must be finite");
                 },
                 [](const LaguerreQ& l) { require(l.q > -1.0 && l.q < 1.0, "laguerre: q must lie in (-1, 1)"); },
                 [](const ExpPower& e) {
                   require(e.alpha > 0.0 && std::isfinite(e.alpha), "exppower: alpha must be positive");
                   require(e.p > 0.0 && std::isfinite(e.p), "exppower: p must be positive");
                 },
                 [](const Explicit& e) {
                   require(!e.values.empty(), "explicit: at least one value is required");
                   for (double v : e.values) require(std::isfinite(v), "explicit: values must be finite");
                 },
             },
             family_);
}

double MultiplierSequence::term(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "sequence index must be nonnegative");
  const double kk = k;
  return std::visit(Overloaded{
                        [&](const Gauss& g) { return std::exp(-0.5 * g.alpha * g.alpha * kk * kk); },
                        [&](const CosineStep& c) { return snapped_cos(c.alpha * kk / c.N); },
                        [&](const CosineAffine& c) { return snapped_cos(c.lambda + kk * c.theta); },
                        [&](const LaguerreQ& l) { return std::pow(l.q, kk * kk); },
                        [&](const ExpPower& e) { return std::exp(-e.alpha * std::pow(kk, e.p)); },
                        [&](const Explicit& e) {
                          if (static_cast<std::size_t>(k) >= e.values.size())
                            throw Error(ErrorKind::HypothesisViolation,
                                        "explicit sequence has " + std::to_string(e.values.size()) +
                                            " terms, index " + std::to_string(k) + " requested");
                          return e.values[static_cast<std::size_t>(k)];
                        },
                    },
                    family_);
}

double MultiplierSequence::rn(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "r_n index must be nonnegative");
  const auto quotient = [&] {
    const double middle = term(n + 1);
    if (middle == 0.0)
      throw Error(ErrorKind::ZeroInteriorTerm, "gamma_" + std::to_string(n + 1) + " = 0 leaves r_" +
                                                   std::to_string(n) + " undefined");
    return term(n) * term(n + 2) / (middle * middle);
  };
  return std::visit(Overloaded{
                        // second difference of k^2 is exactly 2
                        [&](const Gauss& g) { return std::exp(-g.alpha * g.alpha); },
                        [&](const LaguerreQ& l) {
                          if (l.q == 0.0) return quotient();
                          return l.q * l.q;
                        },
                        [&](const ExpPower& e) {
                          const double second_difference =
                              std::pow(n + 2.0, e.p) - 2.0 * std::pow(n + 1.0, e.p) + std::pow(static_cast<double>(n), e.p);
                          return std::exp(-e.alpha * second_difference);
                        },
                        [&](const auto&) { return quotient(); },
                    },
                    family_);
}

int MultiplierSequence::length_limit() const {
  if (const auto* e = std::get_if<Explicit>(&family_)) return static_cast<int>(e->values.size()) - 1;
  return -1;
}

std::string MultiplierSequence::to_spec() const {
  return std::visit(Overloaded{
                        [](const Gauss& g) { return "gauss:alpha=" + format_number(g.alpha); },
                        [](const CosineStep& c) {
                          return "cosstep:alpha=" + format_number(c.alpha) + ",N=" + std::to_string(c.N);
                        },
                        [](const CosineAffine& c) {
                          return "cosaffine:lambda=" + format_number(c.lambda) + ",theta=" + format_number(c.theta);
                        },
                        [](const LaguerreQ& l) { return "laguerre:q=" + format_number(l.q); },
                        [](const ExpPower& e) {
                          return "exppower:alpha=" + format_number(e.alpha) + ",p=" + format_number(e.p);
                        },
                        [](const Explicit& e) {
                          std::string out = "explicit:";
                          for (std::size_t i = 0; i < e.values.size(); ++i) {
                            if (i) out += ',';
                            out += format_number(e.values[i]);
                          }
                          return out;
                        },
                    },
                    family_);
}

MultiplierSequence parse_sequence(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::InvalidArgument, "sequence spec '" + std::string(spec) + "' lacks 'family:' prefix");
  const auto name = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  static constexpr std::string_view kFamilies[] = {"gauss", "cosstep", "cosaffine", "laguerre", "exppower", "explicit"};
  if (std::find(std::begin(kFamilies), std::end(kFamilies), name) == std::end(kFamilies))
    throw Error(ErrorKind::InvalidArgument, "unknown sequence family '" + std::string(name) +
                                                "' (expected gauss, cosstep, cosaffine, laguerre, exppower, explicit)");

  if (name == "explicit") {
    std::vector<double> values;
    for (auto item : split(body, ',')) values.push_back(parse_number(item, spec));
    return MultiplierSequence(Explicit{std::move(values)});
  }

  std::map<std::string, double, std::less<>> params;
  for (auto item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::InvalidArgument, "expected key=value, got '" + std::string(item) + "' in '" + std::string(spec) + "'");
    params[std::string(item.substr(0, eq))] = parse_number(item.substr(eq + 1), spec);
  }
  const auto take = [&](const std::vector<std::string>& keys) {
    std::vector<double> out;
    for (const auto& key : keys) {
      const auto it = params.find(key);
      if (it == params.end())
        throw Error(ErrorKind::InvalidArgument, "sequence spec '" + std::string(spec) + "' is missing '" + key + "'");
      out.push_back(it->second);
      params.erase(it);
    }
    if (!params.empty())
      throw Error(ErrorKind::InvalidArgument,
                  "unknown parameter '" + params.begin()->first + "' in sequence spec '" + std::string(spec) + "'");
    return out;
  };

  if (name == "gauss") return MultiplierSequence(Gauss{take({"alpha"})[0]});
  if (name == "cosstep") {
    const auto v = take({"alpha", "N"});
    if (v[1] != std::floor(v[1]) || v[1] < 1 || v[1] > std::numeric_limits<int>::max())
      throw Error(ErrorKind::InvalidArgument, "cosstep: N must be a positive integer");
    return MultiplierSequence(CosineStep{v[0], static_cast<int>(v[1])});
  }
  if (name == "cosaffine") {
    const auto v = take({"lambda", "theta"});
    return MultiplierSequence(CosineAffine{v[0], v[1]});
  }
  if (name == "laguerre") return MultiplierSequence(LaguerreQ{take({"q"})[0]});
  if (name == "exppower") {
    const auto v = take({"alpha", "p"});
    return MultiplierSequence(ExpPower{v[0], v[1]});
  }
  throw Error(ErrorKind::InvalidArgument, "unknown sequence family '" + std::string(name) + "'");
}

BlendResult rotation_blend(const RealPolynomial& p, const BlendParams& bp) {
  const double phi = 0.5 * (bp.lambda + bp.beta);
  const double mu = 0.5 * (bp.lambda - bp.beta);
  RealPolynomial::Coeffs real(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) real[k] = 2.0 * snapped_cos(mu + k * bp.alpha) * p[k];
  if (real.isZero(0.0)) throw Error(ErrorKind::ZeroPolynomialResult, "every blend coefficient cancels");

  const std::complex<double> phase = std::polar(1.0, phi);
  ComplexPolynomial::Coeffs out = real.cast<std::complex<double>>() * phase;
  RealPolynomial real_factor(std::move(real));
  const bool real_coefficients = std::abs(std::sin(phi)) <= 4.0 * kEps * std::max(1.0, std::abs(phi));
  return {{ComplexPolynomial(std::move(out)), p.degree()}, phase, std::move(real_factor), real_coefficients};
}

Transformed<double> apply_sequence(const RealPolynomial& p, const MultiplierSequence& ms) {
  const int n = p.degree();
  if (const auto* step = std::get_if<CosineStep>(&ms.family())) {
    const double bound = step->alpha * n / step->N;
    if (!(std::abs(bound) < kPi / 2)) {
      char msg[160];
      std::snprintf(msg, sizeof msg, "cosine step needs alpha*n/N < pi/2, got %.17g*%d/%d = %.17g >= %.17g", step->alpha,
                    n, step->N, bound, kPi / 2);
      throw Error(ErrorKind::HypothesisViolation, msg);
    }
  }
  if (ms.length_limit() >= 0 && ms.length_limit() < n) {
    throw Error(ErrorKind::HypothesisViolation, "explicit sequence has " + std::to_string(ms.length_limit() + 1) +
                                                    " terms but degree " + std::to_string(n) + " needs " +
                                                    std::to_string(n + 1));
  }
  RealPolynomial::Coeffs gamma(n + 1);
  for (int k = 0; k <= n; ++k) gamma[k] = ms.term(k);
  RealPolynomial::Coeffs out = p.coeffs().cwiseProduct(gamma);
  if (out.isZero(0.0)) throw Error(ErrorKind::DegenerateSequence, "the sequence annihilates every coefficient");
  return {RealPolynomial(std::move(out)), n};
}

RealPolynomial cosine_affine_transform(const RealPolynomial& p, double lambda, double theta) {
  return apply_sequence(p, MultiplierSequence(CosineAffine{lambda, theta})).poly;
}

double predicted_sector_after_gauss(double theta, double alpha) {
  return std::acos(std::min(1.0, std::exp(0.5 * alpha * alpha) * std::cos(theta)));
}

double predicted_sector_after_cosine_step(double theta, double alpha, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be a positive integer");
  return std::acos(std::min(1.0, std::cos(theta) / std::cos(alpha / N)));
}

double cosine_power_limit(double alpha, int N) {
  if (N < 1 || !(std::abs(alpha / N) < kPi / 2))
    throw Error(ErrorKind::DomainError, "cosine power limit needs N >= 1 and |alpha/N| < pi/2");
  // cos x = 1 - 2 sin^2(x/2), kept away from the cancellation in 1 - cos x.
  const double half = std::sin(0.5 * alpha / N);
  const double n2 = static_cast<double>(N) * N;
  return std::exp(n2 * std::log1p(-2.0 * half * half));
}

std::vector<std::complex<double>> exp_poly_principal_zeros(const RealPolynomial& p, const SolverConfig& cfg) {
  if (p[0] == 0.0)
    throw Error(ErrorKind::ZeroOutsideRightHalfPlane, "p(0) = 0: the origin has no logarithm");
  const auto zs = find_roots(p, cfg);
  std::vector<std::complex<double>> out;
  out.reserve(zs.zeros.size());
  for (const auto& zero : zs.zeros) {
    if (!(zero.location.real() > 0.0)) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "zero %.17g%+.17gi is not in the open right half-plane", zero.location.real(),
                    zero.location.imag());
      throw Error(ErrorKind::ZeroOutsideRightHalfPlane, msg);
    }
    out.push_back(std::log(zero.location));
  }
  return out;
}

double predicted_strip_after_gauss(double A, double alpha) { return predicted_sector_after_gauss(A, alpha); }

double bc_strip_bound(double A, double alpha) { return std::sqrt(std::max(A * A - alpha * alpha, 0.0)); }

}  // namespace sectorlab
