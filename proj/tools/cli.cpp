#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sectorlab/analysis.hpp"
#include "sectorlab/error.hpp"
#include "sectorlab/geometry.hpp"
#include "sectorlab/operators.hpp"
#include "sectorlab/plot.hpp"
#include "sectorlab/poly_json.hpp"
#include "sectorlab/roots.hpp"

namespace sectorlab::cli {

namespace {

using nlohmann::json;

struct Options {
  // global
  std::uint64_t seed = 0;
  int trials = 1000;
  double tol_angle = 0.0;
  double tol_residual = 0.0;
  std::string format;
  std::string output;
  // input
  std::string coeffs;
  std::string input;
  // operators
  std::string op;
  std::vector<std::string> ops;
  double alpha = 0.0, lambda = 0.0, beta = 0.0, theta = 0.0;
  int N = 0;
  bool show_discs = false;
  // campaigns
  std::string theorem;
  bool quadratic = false;
  bool random_theta = false;
  int degree_min = 2, degree_max = 16;
  double m_lo = 0.1, m_hi = 10.0, real_fraction = 0.3;
  int threads = 0;
  std::string family;
  std::vector<double> alphas;
  std::vector<double> ps;
};

struct Flags {
  CLI::App* app;
  CLI::Option* seed = nullptr;
  CLI::Option* tol_angle = nullptr;
  CLI::Option* tol_residual = nullptr;
};

bool given(const CLI::App* sub, const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; }

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v + 0.0);
  return buf;
}

std::string complex_text(std::complex<double> z) {
  const double re = z.real() + 0.0, im = z.imag() + 0.0;
  return fmt("%.10g", re) + (std::signbit(im) ? "-" : "+") + fmt("%.10g", std::abs(im)) + "i";
}

std::string zeros_text(const ZeroSet& zs) {
  if (zs.zeros.empty()) return "none";
  std::string out;
  for (const auto& z : zs.zeros) {
    if (!out.empty()) out += ", ";
    out += complex_text(z.location) + " (×" + std::to_string(z.multiplicity) + ")";
  }
  return out;
}

json zeros_json(const ZeroSet& zs) {
  json out = json::array();
  for (const auto& z : zs.zeros) {
    out.push_back({{"re", z.location.real() + 0.0},
                   {"im", z.location.imag() + 0.0},
                   {"multiplicity", z.multiplicity},
                   {"residual", z.residual}});
  }
  return out;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_text(const std::optional<double>& v, const std::string& missing) {
  return v ? fmt("%.10g", *v) : missing;
}

RealPolynomial parse_coeffs(const std::string& text) {
  std::vector<double> values;
  std::size_t field = 0, pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string_view item(text.data() + pos, (comma == std::string::npos ? text.size() : comma) - pos);
    ++field;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || !std::isfinite(v))
      throw Error(ErrorKind::InvalidArgument,
                  "--coeffs: field " + std::to_string(field) + " ('" + std::string(item) + "') is not a finite number");
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return RealPolynomial(values);
}

RealPolynomial read_input(const Options& o) {
  if (o.coeffs.empty() == o.input.empty())
    throw Error(ErrorKind::InvalidArgument, "give exactly one input source: --coeffs or --input");
  if (!o.coeffs.empty()) return parse_coeffs(o.coeffs);
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + o.input);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return polynomial_from_json_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), o.input + ": " + e.detail());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << content;
  if (!f.flush()) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
}

void emit(const Options& o, std::ostream& out, const std::string& content) {
  if (o.output.empty())
    out << content;
  else
    write_file(o.output, content);
}

std::string pick_format(const Options& o, const char* command, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return *allowed.begin();
  for (const char* f : allowed)
    if (o.format == f) return o.format;
  throw Error(ErrorKind::InvalidArgument, "--format " + o.format + " is not available for " + command);
}

SolverConfig solver_config(const Options& o, const Flags& flags) {
  SolverConfig cfg;
  if (flags.tol_residual->count()) cfg.residual_accept = o.tol_residual;
  cfg.validate();
  return cfg;
}

double angle_tol(const Options& o, const Flags& flags) {
  if (!flags.tol_angle->count()) return kDefaultAngleTol;
  if (!(o.tol_angle >= 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol-angle must be nonnegative");
  return o.tol_angle;
}

std::uint64_t resolve_seed(const Options& o, const Flags& flags) {
  if (flags.seed->count()) return o.seed;
  const char* env = std::getenv("SECTORLAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t v = 0;
  const std::string_view s(env);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size())
    throw Error(ErrorKind::InvalidArgument, "SECTORLAB_SEED must be an unsigned 64-bit integer, got '" +
                                                std::string(s) + "'");
  return v;
}

struct SectorMeasure {
  std::optional<double> theta;
  std::string note;
};

SectorMeasure measure_sector(const ZeroSet& zs) {
  if (zs.zeros.empty()) return {std::nullopt, "no zeros"};
  try {
    return {min_enclosing_sector(zs), ""};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInRightHalfPlane) throw;
    return {std::nullopt, e.what()};
  }
}

std::optional<double> predicted_bound(const MultiplierSequence& ms, const std::optional<double>& theta) {
  if (!theta) return std::nullopt;
  if (const auto* g = std::get_if<Gauss>(&ms.family())) return predicted_sector_after_gauss(*theta, g->alpha);
  if (const auto* c = std::get_if<CosineStep>(&ms.family()))
    return predicted_sector_after_cosine_step(*theta, c->alpha, c->N);
  return std::nullopt;
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v + 0.0);
  return std::string(buf.data(), res.ptr);
}

std::string coeffs_text(const RealPolynomial& p) {
  std::string out;
  for (Eigen::Index k = 0; k < p.coeffs().size(); ++k) {
    if (k) out += ", ";
    out += shortest(p[k]);
  }
  return "[" + out + "]";
}

// ---------------------------------------------------------------- roots

int cmd_roots(const Options& o, const Flags& flags, std::ostream& out) {
  const auto format = pick_format(o, "roots", {"text", "csv", "json"});
  const auto p = read_input(o);
  const auto zs = find_roots(p, solver_config(o, flags));
  std::string content;
  if (format == "csv") {
    content = zeros_to_csv(zs);
  } else if (format == "json") {
    content = json{{"polynomial", polynomial_to_json(p)},
                   {"zeros", zeros_json(zs)},
                   {"max_residual", residual_report(to_complex(p), zs)}}
                  .dump(2) +
              "\n";
  } else {
    content = zeros_text(zs) + "\n" + "max residual: " + fmt("%.3g", residual_report(to_complex(p), zs)) + "\n";
  }
  emit(o, out, content);
  return kOk;
}

// ---------------------------------------------------------------- apply

int cmd_apply(const Options& o, const Flags& flags, std::ostream& out) {
  const auto format = pick_format(o, "apply", {"text", "json", "csv"});
  const auto ms = parse_sequence(o.op);
  const auto p = read_input(o);
  const auto cfg = solver_config(o, flags);
  const auto before = find_roots(p, cfg);
  const auto transformed = apply_sequence(p, ms);
  const auto& q = transformed.poly;
  ZeroSet after;
  after.source_degree = q.degree();
  if (q.degree() >= 1) after = find_roots(q, cfg);
  const auto sb = measure_sector(before);
  const auto sa = measure_sector(after);
  const auto predicted = predicted_bound(ms, sb.theta);

  std::string content;
  if (format == "csv") {
    content = zeros_to_csv(after);
  } else if (format == "json") {
    json doc = {{"op", ms.to_spec()},
                {"polynomial", polynomial_to_json(q)},
                {"source_degree", transformed.source_degree},
                {"degree", q.degree()},
                {"degree_dropped", transformed.degree_dropped()},
                {"theta_before", optional_json(sb.theta)},
                {"theta_after", optional_json(sa.theta)},
                {"predicted", optional_json(predicted)},
                {"zeros_before", zeros_json(before)},
                {"zeros", zeros_json(after)}};
    content = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "op: " << ms.to_spec() << "\n";
    s << "coefficients: " << coeffs_text(q) << "\n";
    s << "degree: " << transformed.source_degree << " -> " << q.degree()
      << (transformed.degree_dropped() ? " (degree drop)" : "") << "\n";
    s << "theta_before: " << optional_text(sb.theta, "none (" + sb.note + ")") << "\n";
    s << "theta_after: " << optional_text(sa.theta, "none (" + sa.note + ")") << "\n";
    if (predicted) s << "predicted: " << fmt("%.10g", *predicted) << "\n";
    s << "zeros: " << zeros_text(after) << "\n";
    content = s.str();
  }
  emit(o, out, content);
  return kOk;
}

// ---------------------------------------------------------------- sector

int cmd_sector(const Options& o, const Flags& flags, const CLI::App* sub, std::ostream& out) {
  const auto format = pick_format(o, "sector", {"text", "json"});
  const auto p = read_input(o);
  const auto zs = find_roots(p, solver_config(o, flags));
  const auto sector = measure_sector(zs);
  std::optional<double> double_sector;
  std::string double_note;
  try {
    double_sector = min_enclosing_double_sector(zs);
  } catch (const Error& e) {
    double_note = e.what();
  }
  std::optional<bool> inside;
  if (given(sub, "--theta")) {
    const double tol = angle_tol(o, flags);
    bool all = true;
    for (const auto& z : zs.zeros) all = all && in_sector(z.location, Sector(o.theta), tol);
    inside = all;
  }
  const auto pattern = std::string(to_string(coefficient_sign_pattern(p)));

  std::string content;
  if (format == "json") {
    json doc = {{"zeros", zeros_json(zs)},
                {"sector", optional_json(sector.theta)},
                {"double_sector", optional_json(double_sector)},
                {"sign_pattern", pattern}};
    if (!sector.theta) doc["sector_note"] = sector.note;
    if (inside) doc["inside"] = {{"theta", o.theta}, {"result", *inside}};
    content = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "zeros: " << zeros_text(zs) << "\n";
    s << "sector: " << optional_text(sector.theta, "none (" + sector.note + ")") << "\n";
    s << "double sector: " << optional_text(double_sector, "none (" + double_note + ")") << "\n";
    s << "coefficient signs: " << pattern << "\n";
    if (inside) s << "inside S(" << fmt("%.10g", o.theta) << "): " << (*inside ? "yes" : "no") << "\n";
    content = s.str();
  }
  emit(o, out, content);
  return kOk;
}

// ---------------------------------------------------------------- verify / search

PolyGenSpec generator(const Options& o, const CLI::App* sub, bool theta_is_generator) {
  PolyGenSpec gen;
  gen.min_degree = o.degree_min;
  gen.max_degree = o.degree_max;
  if (theta_is_generator && given(sub, "--theta")) gen.theta = o.theta;
  gen.randomize_theta = o.random_theta;
  gen.m_lo = o.m_lo;
  gen.m_hi = o.m_hi;
  gen.real_fraction = o.real_fraction;
  gen.validate();
  return gen;
}

bool angle_measured(TheoremId id) {
  switch (id) {
    case TheoremId::Zsro:
    case TheoremId::CosStep:
    case TheoremId::PeriodStrip:
    case TheoremId::DoubleSector:
    case TheoremId::SecondKind:
    case TheoremId::Search:
      return true;
    default:
      return false;
  }
}

std::string certificate_path(const Options& o, const VerificationReport& r) {
  if (!o.output.empty()) return o.output;
  return "counterexample-" + std::string(to_string(r.theorem_id)) + "-seed" + std::to_string(r.seed) + ".json";
}

std::string summary_head(const VerificationReport& r) {
  std::ostringstream s;
  s << "theorem: " << to_string(r.theorem_id) << "\n";
  s << "seed: " << r.seed << "\n";
  s << "trials: " << r.trials << (r.probes.empty() ? "" : " per candidate") << " (measured " << r.measured << ", skipped " << r.skipped << ", degenerate "
    << r.degenerate << ")\n";
  for (const auto& m : r.skip_messages) s << "  note: " << m << "\n";
  return s.str();
}

int finish_campaign(const Options& o, const VerificationReport& r, const std::string& summary, std::ostream& out) {
  const std::string report_text = report_to_json(r).dump(2) + "\n";
  const bool json_only = o.output.empty() && o.format == "json";
  if (!o.output.empty()) write_file(o.output, report_text);
  if (json_only) {
    out << report_text;
  } else {
    out << summary;
  }
  if (!r.counterexample) return kOk;
  if (o.output.empty()) {
    const auto path = certificate_path(o, r);
    write_file(path, report_text);
    if (!json_only) out << "certificate: " << path << "\n";
  } else {
    out << "certificate: " << o.output << "\n";
  }
  return kCounterexample;
}

int cmd_verify(const Options& o, const Flags& flags, const CLI::App* sub, std::ostream& out) {
  pick_format(o, "verify", {"text", "json"});
  auto id = parse_theorem_id(o.theorem);
  if (o.quadratic) {
    if (id != TheoremId::Jsd && id != TheoremId::JsdQuadratic)
      throw Error(ErrorKind::InvalidArgument, "--quadratic only applies to jsd");
    id = TheoremId::JsdQuadratic;
  }
  CampaignParams params;
  if (!o.op.empty()) params.op = parse_sequence(o.op);
  if (given(sub, "--alpha")) params.alpha = o.alpha;
  if (given(sub, "--lambda")) params.lambda = o.lambda;
  if (given(sub, "--beta")) params.beta = o.beta;
  if (given(sub, "--N")) params.N = o.N;
  if (id == TheoremId::Lms2 && given(sub, "--theta")) params.theta = o.theta;
  params.solver = solver_config(o, flags);
  if (flags.tol_angle->count() && angle_measured(id)) params.tolerance = angle_tol(o, flags);
  params.threads = o.threads;
  const auto gen = generator(o, sub, id != TheoremId::Lms2);
  const auto seed = resolve_seed(o, flags);

  const auto report = verify_theorem(id, gen, params, o.trials, seed);

  std::ostringstream s;
  s << summary_head(report);
  if (id == TheoremId::JsdQuadratic) {
    s << "boundary margin: max ||z - c| - r| / r = "
      << (report.worst_margin ? fmt("%.3g", -*report.worst_margin) : std::string("n/a")) << " (bound "
      << fmt("%.3g", report.tolerance) << ")\n";
  } else if (id == TheoremId::DoubleSector && params.op) {
    const auto demo = double_sector_demo(*params.op, params.solver);
    s << "before: " << fmt("%.10g", demo.before) << "\n";
    s << "after: " << fmt("%.10g", demo.after) << "\n";
    s << "verdict: " << (report.counterexample ? "reduction found" : "no reduction (as proven)") << "\n";
  } else {
    s << "worst margin: " << optional_text(report.worst_margin, "n/a") << " (tolerance "
      << fmt("%.3g", report.tolerance) << ")\n";
  }
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    s << "counterexample: trial " << c.trial << ", zero " << complex_text(c.zero) << ", margin "
      << fmt("%.3g", c.margin) << "\n";
  } else {
    s << "counterexample: none\n";
  }
  return finish_campaign(o, report, s.str(), out);
}

int cmd_search(const Options& o, const Flags& flags, const CLI::App* sub, std::ostream& out) {
  pick_format(o, "search", {"text", "json"});
  std::vector<MultiplierSequence> candidates;
  for (const auto& spec : o.ops) candidates.push_back(parse_sequence(spec));
  if (!o.family.empty()) {
    if (o.family != "exppower")
      throw Error(ErrorKind::InvalidArgument, "--family supports exppower only, got '" + o.family + "'");
    const std::vector<double> alphas = o.alphas.empty() ? std::vector<double>{0.3} : o.alphas;
    const std::vector<double> ps = o.ps.empty() ? std::vector<double>{1.0, 1.5, 2.0} : o.ps;
    for (double a : alphas)
      for (double p : ps) candidates.emplace_back(ExpPower{a, p});
  }
  if (candidates.empty())
    for (double p : {1.0, 1.5, 2.0}) candidates.emplace_back(ExpPower{0.3, p});

  const auto gen = generator(o, sub, true);
  const auto seed = resolve_seed(o, flags);
  const auto report = search_counterexample(candidates, gen, o.trials, seed, solver_config(o, flags));

  std::ostringstream s;
  s << summary_head(report);
  for (const auto& probe : report.probes) {
    s << probe.spec << ": ";
    if (probe.profile.window > 0)
      s << "r_n in [" << fmt("%.6g", probe.profile.min_value) << ", " << fmt("%.6g", probe.profile.max_value)
        << "], tail " << to_string(probe.profile.tail_trend) << ", " << to_string(probe.profile.verdict());
    else
      s << "r_n unavailable";
    s << "; worst margin " << optional_text(probe.worst_margin, "n/a") << ", non-reducing " << probe.non_reducing
      << "/" << report.trials << "\n";
  }
  s << "counterexample: " << (report.counterexample ? "sector grew, see certificate" : "none") << "\n";
  return finish_campaign(o, report, s.str(), out);
}

// ---------------------------------------------------------------- plot

int cmd_plot(const Options& o, const Flags& flags, const CLI::App* sub, std::ostream& out) {
  pick_format(o, "plot", {"svg"});
  PlotOptions req;
  if (!o.op.empty()) req.op = parse_sequence(o.op);
  const auto p = read_input(o);
  if (given(sub, "--alpha")) req.alpha = o.alpha;
  req.show_discs = o.show_discs;
  req.solver = solver_config(o, flags);
  emit(o, out, render_svg(build_plot_scene(p, req)));
  return kOk;
}

void add_input(CLI::App* sub, Options& o) {
  auto* c = sub->add_option("--coeffs", o.coeffs, "Comma list c0,c1,...,cn (use --coeffs=-1,2 for a leading minus)");
  auto* i = sub->add_option("--input", o.input, "JSON polynomial document");
  c->excludes(i);
}

void add_generator(CLI::App* sub, Options& o) {
  sub->add_option("--degree-min", o.degree_min, "Smallest generated degree");
  sub->add_option("--degree-max", o.degree_max, "Largest generated degree");
  sub->add_option("--m-lo", o.m_lo, "Smallest zero modulus");
  sub->add_option("--m-hi", o.m_hi, "Largest zero modulus");
  sub->add_option("--real-fraction", o.real_fraction, "Share of real zeros");
  sub->add_flag("--random-theta", o.random_theta, "Draw the placement angle from [0, theta] per polynomial");
  sub->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence:
      return kNonConvergence;
    case ErrorKind::HypothesisViolation:
      return kHypothesisViolation;
    default:
      return kInputError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Zero sectors of real polynomials under multiplier sequences", "sectorlab"};
  app.fallthrough();
  app.require_subcommand(1);
  Flags flags{&app};
  flags.seed = app.add_option("--seed", o.seed, "Campaign seed (default: $SECTORLAB_SEED, else 0)");
  app.add_option("--trials", o.trials, "Campaign trials")->check(CLI::PositiveNumber);
  flags.tol_angle = app.add_option("--tol-angle", o.tol_angle, "Angle tolerance in radians");
  flags.tol_residual = app.add_option("--tol-residual", o.tol_residual, "Accepted relative residual of a zero");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg", "text"}));
  app.add_option("-o,--output", o.output, "Output file");

  auto* roots = app.add_subcommand("roots", "List the zeros of a polynomial");
  add_input(roots, o);

  auto* apply = app.add_subcommand("apply", "Apply a multiplier sequence and compare sectors");
  add_input(apply, o);
  apply->add_option("--op", o.op, "Sequence, e.g. gauss:alpha=0.5")->required();

  auto* sector = app.add_subcommand("sector", "Measure the enclosing sector of the zeros");
  add_input(sector, o);
  sector->add_option("--theta", o.theta, "Also test membership in S(theta)");

  auto* verify = app.add_subcommand("verify", "Run a seeded theorem campaign");
  verify->add_option("theorem", o.theorem, "jsd, zsro, cosstep, lms2, strip, roms, double-sector, second-kind")
      ->required();
  verify->add_flag("--quadratic", o.quadratic, "jsd on quadratics, checking the disc boundary");
  verify->add_option("--theta", o.theta, "Generator sector angle (lms2: the angle of cos(lambda + k theta))");
  verify->add_option("--alpha", o.alpha, "Fix alpha");
  verify->add_option("--lambda", o.lambda, "Fix lambda");
  verify->add_option("--beta", o.beta, "Fix beta");
  verify->add_option("--N", o.N, "Fix N for cosstep");
  verify->add_option("--op", o.op, "Sequence for roms, double-sector, second-kind");
  add_generator(verify, o);

  auto* search = app.add_subcommand("search", "Hunt for sector growth among exppower or explicit sequences");
  search->add_option("--op", o.ops, "Candidate sequence (repeatable)");
  search->add_option("--family", o.family, "Grid family (exppower)");
  search->add_option("--alpha", o.alphas, "Grid values of alpha")->delimiter(',');
  search->add_option("--p", o.ps, "Grid values of p")->delimiter(',');
  search->add_option("--theta", o.theta, "Generator sector angle");
  add_generator(search, o);

  auto* plot = app.add_subcommand("plot", "Draw zeros, sectors and sector-discs as SVG");
  add_input(plot, o);
  plot->add_option("--op", o.op, "Overlay the zeros after this sequence");
  plot->add_option("--alpha", o.alpha, "Rotation angle for the sector-discs");
  plot->add_flag("--show-discs", o.show_discs, "Draw the Jensen sector-discs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*roots) return cmd_roots(o, flags, out);
    if (*apply) return cmd_apply(o, flags, out);
    if (*sector) return cmd_sector(o, flags, sector, out);
    if (*verify) return cmd_verify(o, flags, verify, out);
    if (*search) return cmd_search(o, flags, search, out);
    if (*plot) return cmd_plot(o, flags, plot, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace sectorlab::cli
