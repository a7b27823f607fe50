#include "sectorlab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <variant>

#include "sectorlab/geometry.hpp"

namespace sectorlab {

namespace {

constexpr double kSize = 800.0;
constexpr double kHalf = kSize / 2;
constexpr double kMarkerRadius = 5.0;

struct RayStyle {
  const char* cls;
  const char* color;
  const char* dash;
};

RayStyle style(PlotRay::Role role) {
  switch (role) {
    case PlotRay::Role::Sector:
      return {"ray-sector", "#1f77b4", ""};
    case PlotRay::Role::SectorAfter:
      return {"ray-sector-after", "#d62728", ""};
    case PlotRay::Role::Predicted:
      return {"ray-predicted", "#d62728", " stroke-dasharray=\"8 4\""};
    case PlotRay::Role::Tangent:
      return {"ray-tangent", "#2ca02c", " stroke-dasharray=\"2 3\""};
  }
  return {"ray", "#000000", ""};
}

std::optional<double> predicted_angle(const MultiplierSequence& ms, double theta) {
  if (const auto* g = std::get_if<Gauss>(&ms.family())) return predicted_sector_after_gauss(theta, g->alpha);
  if (const auto* c = std::get_if<CosineStep>(&ms.family()))
    return predicted_sector_after_cosine_step(theta, c->alpha, c->N);
  return std::nullopt;
}

std::optional<double> measured_sector(const ZeroSet& zs, std::vector<std::string>& notes, const char* what) {
  try {
    return min_enclosing_sector(zs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInRightHalfPlane) throw;
    notes.push_back(std::string("no sector for the ") + what + " zeros: " + e.what());
    return std::nullopt;
  }
}

void append(std::string& out, const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  out += buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

}  // namespace

PlotScene build_plot_scene(const RealPolynomial& p, const PlotOptions& request) {
  if (request.show_discs && !request.alpha)
    throw Error(ErrorKind::InvalidArgument, "--show-discs needs --alpha for the Jensen sector-discs");
  PlotScene scene;
  const auto before = find_roots(p, request.solver);
  for (const auto& zero : before.zeros) scene.markers.push_back({zero.location, zero.multiplicity, false});
  const auto theta = measured_sector(before, scene.notes, "input");
  if (theta) scene.rays.push_back({*theta, PlotRay::Role::Sector});

  if (request.op) {
    const auto transformed = apply_sequence(p, *request.op);
    if (transformed.poly.degree() >= 1) {
      const auto after = find_roots(transformed.poly, request.solver);
      for (const auto& zero : after.zeros) scene.markers.push_back({zero.location, zero.multiplicity, true});
      if (const auto theta_after = measured_sector(after, scene.notes, "transformed"))
        scene.rays.push_back({*theta_after, PlotRay::Role::SectorAfter});
    } else {
      scene.notes.push_back("transformed polynomial is constant");
    }
    if (theta) {
      if (const auto gamma = predicted_angle(*request.op, *theta))
        scene.rays.push_back({*gamma, PlotRay::Role::Predicted});
    }
  }

  if (request.show_discs) {
    for (const auto& zero : before.zeros) {
      const double a = zero.location.real(), b = zero.location.imag();
      if (!(a > 0.0 && b > 0.0)) continue;
      const auto disc = jensen_sector_disc(a, b, *request.alpha);
      if (disc.empty) continue;
      scene.discs.push_back({disc.center, disc.radius});
      scene.rays.push_back({disc_tangency_data(disc, a, b, *request.alpha).gamma, PlotRay::Role::Tangent});
    }
  }

  double largest = 0.0;
  for (const auto& m : scene.markers) largest = std::max(largest, std::abs(m.z));
  scene.extent = largest > 0.0 ? 1.2 * largest : 1.0;
  return scene;
}

std::string render_svg(const PlotScene& scene) {
  const double scale = kHalf / scene.extent;
  const auto px = [&](double x) { return kHalf + x * scale; };
  const auto py = [&](double y) { return kHalf - y * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  out += "<g class=\"axes\" stroke=\"#999999\" stroke-width=\"1\">\n";
  out += "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\"/>\n<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\"/>\n</g>\n";
  out += ("<text x=\"792\" y=\"392\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">Re</text>\n");
  out += ("<text x=\"408\" y=\"14\" font-family=\"sans-serif\" font-size=\"12\">Im</text>\n");
  append(out, "<text x=\"8\" y=\"792\" font-family=\"sans-serif\" font-size=\"12\" data-extent=\"%.9g\">|Re|, |Im| &lt;= %.6g</text>\n",
         scene.extent, scene.extent);

  for (const auto& d : scene.discs) {
    append(out,
           "<circle class=\"disc\" cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"#2ca02c\" fill-opacity=\"0.12\" "
           "stroke=\"#2ca02c\" data-center=\"%.9g\" data-radius=\"%.9g\"/>\n",
           px(d.center), py(0.0), d.radius * scale, d.center, d.radius);
  }
  const double reach = 2.0 * scene.extent;
  for (const auto& ray : scene.rays) {
    const auto st = style(ray.role);
    for (double sign : {1.0, -1.0}) {
      append(out,
             "<line class=\"%s\" x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"%s\" stroke-width=\"1.5\"%s "
             "data-angle=\"%.9g\"/>\n",
             st.cls, px(0.0), py(0.0), px(reach * std::cos(ray.angle)), py(sign * reach * std::sin(ray.angle)), st.color,
             st.dash, sign * ray.angle + 0.0);
    }
  }
  for (const auto& m : scene.markers) {
    const char* fill = m.after ? "#d62728" : "none";
    const char* stroke = m.after ? "#d62728" : "#000000";
    append(out,
           "<circle class=\"%s\" cx=\"%.3f\" cy=\"%.3f\" r=\"%.1f\" fill=\"%s\" stroke=\"%s\" stroke-width=\"1.5\" "
           "data-re=\"%.9g\" data-im=\"%.9g\" data-multiplicity=\"%d\"/>\n",
           m.after ? "zero-after" : "zero-before", px(m.z.real()), py(m.z.imag()), kMarkerRadius, fill, stroke,
           m.z.real(), m.z.imag(), m.multiplicity);
  }
  double y = 20.0;
  for (const auto& note : scene.notes) {
    append(out, "<text class=\"note\" x=\"8\" y=\"%.0f\" font-family=\"sans-serif\" font-size=\"12\">", y);
    out += escape(note);
    out += "</text>\n";
    y += 16.0;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sectorlab
