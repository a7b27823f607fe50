#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sectorlab/operators.hpp"
#include "sectorlab/poly.hpp"
#include "sectorlab/roots.hpp"

namespace sectorlab {

struct PlotRay {
  enum class Role { Sector, SectorAfter, Predicted, Tangent };
  double angle;  // drawn at +angle and -angle
  Role role;
};

struct PlotDisc {
  double center;
  double radius;
};

struct PlotMarker {
  std::complex<double> z;
  int multiplicity;
  bool after;  // transformed zeros are filled, input zeros hollow
};

struct PlotScene {
  std::vector<PlotMarker> markers;
  std::vector<PlotDisc> discs;
  std::vector<PlotRay> rays;
  std::vector<std::string> notes;
  /// Half-width of the square view: 1.2 times the largest zero modulus.
  double extent = 1.0;
};

struct PlotOptions {
  std::optional<MultiplierSequence> op;
  /// Rotation angle for the Jensen sector-discs.
  std::optional<double> alpha;
  bool show_discs = false;
  SolverConfig solver;
};

/// Throws InvalidArgument for show_discs without alpha; operator and solver errors propagate.
PlotScene build_plot_scene(const RealPolynomial& p, const PlotOptions& opts = {});

/// 800x800 self-contained SVG; identical scenes give identical bytes.
std::string render_svg(const PlotScene& scene);

}  // namespace sectorlab
