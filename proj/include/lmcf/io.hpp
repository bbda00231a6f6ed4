#pragma once

// Curve tables, run configuration, JSON / text reports and SVG figures.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmcf/blowup.hpp"
#include "lmcf/flow.hpp"
#include "lmcf/solitons.hpp"
#include "lmcf/symmetry.hpp"

namespace lmcf {

using Json = nlohmann::json;
namespace fs = std::filesystem;

// ---- curve tables: index,s,x,y,kappa,theta ----

void write_curve_csv(std::ostream& out, const PlanarCurve& curve, int n);
void write_curve_csv(const fs::path& path, const PlanarCurve& curve, int n);
PlanarCurve read_curve_csv(std::istream& in, Topology topology);
PlanarCurve read_curve_csv(const fs::path& path, Topology topology);

std::string to_string(Topology topology);
Topology topology_from_string(const std::string& name);

// ---- run configuration ----

struct SolitonSection {
  std::string kind = "shrinker";
  int n = 2;
  int k = 0;
  double theta_bar = 0;
  double B = 1;
  int p = 1, q = 3;
  double alpha = 0.7853981633974483;
  double r_min = 1, r_max = 10;   // cones
  double alpha_margin = 0.05;     // special Lagrangians: stop this fraction short of +-pi/2n
  double spacing = 0.01;
  double x_max = 1.4;             // grim reaper: sample (-x_max, x_max)
  bool figure = true;
};

struct FlowSection {
  std::string initial = "circle";  // circle | neves | special-lagrangian | shrinker | grim-reaper | file
  double radius = 1;
  double beta = 1.8849555921538759;  // 0.6 pi
  int samples = 400;
  double r_max = 100;
  double B = 1;
  int k = 0;
  double theta_bar = 0;
  int p = 1, q = 3;
  double x_max = 1.4;
  std::string curve_file;
  std::string topology = "open-arc";
  int max_snapshot_files = 400;
  FlowConfig config;
  bool boundary_set = false;  // config named a boundary; otherwise the generator picks one
};

struct BlowupSection {
  std::string trajectory;          // directory written by the flow command
  double s = -1;
  std::vector<double> scale_fractions{0.25, 0.5, 1.0};  // of the largest admissible Type I scale
  double annulus_inner = 5, annulus_outer = 10;
  double fit_radius = 1;
  double residual_cap = 0.2;
  double tolerance = 0.02;
};

struct SymmetrySection {
  std::string preset = "so(3)";
  int n = 3;
  std::string basis_file;  // catalog-format action; overrides the preset
  int samples = 100;
};

struct AtlasSection {
  int n = 2;
  int q_max = 13;
  int workers = 4;
  bool figure = true;
};

struct RunConfig {
  SolitonSection soliton;
  FlowSection flow;
  BlowupSection blowup;
  SymmetrySection symmetry;
  AtlasSection atlas;
  std::uint64_t seed = 7;
  std::string out = "out";
  bool verbose = false;
};

/// Rejects unknown keys and out-of-domain values, reporting all failures at once.
RunConfig parse_run_config(const Json& doc);
RunConfig load_run_config(const fs::path& path);

// ---- reports ----

Json to_json(const SolitonSpec& spec);
Json to_json(const FlowConfig& config);
Json to_json(const SummaryRow& row);
Json to_json(const SingularityReport& report);
Json to_json(const BlowupReport& report);
Json to_json(const ConeFit& fit);
Json to_json(const SpecialLagrangianFit& fit);
Json to_json(const GroupAction& action);

FlowConfig flow_config_from_json(const Json& j, std::vector<std::string>& failures);

/// Catalog entry (name, n, basis as row-major [re, im] pairs, expected_m, base point) back to an action.
GroupAction group_action_from_json(const Json& j);

/// Indented key: value rendering of a JSON tree.
std::string to_text_tree(const Json& doc);

/// Writes name.json and name.txt (same content) into dir.
void write_report(const fs::path& dir, const std::string& name, const Json& doc);
void write_json(const fs::path& path, const Json& doc);
Json read_json(const fs::path& path);

// ---- figures ----

struct SvgLayer {
  std::vector<PlanarCurve> curves;
  std::string color = "#1f77b4";
  double width = 1.5;
  std::string label;
};

/// Fixed 800x800 canvas centred on the origin, showing the square [-view, view]^2.
std::string render_svg(const std::vector<SvgLayer>& layers, double view, const std::string& title = "");
void write_svg(const fs::path& path, const std::vector<SvgLayer>& layers, double view, const std::string& title = "");

/// Grid of panels, one curve each, with a caption per panel.
std::string render_gallery(const std::vector<PlanarCurve>& curves, const std::vector<std::string>& captions,
                           int columns);

/// Stable palette colour for component i.
std::string palette(std::size_t i);

}  // namespace lmcf
