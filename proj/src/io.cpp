#include "lmcf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "lmcf/errors.hpp"

namespace lmcf {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Reads keys of one config section, remembering which were consumed.
class Section {
 public:
  Section(const Json& doc, std::string name, std::vector<std::string>& failures)
      : name_(std::move(name)), failures_(failures) {
    if (doc.contains(name_)) {
      if (doc[name_].is_object())
        obj_ = &doc[name_];
      else
        failures_.push_back(name_ + ": must be an object");
    }
  }
  Section(const Json* obj, std::string name, std::vector<std::string>& failures)
      : obj_(obj), name_(std::move(name)), failures_(failures) {}

  template <typename T>
  void get(const char* key, T& value) {
    seen_.insert(key);
    if (!obj_ || !obj_->contains(key)) return;
    const Json& v = (*obj_)[key];
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) throw std::runtime_error("not a number");
      } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
        if (!v.is_number_integer()) throw std::runtime_error("not an integer");
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw std::runtime_error("not a boolean");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw std::runtime_error("not a string");
      }
      value = v.get<T>();
    } catch (const std::exception& e) {
      failures_.push_back(name_ + "." + key + ": " + e.what());
    }
  }

  void finish() {
    if (!obj_) return;
    for (auto it = obj_->begin(); it != obj_->end(); ++it)
      if (!seen_.count(it.key())) failures_.push_back(name_ + ": unknown key '" + it.key() + "'");
  }

  void mark(const char* key) { seen_.insert(key); }
  const Json* object() const { return obj_; }

 private:
  const Json* obj_ = nullptr;
  std::string name_;
  std::vector<std::string>& failures_;
  std::set<std::string> seen_;
};

void check(bool ok, const std::string& message, std::vector<std::string>& failures) {
  if (!ok) failures.push_back(message);
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

double number_or_inf(const Json& v) {
  if (v.is_string() && (v == "inf" || v == "infinity")) return std::numeric_limits<double>::infinity();
  return v.get<double>();
}

void render_tree(const Json& j, int depth, std::ostringstream& out) {
  const std::string pad(2 * depth, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const Json& v = *it;
    if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
      out << pad << key << ":\n";
      render_tree(v, depth + 1, out);
    } else if (v.is_array()) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].dump();
      out << "]\n";
    } else {
      out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string to_string(Topology topology) {
  return topology == Topology::closed_loop ? "closed-loop" : "open-arc";
}

Topology topology_from_string(const std::string& name) {
  if (name == "closed-loop") return Topology::closed_loop;
  if (name == "open-arc") return Topology::open_arc;
  throw DomainError("unknown topology '" + name + "'");
}

void write_curve_csv(std::ostream& out, const PlanarCurve& curve, int n) {
  const auto diag = curvature_and_radial(curve);
  AngleProfile<double> theta;
  bool have_theta = true;
  try {
    theta = lagrangian_angle(curve, n);
  } catch (const MeshError&) {
    have_theta = false;
  }
  out << "index,s,x,y,kappa,theta\n";
  for (Eigen::Index i = 0; i < curve.size(); ++i) {
    out << i << ',' << fmt17(diag.arclength[i]) << ',' << fmt17(curve[i].real()) << ',' << fmt17(curve[i].imag())
        << ',' << fmt17(diag.kappa[i]) << ',' << (have_theta ? fmt17(theta.theta[i]) : std::string("nan")) << '\n';
  }
}

void write_curve_csv(const fs::path& path, const PlanarCurve& curve, int n) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_curve_csv(out, curve, n);
}

PlanarCurve read_curve_csv(std::istream& in, Topology topology) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError({"curve table is empty"});
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index,s,x,y,kappa,theta") throw ValidationError({"curve table header mismatch: '" + line + "'"});
  std::vector<std::complex<double>> pts;
  std::vector<std::string> failures;
  long row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) {
      failures.push_back("row " + std::to_string(row) + ": expected 6 columns");
      continue;
    }
    try {
      pts.emplace_back(std::stod(cells[2]), std::stod(cells[3]));
    } catch (const std::exception&) {
      failures.push_back("row " + std::to_string(row) + ": unreadable coordinates");
    }
  }
  if (!failures.empty()) throw ValidationError(failures);
  ComplexVector<double> nodes(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) nodes[static_cast<Eigen::Index>(i)] = pts[i];
  return PlanarCurve(std::move(nodes), topology);
}

PlanarCurve read_curve_csv(const fs::path& path, Topology topology) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return read_curve_csv(in, topology);
}

FlowConfig flow_config_from_json(const Json& j, std::vector<std::string>& failures) {
  FlowConfig c;
  Section s(&j, "flow.config", failures);
  s.get("n", c.n);
  s.get("cfl", c.cfl);
  s.get("redistribution_period", c.redistribution_period);
  s.get("r_floor", c.r_floor);
  s.get("t_max", c.t_max);
  s.get("spacing", c.spacing);
  s.get("relative_spacing", c.relative_spacing);
  s.get("snapshot_every", c.snapshot_every);
  s.get("snapshot_radius_ratio", c.snapshot_radius_ratio);
  s.get("max_steps", c.max_steps);
  for (const char* key : {"kappa_ceiling", "collar_radius"}) {
    double& target = std::string(key) == "kappa_ceiling" ? c.kappa_ceiling : c.collar_radius;
    s.mark(key);
    if (j.contains(key)) {
      try {
        target = number_or_inf(j[key]);
      } catch (const std::exception&) {
        failures.push_back(std::string("flow.config.") + key + ": not a number");
      }
    }
  }
  std::string boundary = to_string(c.boundary);
  s.get("boundary", boundary);
  try {
    c.boundary = boundary_from_string(boundary);
  } catch (const DomainError& e) {
    failures.push_back(std::string("flow.config.boundary: ") + e.what());
  }
  s.finish();
  try {
    c.validate();
  } catch (const DomainError& e) {
    failures.push_back(e.what());
  }
  return c;
}

RunConfig parse_run_config(const Json& doc) {
  std::vector<std::string> failures;
  RunConfig rc;
  if (!doc.is_object()) throw ValidationError({"configuration must be an object"});

  static const std::set<std::string> top{"soliton", "flow", "blowup", "symmetry", "atlas", "seed", "out", "verbose"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!top.count(it.key())) failures.push_back("unknown key '" + it.key() + "'");
  if (doc.contains("seed")) {
    if (doc["seed"].is_number_unsigned() || (doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0))
      rc.seed = doc["seed"].get<std::uint64_t>();
    else
      failures.push_back("seed: must be a non-negative integer");
  }
  if (doc.contains("out")) {
    if (doc["out"].is_string())
      rc.out = doc["out"];
    else
      failures.push_back("out: must be a string");
  }
  if (doc.contains("verbose")) {
    if (doc["verbose"].is_boolean())
      rc.verbose = doc["verbose"];
    else
      failures.push_back("verbose: must be a boolean");
  }

  {
    auto& x = rc.soliton;
    Section s(doc, "soliton", failures);
    s.get("kind", x.kind);
    s.get("n", x.n);
    s.get("k", x.k);
    s.get("theta_bar", x.theta_bar);
    s.get("B", x.B);
    s.get("p", x.p);
    s.get("q", x.q);
    s.get("alpha", x.alpha);
    s.get("r_min", x.r_min);
    s.get("r_max", x.r_max);
    s.get("alpha_margin", x.alpha_margin);
    s.get("spacing", x.spacing);
    s.get("x_max", x.x_max);
    s.get("figure", x.figure);
    s.finish();
    try {
      soliton_kind_from_string(x.kind);
    } catch (const DomainError& e) {
      failures.push_back(std::string("soliton.kind: ") + e.what());
    }
    check(x.n >= 1, "soliton.n: must be >= 1", failures);
    check(x.spacing > 0, "soliton.spacing: must be positive", failures);
    check(x.alpha_margin > 0 && x.alpha_margin < 1, "soliton.alpha_margin: must lie in (0, 1)", failures);
    check(x.x_max > 0 && x.x_max < std::numbers::pi / 2, "soliton.x_max: must lie in (0, pi/2)", failures);
  }
  {
    auto& x = rc.flow;
    Section s(doc, "flow", failures);
    s.get("initial", x.initial);
    s.get("radius", x.radius);
    s.get("beta", x.beta);
    s.get("samples", x.samples);
    s.get("r_max", x.r_max);
    s.get("B", x.B);
    s.get("k", x.k);
    s.get("theta_bar", x.theta_bar);
    s.get("p", x.p);
    s.get("q", x.q);
    s.get("x_max", x.x_max);
    s.get("curve_file", x.curve_file);
    s.get("topology", x.topology);
    s.get("max_snapshot_files", x.max_snapshot_files);
    Json dummy;
    s.get("config", dummy);
    if (s.object() && s.object()->contains("config")) {
      if ((*s.object())["config"].is_object()) {
        x.config = flow_config_from_json((*s.object())["config"], failures);
        x.boundary_set = (*s.object())["config"].contains("boundary");
      }
      else
        failures.push_back("flow.config: must be an object");
    }
    s.finish();
    static const std::set<std::string> initials{"circle", "neves", "special-lagrangian", "shrinker", "grim-reaper",
                                                "file"};
    check(initials.count(x.initial) > 0, "flow.initial: unknown generator '" + x.initial + "'", failures);
    check(x.radius > 0, "flow.radius: must be positive", failures);
    check(x.samples >= 8, "flow.samples: must be >= 8", failures);
    check(x.max_snapshot_files >= 2, "flow.max_snapshot_files: must be >= 2", failures);
    check(x.initial != "file" || !x.curve_file.empty(), "flow.curve_file: required for initial = file", failures);
    check(x.topology == "open-arc" || x.topology == "closed-loop", "flow.topology: open-arc or closed-loop",
          failures);
  }
  {
    auto& x = rc.blowup;
    Section s(doc, "blowup", failures);
    s.get("trajectory", x.trajectory);
    s.get("s", x.s);
    s.get("scale_fractions", x.scale_fractions);
    s.get("annulus_inner", x.annulus_inner);
    s.get("annulus_outer", x.annulus_outer);
    s.get("fit_radius", x.fit_radius);
    s.get("residual_cap", x.residual_cap);
    s.get("tolerance", x.tolerance);
    s.finish();
    check(x.s < 0, "blowup.s: must be negative", failures);
    check(!x.scale_fractions.empty(), "blowup.scale_fractions: must not be empty", failures);
    for (double f : x.scale_fractions) check(f > 0 && f <= 1, "blowup.scale_fractions: entries in (0, 1]", failures);
    check(x.annulus_inner > 0 && x.annulus_outer > x.annulus_inner, "blowup.annulus: need 0 < inner < outer",
          failures);
    check(x.fit_radius > 0, "blowup.fit_radius: must be positive", failures);
  }
  {
    auto& x = rc.symmetry;
    Section s(doc, "symmetry", failures);
    s.get("preset", x.preset);
    s.get("n", x.n);
    s.get("basis_file", x.basis_file);
    s.get("samples", x.samples);
    s.finish();
    check(x.samples >= 1, "symmetry.samples: must be >= 1", failures);
  }
  {
    auto& x = rc.atlas;
    Section s(doc, "atlas", failures);
    s.get("n", x.n);
    s.get("q_max", x.q_max);
    s.get("workers", x.workers);
    s.get("figure", x.figure);
    s.finish();
    check(x.n >= 1, "atlas.n: must be >= 1", failures);
    check(x.q_max >= 1, "atlas.q_max: must be >= 1", failures);
    check(x.workers >= 1, "atlas.workers: must be >= 1", failures);
  }
  if (!failures.empty()) throw ValidationError(failures);
  return rc;
}

RunConfig load_run_config(const fs::path& path) {
  Json doc;
  try {
    doc = read_json(path);
  } catch (const Json::parse_error& e) {
    throw ValidationError({"config " + path.string() + ": " + e.what()});
  }
  return parse_run_config(doc);
}

Json to_json(const SolitonSpec& spec) {
  Json j{{"kind", to_string(spec.kind)}, {"n", spec.n}};
  switch (spec.kind) {
    case SolitonKind::cone:
      j["k"] = spec.k;
      j["theta_bar"] = spec.theta_bar;
      break;
    case SolitonKind::special_lagrangian:
      j["k"] = spec.k;
      j["theta_bar"] = spec.theta_bar;
      j["B"] = spec.B;
      break;
    case SolitonKind::shrinker:
      j["p"] = spec.p;
      j["q"] = spec.q;
      j["lambda"] = spec.lambda;
      j["r_apsis"] = spec.r_apsis;
      break;
    case SolitonKind::expander:
      j["alpha"] = spec.alpha;
      j["lambda"] = spec.lambda;
      j["r_apsis"] = spec.r_apsis;
      break;
    case SolitonKind::grim_reaper:
      break;
  }
  return j;
}

Json to_json(const FlowConfig& c) {
  auto num = [](double v) -> Json { return std::isinf(v) ? Json("inf") : Json(v); };
  return {{"n", c.n},
          {"cfl", c.cfl},
          {"redistribution_period", c.redistribution_period},
          {"r_floor", c.r_floor},
          {"kappa_ceiling", num(c.kappa_ceiling)},
          {"t_max", c.t_max},
          {"boundary", to_string(c.boundary)},
          {"spacing", c.spacing},
          {"relative_spacing", c.relative_spacing},
          {"collar_radius", num(c.collar_radius)},
          {"snapshot_every", c.snapshot_every},
          {"snapshot_radius_ratio", c.snapshot_radius_ratio},
          {"max_steps", c.max_steps}};
}

Json to_json(const SummaryRow& r) {
  return {{"t", r.t},         {"max_kappa", r.max_kappa}, {"min_r", r.min_r},
          {"theta_min", r.theta_min}, {"theta_max", r.theta_max}, {"h2_ratio", r.h2_ratio},
          {"a2_ratio", r.a2_ratio}, {"min_r_point", complex_json(r.min_r_point)}, {"nodes", r.nodes}};
}

Json to_json(const SingularityReport& r) {
  auto num = [](double v) -> Json { return std::isfinite(v) ? Json(v) : Json(nullptr); };
  return {{"triggered", r.triggered},
          {"T_est", num(r.T_est)},
          {"location", complex_json(r.location)},
          {"location_confirmed", r.location_confirmed},
          {"sigma", num(r.sigma)},
          {"sigma_fit_r2", r.sigma_fit_r2},
          {"decade_samples", r.decade_samples},
          {"type_evidence", r.type_evidence}};
}

Json to_json(const BlowupReport& r) {
  auto num = [](double v) -> Json { return std::isfinite(v) ? Json(v) : Json(nullptr); };
  return {{"mode", to_string(r.mode)}, {"theta_bar", r.theta_bar},     {"k", r.k},
          {"B", num(r.B)},             {"residual", r.residual},       {"consistency", r.consistency},
          {"gap", num(r.gap)},         {"translation", complex_json(r.translation)}};
}

Json to_json(const ConeFit& f) {
  return {{"n", f.n},
          {"theta_bar", f.theta_bar},
          {"k", f.k},
          {"residual", f.residual},
          {"lower_arg", f.lower_arg},
          {"upper_arg", f.upper_arg},
          {"gap", f.gap},
          {"nodes_used", f.nodes_used}};
}

Json to_json(const SpecialLagrangianFit& f) {
  return {{"n", f.n},
          {"B", f.B},
          {"theta_bar", f.theta_bar},
          {"k", f.k},
          {"rotation", f.rotation},
          {"translation", complex_json(f.translation)},
          {"residual", f.residual},
          {"peak", complex_json(f.peak)},
          {"nodes_used", f.nodes_used}};
}

Json to_json(const GroupAction& a) {
  Json basis = Json::array();
  for (const CMatrix& x : a.basis) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < x.cols(); ++k) row.push_back(complex_json(x(i, k)));
      rows.push_back(row);
    }
    basis.push_back(rows);
  }
  Json base = Json::array();
  for (Eigen::Index i = 0; i < a.base_point.size(); ++i) base.push_back(complex_json(a.base_point[i]));
  return {{"name", a.name},
          {"n", a.n_ambient},
          {"basis", basis},
          {"expected_m", a.expected_m ? Json(*a.expected_m) : Json(nullptr)},
          {"base_point", base}};
}

GroupAction group_action_from_json(const Json& j) {
  std::vector<std::string> failures;
  GroupAction a;
  static const std::set<std::string> keys{"name", "n", "basis", "expected_m", "base_point"};
  if (!j.is_object()) throw ValidationError({"action must be an object"});
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!keys.count(it.key())) failures.push_back("unknown key '" + it.key() + "'");
  auto cnum = [&failures](const Json& v, const std::string& where) -> std::complex<double> {
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
      return {v[0].get<double>(), v[1].get<double>()};
    failures.push_back(where + ": expected [re, im]");
    return {};
  };
  if (j.contains("name") && j["name"].is_string())
    a.name = j["name"];
  else
    failures.push_back("name: required string");
  if (j.contains("n") && j["n"].is_number_integer())
    a.n_ambient = j["n"];
  else
    failures.push_back("n: required integer");
  if (j.contains("basis") && j["basis"].is_array()) {
    for (std::size_t b = 0; b < j["basis"].size(); ++b) {
      const Json& m = j["basis"][b];
      const std::string where = "basis[" + std::to_string(b) + "]";
      if (!m.is_array() || m.empty() || !m[0].is_array()) {
        failures.push_back(where + ": expected rows of [re, im] pairs");
        continue;
      }
      CMatrix x(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m[0].size()));
      bool ok = true;
      for (std::size_t r = 0; r < m.size() && ok; ++r) {
        if (!m[r].is_array() || m[r].size() != m[0].size()) {
          failures.push_back(where + ": ragged rows");
          ok = false;
          break;
        }
        for (std::size_t c = 0; c < m[r].size(); ++c)
          x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
              cnum(m[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
      if (ok) a.basis.push_back(x);
    }
  } else {
    failures.push_back("basis: required array");
  }
  if (j.contains("expected_m") && !j["expected_m"].is_null()) {
    if (j["expected_m"].is_number_integer())
      a.expected_m = j["expected_m"].get<int>();
    else
      failures.push_back("expected_m: integer or null");
  }
  if (j.contains("base_point") && j["base_point"].is_array()) {
    a.base_point.resize(static_cast<Eigen::Index>(j["base_point"].size()));
    for (std::size_t i = 0; i < j["base_point"].size(); ++i)
      a.base_point[static_cast<Eigen::Index>(i)] = cnum(j["base_point"][i], "base_point[" + std::to_string(i) + "]");
  }
  for (auto& f : a.invariant_failures()) failures.push_back(f);
  if (!failures.empty()) throw ValidationError(failures);
  return a;
}

std::string to_text_tree(const Json& doc) {
  std::ostringstream out;
  render_tree(doc, 0, out);
  return out.str();
}

void write_json(const fs::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return Json::parse(in);
}

void write_report(const fs::path& dir, const std::string& name, const Json& doc) {
  fs::create_directories(dir);
  write_json(dir / (name + ".json"), doc);
  std::ofstream out(dir / (name + ".txt"), std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / (name + ".txt")).string());
  out << to_text_tree(doc);
}

std::string palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                 "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
  return colors[i % (sizeof colors / sizeof *colors)];
}

namespace {

constexpr double canvas = 800;

void polyline(std::ostringstream& out, const PlanarCurve& c, double cx, double cy, double scale,
              const std::string& color, double width) {
  out << (c.closed() ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
      << fmt6(width) << "\" points=\"";
  for (Eigen::Index i = 0; i < c.size(); ++i)
    out << (i ? " " : "") << fmt6(cx + scale * c[i].real()) << ',' << fmt6(cy - scale * c[i].imag());
  out << "\"/>\n";
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, double view, const std::string& title) {
  if (!(view > 0)) throw DomainError("render_svg: view radius must be positive");
  std::ostringstream out;
  const double half = canvas / 2, scale = half / view;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  out << "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#cccccc\"/>\n";
  out << "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#cccccc\"/>\n";
  for (const SvgLayer& layer : layers)
    for (const PlanarCurve& c : layer.curves) polyline(out, c, half, half, scale, layer.color, layer.width);
  int row = 0;
  if (!title.empty()) out << "<text x=\"12\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
  for (const SvgLayer& layer : layers)
    if (!layer.label.empty())
      out << "<text x=\"12\" y=\"" << 48 + 18 * row++ << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\""
          << layer.color << "\">" << layer.label << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

void write_svg(const fs::path& path, const std::vector<SvgLayer>& layers, double view, const std::string& title) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << render_svg(layers, view, title);
}

std::string render_gallery(const std::vector<PlanarCurve>& curves, const std::vector<std::string>& captions,
                           int columns) {
  if (columns < 1) throw DomainError("render_gallery: columns must be >= 1");
  const int rows = std::max<int>(1, static_cast<int>((curves.size() + columns - 1) / columns));
  const double cell = canvas / columns;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" << fmt6(cell * rows)
      << "\" viewBox=\"0 0 800 " << fmt6(cell * rows) << "\">\n";
  out << "<rect width=\"800\" height=\"" << fmt6(cell * rows) << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const double cx = cell * (static_cast<double>(i % columns) + 0.5);
    const double cy = cell * (static_cast<double>(i / columns) + 0.5);
    const double view = std::max(curves[i].max_radius(), 1e-12) * 1.1;
    polyline(out, curves[i], cx, cy, 0.42 * cell / view, palette(i), 1.0);
    if (i < captions.size())
      out << "<text x=\"" << fmt6(cx) << "\" y=\"" << fmt6(cy + 0.48 * cell)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << captions[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lmcf
