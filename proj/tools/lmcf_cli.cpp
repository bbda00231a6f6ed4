// lmcf: soliton | flow | blowup | symmetry | atlas
//
// A run is described by one JSON document. --config loads it; the per-command flags below are
// patched on top before validation, so `lmcf soliton --kind shrinker --p 1 --q 3` needs no file.

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lmcf/commands.hpp"
#include "lmcf/errors.hpp"

namespace {

using lmcf::Json;

template <typename T>
void put(Json& doc, const char* section, const char* key, const std::optional<T>& v) {
  if (v) doc[section][key] = *v;
}

template <typename T>
void put_config(Json& doc, const char* key, const std::optional<T>& v) {
  if (v) doc["flow"]["config"][key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Lagrangian mean curvature flow laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  bool verbose = false;
  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--verbose", verbose, "progress on stderr");

  // soliton
  auto* sol = app.add_subcommand("soliton", "sample a cone, special Lagrangian, shrinker, expander or grim reaper");
  std::optional<std::string> kind;
  std::optional<int> s_n, s_k, s_p, s_q;
  std::optional<double> s_B, s_theta, s_alpha, s_spacing;
  sol->add_option("--kind", kind);
  sol->add_option("--n", s_n);
  sol->add_option("--k", s_k);
  sol->add_option("--p", s_p);
  sol->add_option("--q", s_q);
  sol->add_option("--B", s_B);
  sol->add_option("--theta", s_theta, "mean Lagrangian angle theta_bar");
  sol->add_option("--alpha", s_alpha, "expander asymptote span");
  sol->add_option("--spacing", s_spacing);

  // flow
  auto* flow = app.add_subcommand("flow", "evolve a profile curve");
  std::optional<std::string> initial, boundary, curve_file, topology;
  std::optional<int> f_n, f_samples, f_p, f_q;
  std::optional<double> f_radius, f_beta, f_tmax, f_rfloor, f_spacing, f_rel, f_B, f_theta;
  flow->add_option("--initial", initial, "circle | neves | special-lagrangian | shrinker | grim-reaper | file");
  flow->add_option("--n", f_n);
  flow->add_option("--radius", f_radius);
  flow->add_option("--beta", f_beta);
  flow->add_option("--samples", f_samples);
  flow->add_option("--p", f_p);
  flow->add_option("--q", f_q);
  flow->add_option("--B", f_B);
  flow->add_option("--theta", f_theta);
  flow->add_option("--t-max", f_tmax);
  flow->add_option("--r-floor", f_rfloor);
  flow->add_option("--spacing", f_spacing);
  flow->add_option("--relative-spacing", f_rel);
  flow->add_option("--boundary", boundary, "closed | pinned-asymptotes | free-ends");
  flow->add_option("--curve", curve_file, "initial curve CSV for --initial file");
  flow->add_option("--topology", topology, "open-arc | closed-loop");

  // blowup
  auto* blow = app.add_subcommand("blowup", "Type I and Type II rescalings of a flow trajectory");
  std::optional<std::string> trajectory;
  blow->add_option("--trajectory", trajectory, "directory written by `flow`");

  // symmetry
  auto* sym = app.add_subcommand("symmetry", "moment map, orbit and cyclic-symmetry checks for a group action");
  std::optional<std::string> preset, basis;
  std::optional<int> y_n, y_samples;
  sym->add_option("--preset", preset, "so(n) | torus(n) | su2-sym3 | s1-so-so(p,q)");
  sym->add_option("--n", y_n);
  sym->add_option("--basis", basis, "JSON action in catalog format");
  sym->add_option("--samples", y_samples);

  // atlas
  auto* atlas = app.add_subcommand("atlas", "all closed shrinkers for one n up to a petal bound");
  std::optional<int> a_n, a_qmax, a_workers;
  atlas->add_option("--n", a_n);
  atlas->add_option("--q-max", a_qmax);
  atlas->add_option("--workers", a_workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json doc = config_path.empty() ? Json::object() : lmcf::read_json(config_path);
    if (!doc.is_object()) throw lmcf::ValidationError({"configuration must be an object"});
    if (out_dir) doc["out"] = *out_dir;
    if (seed) doc["seed"] = *seed;
    if (verbose) doc["verbose"] = true;
    put(doc, "soliton", "kind", kind);
    put(doc, "soliton", "n", s_n);
    put(doc, "soliton", "k", s_k);
    put(doc, "soliton", "p", s_p);
    put(doc, "soliton", "q", s_q);
    put(doc, "soliton", "B", s_B);
    put(doc, "soliton", "theta_bar", s_theta);
    put(doc, "soliton", "alpha", s_alpha);
    put(doc, "soliton", "spacing", s_spacing);
    put(doc, "flow", "initial", initial);
    put(doc, "flow", "radius", f_radius);
    put(doc, "flow", "beta", f_beta);
    put(doc, "flow", "samples", f_samples);
    put(doc, "flow", "p", f_p);
    put(doc, "flow", "q", f_q);
    put(doc, "flow", "B", f_B);
    put(doc, "flow", "theta_bar", f_theta);
    put(doc, "flow", "curve_file", curve_file);
    put(doc, "flow", "topology", topology);
    put_config(doc, "n", f_n);
    put_config(doc, "t_max", f_tmax);
    put_config(doc, "r_floor", f_rfloor);
    put_config(doc, "spacing", f_spacing);
    put_config(doc, "relative_spacing", f_rel);
    put_config(doc, "boundary", boundary);
    put(doc, "blowup", "trajectory", trajectory);
    put(doc, "symmetry", "preset", preset);
    put(doc, "symmetry", "n", y_n);
    put(doc, "symmetry", "basis_file", basis);
    put(doc, "symmetry", "samples", y_samples);
    put(doc, "atlas", "n", a_n);
    put(doc, "atlas", "q_max", a_qmax);
    put(doc, "atlas", "workers", a_workers);

    const lmcf::RunConfig rc = lmcf::parse_run_config(doc);
    const lmcf::fs::path out = rc.out;
    Json report;
    if (*sol) report = lmcf::cmd_soliton(rc, out);
    else if (*flow) report = lmcf::cmd_flow(rc, out);
    else if (*blow) report = lmcf::cmd_blowup(rc, out);
    else if (*sym) report = lmcf::cmd_symmetry(rc, out);
    else if (*atlas) report = lmcf::cmd_atlas(rc, out);
    if (rc.verbose) std::cout << lmcf::to_text_tree(report);
    std::cout << "wrote " << out.string() << '\n';
    return 0;
  } catch (const lmcf::ValidationError& e) {
    std::cerr << "invalid configuration:\n";
    for (const auto& f : e.failures()) std::cerr << "  " << f << '\n';
    return 2;
  } catch (const lmcf::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const lmcf::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
