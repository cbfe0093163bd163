#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "ellsol/errors.hpp"

// Exit codes: 0 success, 1 verification failure, 2 usage or config problem,
// 3 numerical domain error.
int main(int argc, char** argv) {
  CLI::App app{"static elliptic multi-soliton laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "config file (ini style)");

  double g2 = 0.3, g3 = 0.7;
  bool g2_set = false, g3_set = false;
  app.add_option("--g2", g2, "quadratic invariant")->each([&](const std::string&) {
    g2_set = true;
  });
  app.add_option("--g3", g3, "cubic invariant")->each([&](const std::string&) {
    g3_set = true;
  });

  std::string out_dir;
  app.add_option("--out,--out-dir", out_dir, "output directory");

  std::vector<std::string> params;
  app.add_option("--param", params, "override a config key, key=value")
      ->take_all()
      ->expected(-1);
  std::string grid_triple;
  app.add_option("--grid", grid_triple, "residual grid as min,max,n");
  std::vector<std::string> tols;
  app.add_option("--tol", tols, "override a tolerance, name=value")
      ->take_all()
      ->expected(-1);

  auto* fig = app.add_subcommand("figure", "emit one of the canned profiles");
  std::string fig_name;
  fig->add_option("name", fig_name, "fig1, fig2 or fig3")->required();
  bool fig_svg = false;
  fig->add_flag("--svg", fig_svg, "also write an svg plot");

  auto* bld = app.add_subcommand("build", "sample an N-soliton profile");
  std::vector<double> deltas;
  bld->add_option("--deltas", deltas, "spectral shifts")->expected(-1)->delimiter(',');
  std::string out_name;
  bld->add_option("--name", out_name, "output basename (default: solution)");
  bool bld_svg = false;
  bld->add_flag("--svg", bld_svg, "also write an svg plot");

  auto* ver = app.add_subcommand("verify", "run the residual suite");
  std::vector<double> ver_deltas;
  ver->add_option("--deltas", ver_deltas, "spectral shifts")->expected(-1)->delimiter(',');
  double b_value = 0.0;
  bool b_set = false;
  ver->add_option("--b", b_value, "frame velocity for the time check")
      ->each([&](const std::string&) { b_set = true; });

  auto* ev = app.add_subcommand("eval", "evaluate one kernel quantity");
  std::string ev_what;
  ev->add_option("what", ev_what, "wp, zeta or sn")->required();
  double ev_x = 0.0;
  ev->add_option("x", ev_x, "argument")->required();

  auto* rt = app.add_subcommand("roots", "print the cubic roots");

  try {
    app.parse(argc, argv);

    ellsol::cli::RunConfig cfg;
    if (!config_path.empty()) cfg = ellsol::cli::load_config(config_path);
    for (const auto& kv : params) ellsol::cli::apply_param(cfg, kv);
    if (!grid_triple.empty()) ellsol::cli::apply_grid(cfg, grid_triple);
    for (const auto& kv : tols) ellsol::cli::apply_tolerance(cfg, kv);
    if (g2_set) cfg.g2 = g2;
    if (g3_set) cfg.g3 = g3;
    if (!out_dir.empty()) cfg.out_dir = out_dir;

    if (fig->parsed()) return ellsol::cli::run_figure(fig_name, cfg, fig_svg);
    if (bld->parsed()) {
      if (!deltas.empty()) cfg.deltas = deltas;
      return ellsol::cli::run_build(cfg, out_name, bld_svg);
    }
    if (ver->parsed()) {
      if (!ver_deltas.empty()) cfg.deltas = ver_deltas;
      if (b_set) cfg.b = b_value;
      return ellsol::cli::run_verify(cfg);
    }
    if (ev->parsed()) return ellsol::cli::run_eval(ev_what, ev_x, cfg);
    if (rt->parsed()) return ellsol::cli::run_roots(cfg);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ellsol::cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const ellsol::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
