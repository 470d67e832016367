#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "forge/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"forge: exact invariants of toric Sasaki-Einstein constructions"};
  app.require_subcommand(1);

  std::string path;
  bool json_out = false;

  auto* weights = app.add_subcommand("weights", "weight-matrix admissibility and cohomology");
  weights->add_option("file", path, "weight_matrix document")->required();
  weights->add_flag("--json", json_out, "machine-readable output");

  forge::cli::FanFlags fan_flags;
  auto* fan = app.add_subcommand("fan", "invariants of an augmented fan");
  fan->add_option("file", path, "augmented_fan document")->required();
  fan->add_flag("--einstein", fan_flags.einstein, "Einstein verdict");
  fan->add_flag("--volume", fan_flags.volume, "Vol(Sigma_-k)");
  fan->add_flag("--index", fan_flags.index, "orbifold Fano index");
  fan->add_flag("--smooth", fan_flags.smooth, "total-space smoothness");
  fan->add_flag("--spin", fan_flags.spin, "w_2 = 0 test");
  fan->add_flag("--json", fan_flags.json, "machine-readable output");

  std::optional<std::string> emit_fan;
  auto* isotropy = app.add_subcommand("isotropy", "toric ASD Einstein classification chain");
  isotropy->add_option("file", path, "isotropy_data document")->required();
  std::string emit_fan_path;
  auto* emit_opt = isotropy->add_option("--emit-fan", emit_fan_path, "write the Fano fan document");
  isotropy->add_flag("--json", json_out, "machine-readable output");

  auto* join = app.add_subcommand("join", "Sasakian join arithmetic");
  join->add_option("file", path, "join_spec document")->required();
  join->add_flag("--json", json_out, "machine-readable output");

  std::string svg_out = "-";
  bool polytope_mode = false;
  auto* render = app.add_subcommand("render", "deterministic SVG of a fan or polytope");
  render->add_option("file", path, "fan or isotropy document")->required();
  render->add_option("--svg", svg_out, "output file ('-' for stdout)");
  render->add_flag("--polytope", polytope_mode, "render Sigma_h instead of the fan");

  forge::cli::MetricFlags metric_flags;
  double tol_opt = 0;
  auto* metric = app.add_subcommand("metric", "Guillemin metric lab checks");
  metric->add_option("file", path, "augmented_fan document (Fano)")->required();
  metric->add_flag("--check-volume", metric_flags.check_volume, "grid quadrature of det Hess F");
  metric->add_flag("--soliton", metric_flags.soliton, "solve for the soliton vector field");
  metric->add_option("--grid", metric_flags.grid, "quadrature grid resolution");
  metric->add_option("--cutoff", metric_flags.cutoff, "quadrature cutoff R");
  auto* tol = metric->add_option("--tolerance", tol_opt, "duality tolerance override");

  CLI11_PARSE(app, argc, argv);

  if (weights->parsed())
    return forge::cli::cmd_weights(path, json_out, std::cout, std::cerr);
  if (fan->parsed()) return forge::cli::cmd_fan(path, fan_flags, std::cout, std::cerr);
  if (isotropy->parsed()) {
    if (emit_opt->count() > 0) emit_fan = emit_fan_path;
    return forge::cli::cmd_isotropy(path, emit_fan, json_out, std::cout, std::cerr);
  }
  if (join->parsed()) return forge::cli::cmd_join(path, json_out, std::cout, std::cerr);
  if (render->parsed())
    return forge::cli::cmd_render(path, svg_out, polytope_mode, std::cout, std::cerr);
  if (metric->parsed()) {
    if (tol->count() > 0) metric_flags.tolerance = tol_opt;
    return forge::cli::cmd_metric(path, metric_flags, std::cout, std::cerr);
  }
  return 0;
}
