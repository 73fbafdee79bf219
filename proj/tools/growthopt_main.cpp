#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "growthopt/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"first-order convex solvers with growth-aware restarts"};
  app.require_subcommand(1);

  std::string run_config;
  CLI::App* run = app.add_subcommand("run", "execute one experiment config");
  run->add_option("config", run_config, "experiment config JSON")->required();

  std::string bench_matrix;
  CLI::App* bench = app.add_subcommand("bench", "run a problem x algorithm x eps_prime matrix");
  bench->add_option("matrix", bench_matrix, "bench matrix JSON")->required();

  std::vector<std::string> plot_traces;
  std::string plot_out = "convergence.svg";
  std::string plot_problem;
  double plot_f_star = 0.0, plot_f_slb = 0.0;
  CLI::App* plot = app.add_subcommand("plot", "render trace CSVs as a convergence SVG");
  plot->add_option("traces", plot_traces, "trace CSV paths")->required();
  plot->add_option("-o,--out", plot_out, "output SVG path");
  plot->add_option("--problem", plot_problem, "problem JSON providing f_star and f_slb");
  CLI::Option* fs_opt = plot->add_option("--f-star", plot_f_star, "certified optimal value");
  CLI::Option* fslb_opt = plot->add_option("--f-slb", plot_f_slb, "strict lower bound");

  std::string g_problem;
  std::int64_t g_samples = 1000;
  double g_range = 10.0;
  std::uint64_t g_seed = 0;
  CLI::App* est = app.add_subcommand("estimate-g", "sample a growth-constant certificate");
  est->add_option("problem", g_problem, "problem JSON")->required();
  est->add_option("--samples", g_samples, "random samples to draw");
  est->add_option("--range", g_range, "sampling box half-width");
  est->add_option("--seed", g_seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return growthopt::cmd_run(run_config);
  if (bench->parsed()) return growthopt::cmd_bench(bench_matrix);
  if (plot->parsed()) {
    bool have_levels = fs_opt->count() > 0 && fslb_opt->count() > 0;
    return growthopt::cmd_plot(plot_traces, plot_out, plot_problem, plot_f_star, plot_f_slb,
                               have_levels);
  }
  if (est->parsed()) return growthopt::cmd_estimate_g(g_problem, g_samples, g_range, g_seed);
  return 1;
}
