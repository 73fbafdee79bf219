#include "growthopt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "growthopt/agm.hpp"
#include "growthopt/bounds.hpp"
#include "growthopt/growth.hpp"
#include "growthopt/json_io.hpp"
#include "growthopt/rng.hpp"
#include "growthopt/smoothing.hpp"
#include "growthopt/subgradient.hpp"
#include "growthopt/svg_plot.hpp"

namespace fs = std::filesystem;

namespace growthopt {

namespace {

std::string out_join(const std::string& name) {
  const char* dir = std::getenv("GROWTHOPT_OUT");
  if (dir && *dir) {
    fs::create_directories(dir);
    return (fs::path(dir) / name).string();
  }
  return name;
}

ProblemInstance load_problem_ref(const nlohmann::json& ref, const fs::path& base_dir) {
  if (ref.is_string()) {
    fs::path p = ref.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_problem_file(p.string());
  }
  return problem_from_json(ref);
}

Vec resolve_x0(const nlohmann::json& spec, const ProblemInstance& p, std::uint64_t seed) {
  Vec v(p.dimension, 0.0);
  if (spec.is_array()) {
    if (spec.size() != p.dimension) throw std::invalid_argument("x0 dimension mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = spec.at(i).get<double>();
  } else if (spec.is_object()) {
    const std::string preset = spec.at("preset").get<std::string>();
    const double scale = spec.value("scale", 1.0);
    if (preset == "scaled_ones") {
      for (double& c : v) c = scale;
    } else if (preset == "random_box") {
      SplitMix64 rng{seed};
      for (double& c : v) c = rng.uniform(-scale, scale);
    } else {
      throw std::invalid_argument("unknown x0 preset: " + preset);
    }
  } else if (!spec.is_null()) {
    throw std::invalid_argument("x0 must be a vector or a preset object");
  }
  return p.set.project(v);
}

double require_cert(const std::optional<double>& v, const char* name) {
  if (!v) throw std::invalid_argument(std::string("missing certificate: ") + name);
  return *v;
}

double require_dist0(const ProblemInstance& p, const Vec& x0) {
  if (!p.metadata.has_dist_to_opt())
    throw std::invalid_argument("missing certificate: dist_to_opt oracle");
  return p.metadata.dist_to_opt(x0);
}

struct AlgoResult {
  SolverRun run;
  std::string theorem;
  std::map<std::string, double> inputs;
};

AlgoResult execute_algorithm(const ProblemInstance& p, const std::string& algorithm,
                             const Vec& x0, double eps_prime, std::int64_t budget,
                             const RunOptions& opts) {
  RelativeTolerance tol(eps_prime);
  const double f_star = require_cert(p.metadata.f_star, "f_star");
  const double opt_gap = f_star - p.f_slb;
  const double f0 = p.objective(x0);
  const double ratio0 = (f0 - f_star) / opt_gap;
  const StopRule stop{f_star, eps_prime};

  AlgoResult res;
  if (algorithm == "sdm_constant") {
    const double M = require_cert(p.metadata.lipschitz_M, "lipschitz_M");
    const double dist0 = require_dist0(p, x0);
    const double eps_abs = eps_prime * opt_gap;
    res.run = run_subgradient(p, x0, StepSizeRule::constant_epsilon(eps_abs), budget, stop, opts);
    res.theorem = "Eq8";
    res.inputs = {{"M", M}, {"dist0", dist0}, {"eps_abs", eps_abs}};
  } else if (algorithm == "sdm_polyak") {
    const double M = require_cert(p.metadata.lipschitz_M, "lipschitz_M");
    const double G = require_cert(p.metadata.growth_G, "growth_G");
    res.run = run_subgradient(p, x0, StepSizeRule::polyak(f_star), budget, stop, opts);
    res.theorem = "T5";
    res.inputs = {{"M", M}, {"G", G}, {"eps_prime", eps_prime}, {"f0_gap_ratio", ratio0}};
  } else if (algorithm == "sdm_normalized") {
    const double M = require_cert(p.metadata.lipschitz_M, "lipschitz_M");
    const double dist0 = require_dist0(p, x0);
    const double eps_abs = eps_prime * opt_gap;
    const auto N =
        static_cast<std::int64_t>(std::ceil(bound_standard_subgradient(M, dist0, eps_abs)));
    res.run = run_subgradient(p, x0, StepSizeRule::normalized(dist0, std::max<std::int64_t>(N, 0)),
                              budget, stop, opts);
    res.theorem = "Eq8";
    res.inputs = {{"M", M}, {"dist0", dist0}, {"eps_abs", eps_abs}};
  } else if (algorithm == "alg3") {
    const double M = require_cert(p.metadata.lipschitz_M, "lipschitz_M");
    const double G = require_cert(p.metadata.growth_G, "growth_G");
    res.run = run_two_rate_restart(p, x0, eps_prime, budget, f_star, opts);
    res.theorem = "T4";
    res.inputs = {{"M", M}, {"G", G}, {"eps_prime", eps_prime}, {"f0_gap_ratio", ratio0}};
  } else if (algorithm == "agm") {
    const double L = require_cert(p.metadata.lipschitz_L, "lipschitz_L");
    const double dist0 = require_dist0(p, x0);
    res.run = run_agm(p, x0, L, budget, stop, opts);
    res.theorem = "Eq25";
    res.inputs = {{"L", L}, {"dist0", dist0}, {"eps_prime", eps_prime}, {"opt_gap", opt_gap}};
  } else if (algorithm == "alg5") {
    const double L = require_cert(p.metadata.lipschitz_L, "lipschitz_L");
    const double G = require_cert(p.metadata.growth_G, "growth_G");
    res.run = run_agm_simple_restart(p, x0, L, eps_prime, budget, f_star, opts);
    res.theorem = "T7";
    res.inputs = {{"G", G},
                  {"L", L},
                  {"f0_gap", f0 - p.f_slb},
                  {"opt_gap", opt_gap},
                  {"eps_prime", eps_prime}};
  } else if (algorithm == "alg4_nonsmooth") {
    const double G = require_cert(p.metadata.growth_G, "growth_G");
    if (p.smoothing_kind != std::optional<std::string>("entropy"))
      throw std::invalid_argument("alg4_nonsmooth requires a smoothing block of kind entropy");
    ProblemInstance base = p;
    base.smoothing_kind.reset();
    SmoothingFamily fam = make_entropy_family(base);
    res.run = run_parametric_smoothing_restart(fam, x0, eps_prime, budget, f_star, opts);
    res.theorem = "T6";
    res.inputs = {{"G", G},
                  {"A_bar", fam.A_bar},
                  {"D_bar", fam.D_bar},
                  {"eps_prime", eps_prime},
                  {"f0_gap_ratio", ratio0}};
  } else if (algorithm == "alg4_adjoint") {
    const double G = require_cert(p.metadata.growth_G, "growth_G");
    if (p.smoothing_kind != std::optional<std::string>("adjoint_entropy"))
      throw std::invalid_argument("alg4_adjoint requires a smoothing block of kind adjoint_entropy");
    SmoothingFamily fam = make_adjoint_family(p);
    res.run = run_parametric_smoothing_restart(fam, x0, eps_prime, budget, f_star, opts);
    res.theorem = "T8";
    res.inputs = {{"G", G},
                  {"L", fam.A_bar},
                  {"D_bar", fam.D_bar},
                  {"eps_prime", eps_prime},
                  {"f0_gap_ratio", ratio0},
                  {"opt_gap", opt_gap}};
  } else {
    throw std::invalid_argument("unknown algorithm: " + algorithm);
  }
  return res;
}

// Classical no-growth baseline paired with each algorithm in the bench table.
std::pair<std::string, std::map<std::string, double>> std_bound_for(
    const ProblemInstance& p, const std::string& algorithm, const Vec& x0, double eps_prime) {
  const double f_star = require_cert(p.metadata.f_star, "f_star");
  const double opt_gap = f_star - p.f_slb;
  const double dist0 = require_dist0(p, x0);
  if (algorithm == "sdm_constant" || algorithm == "sdm_polyak" ||
      algorithm == "sdm_normalized" || algorithm == "alg3") {
    const double M = require_cert(p.metadata.lipschitz_M, "lipschitz_M");
    return {"Eq8", {{"M", M}, {"dist0", dist0}, {"eps_abs", eps_prime * opt_gap}}};
  }
  if (algorithm == "alg4_nonsmooth") {
    double a_bar = 0.0;
    for (std::size_t i = 0; i < p.A.rows; ++i) {
      double s = 0.0;
      for (std::size_t c = 0; c < p.A.cols; ++c) s += p.A(i, c) * p.A(i, c);
      a_bar = std::max(a_bar, s);
    }
    const double d_bar = std::log(static_cast<double>(p.A.rows));
    return {"Eq17",
            {{"A_bar", a_bar}, {"D_bar", d_bar}, {"dist0", dist0},
             {"eps_abs", eps_prime * opt_gap}}};
  }
  if (algorithm == "agm" || algorithm == "alg5" || algorithm == "alg4_adjoint") {
    const double L = require_cert(p.metadata.lipschitz_L, "lipschitz_L");
    return {"Eq25",
            {{"L", L}, {"dist0", dist0}, {"eps_prime", eps_prime}, {"opt_gap", opt_gap}}};
  }
  throw std::invalid_argument("unknown algorithm: " + algorithm);
}

}  // namespace

int cmd_run(const std::string& config_path) {
  try {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    nlohmann::json j;
    in >> j;
    ExperimentConfig cfg = config_from_json(j);
    ProblemInstance p = load_problem_ref(cfg.problem, fs::path(config_path).parent_path());
    Vec x0 = resolve_x0(cfg.x0, p, cfg.seed);

    AlgoResult res = execute_algorithm(p, cfg.algorithm, x0, cfg.eps_prime, cfg.budget, {});

    const std::string stem = fs::path(config_path).stem().string();
    const std::string trace_path = out_join(stem + "_trace.csv");
    write_trace_csv(res.run, trace_path);
    std::cout << trace_path << "\n";

    if (!res.run.success_iterates) {
      std::cerr << "budget exhausted before the eps_prime tolerance was met\n";
      return 2;
    }
    BoundReport report = compare_report(res.run, res.theorem, res.inputs);
    const std::string report_path = out_join(stem + "_report.json");
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write report: " + report_path);
    out << report_to_json(report).dump(2) << "\n";
    std::cout << report_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_bench(const std::string& matrix_path) {
  try {
    std::ifstream in(matrix_path);
    if (!in) throw std::runtime_error("cannot open matrix: " + matrix_path);
    nlohmann::json j;
    in >> j;
    const fs::path base_dir = fs::path(matrix_path).parent_path();

    struct Entry {
      std::string label;
      ProblemInstance instance;
    };
    std::vector<Entry> problems;
    std::size_t index = 0;
    for (const auto& ref : j.value("problems", nlohmann::json::array())) {
      Entry e;
      e.instance = load_problem_ref(ref, base_dir);
      if (ref.is_string())
        e.label = fs::path(ref.get<std::string>()).stem().string();
      else if (ref.contains("name"))
        e.label = ref.at("name").get<std::string>();
      else
        e.label = "problem" + std::to_string(index);
      problems.push_back(std::move(e));
      ++index;
    }
    std::vector<std::string> algorithms;
    for (const auto& a : j.value("algorithms", nlohmann::json::array()))
      algorithms.push_back(a.get<std::string>());
    std::vector<double> eps_primes;
    for (const auto& e : j.value("eps_primes", nlohmann::json::array()))
      eps_primes.push_back(e.get<double>());
    std::vector<nlohmann::json> x0s;
    if (j.contains("x0s"))
      for (const auto& s : j.at("x0s")) x0s.push_back(s);
    else
      x0s.push_back(j.value("x0", nlohmann::json()));
    const std::int64_t budget = j.value("budget", std::int64_t{0});
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});

    std::ostringstream csv;
    csv << "problem,algorithm,eps_prime,dist0,observed,theorem,bound,satisfied,"
           "std_theorem,std_bound,ratio\n";
    for (const Entry& entry : problems) {
      for (const std::string& algorithm : algorithms) {
        for (double eps_prime : eps_primes) {
          for (const nlohmann::json& x0_spec : x0s) {
            const std::string cell =
                entry.label + "/" + algorithm + "/eps_prime=" + format_double(eps_prime);
            AlgoResult res;
            double dist0 = 0.0;
            std::pair<std::string, std::map<std::string, double>> std_ref;
            try {
              Vec x0 = resolve_x0(x0_spec, entry.instance, seed);
              dist0 = require_dist0(entry.instance, x0);
              std_ref = std_bound_for(entry.instance, algorithm, x0, eps_prime);
              RunOptions opts;
              opts.record_trace = false;
              res = execute_algorithm(entry.instance, algorithm, x0, eps_prime, budget, opts);
            } catch (const std::exception& e) {
              throw std::runtime_error("bench cell " + cell + ": " + e.what());
            }
            if (!res.run.success_iterates) {
              std::cerr << "bench cell " << cell
                        << ": budget exhausted before the tolerance was met\n";
              return 2;
            }
            BoundReport report = compare_report(res.run, res.theorem, res.inputs);
            const double std_bound = evaluate_bound(std_ref.first, std_ref.second);
            csv << entry.label << ',' << algorithm << ',' << format_double(eps_prime) << ','
                << format_double(dist0) << ',' << *res.run.success_iterates << ','
                << report.theorem << ',' << format_double(report.theoretical) << ','
                << (report.satisfied ? "true" : "false") << ',' << std_ref.first << ','
                << format_double(std_bound) << ','
                << format_double(report.theoretical / std_bound) << '\n';
          }
        }
      }
    }

    const std::string stem = fs::path(matrix_path).stem().string();
    const std::string csv_path = out_join(stem + "_bench.csv");
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write bench table: " + csv_path);
    out << csv.str();
    std::cout << csv_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_plot(const std::vector<std::string>& trace_paths, const std::string& out_path,
             const std::string& problem_path, double f_star, double f_slb, bool have_levels) {
  try {
    double fs_level = f_star, fslb_level = f_slb;
    if (!problem_path.empty()) {
      ProblemInstance p = load_problem_file(problem_path);
      if (!p.metadata.f_star)
        throw std::invalid_argument("problem lacks a certified f_star");
      fs_level = *p.metadata.f_star;
      fslb_level = p.f_slb;
    } else if (!have_levels) {
      throw std::invalid_argument(
          "missing f* certification: pass --problem or both --f-star and --f-slb");
    }
    std::vector<PlotTrace> traces;
    for (const std::string& path : trace_paths) {
      PlotTrace t;
      t.label = fs::path(path).stem().string();
      t.rows = read_trace_csv(path);
      traces.push_back(std::move(t));
    }
    std::string out = out_path;
    const char* dir = std::getenv("GROWTHOPT_OUT");
    if (dir && *dir && fs::path(out_path).is_relative()) {
      fs::create_directories(dir);
      out = (fs::path(dir) / out_path).string();
    }
    write_convergence_svg(traces, fs_level, fslb_level, out);
    std::cout << out << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_estimate_g(const std::string& problem_path, std::int64_t samples, double range,
                   std::uint64_t seed) {
  try {
    if (samples < 0) throw std::invalid_argument("samples must be nonnegative");
    ProblemInstance p = load_problem_file(problem_path);
    SamplingPlan plan;
    plan.seed = seed;
    plan.random_count = static_cast<std::size_t>(samples);
    plan.range = range;
    if (p.kind == "counterexample") {
      plan.curve_count = static_cast<std::size_t>(samples);
      plan.curve = [](double t) { return counterexample_witness(t); };
    }
    GrowthCertificate cert = estimate_growth_constant(p, plan);
    const std::string stem = fs::path(problem_path).stem().string();
    const std::string cert_path = out_join(stem + "_growth.json");
    std::ofstream out(cert_path);
    if (!out) throw std::runtime_error("cannot write certificate: " + cert_path);
    out << certificate_to_json(cert).dump(2) << "\n";
    std::cout << cert_path << "\n";
    std::cout << "g_lower=" << format_double(cert.g_lower) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace growthopt
