#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "growthopt/bounds.hpp"
#include "growthopt/growth.hpp"
#include "growthopt/problem.hpp"
#include "growthopt/solver_run.hpp"

namespace growthopt {

nlohmann::json set_to_json(const FeasibleSet& set);
FeasibleSet set_from_json(const nlohmann::json& j);

nlohmann::json problem_to_json(const ProblemInstance& p);
// Rebuilds oracles from the serialized kind and validates metadata strictness.
ProblemInstance problem_from_json(const nlohmann::json& j);

ProblemInstance load_problem_file(const std::string& path);
void save_problem_file(const ProblemInstance& p, const std::string& path);

nlohmann::json report_to_json(const BoundReport& r);
nlohmann::json certificate_to_json(const GrowthCertificate& c);

struct ExperimentConfig {
  nlohmann::json problem;  // inline object or path string
  std::string algorithm;   // sdm_constant | sdm_polyak | sdm_normalized | alg3 |
                           // alg4_nonsmooth | alg4_adjoint | agm | alg5
  double eps_prime = 1.0;
  std::int64_t budget = 0;
  nlohmann::json x0;       // vector, or {"preset": "scaled_ones"|"random_box", "scale": r}
  std::uint64_t seed = 0;
};

ExperimentConfig config_from_json(const nlohmann::json& j);

// CSV trace schema: outer,inner,stream,iterate_count,f,f_best,restart
void write_trace_csv(const SolverRun& run, const std::string& path);

struct CsvTraceRow {
  std::int64_t outer = 0;
  std::int64_t inner = 0;
  std::string stream;
  std::int64_t iterate_count = 0;
  double f = 0.0;
  double f_best = 0.0;
  int restart = 0;
};

std::vector<CsvTraceRow> read_trace_csv(const std::string& path);

// %.17g — round-trips doubles exactly and keeps file output byte-stable.
std::string format_double(double v);

}  // namespace growthopt
