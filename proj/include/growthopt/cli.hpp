#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace growthopt {

// Exit codes: 0 success, 1 config/validation error, 2 budget exhausted without
// reaching the tolerance. Output files land in GROWTHOPT_OUT when set, else in
// the current directory; every written path is echoed on stdout.

int cmd_run(const std::string& config_path);

int cmd_bench(const std::string& matrix_path);

int cmd_plot(const std::vector<std::string>& trace_paths, const std::string& out_path,
             const std::string& problem_path, double f_star, double f_slb,
             bool have_levels);

int cmd_estimate_g(const std::string& problem_path, std::int64_t samples, double range,
                   std::uint64_t seed);

}  // namespace growthopt
