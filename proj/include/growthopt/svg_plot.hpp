#pragma once

#include <string>
#include <vector>

#include "growthopt/json_io.hpp"

namespace growthopt {

struct PlotTrace {
  std::string label;  // legend entry, taken from the trace filename
  std::vector<CsvTraceRow> rows;
};

// Hand-rolled SVG: one (f_best - f*)/(f* - f_slb) curve per trace on a log10
// axis against iterate count, gaps clamped at 1e-16, dashed vertical markers
// at restart rows.
std::string render_convergence_svg(const std::vector<PlotTrace>& traces, double f_star,
                                   double f_slb);

void write_convergence_svg(const std::vector<PlotTrace>& traces, double f_star, double f_slb,
                           const std::string& path);

}  // namespace growthopt
