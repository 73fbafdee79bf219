#include "growthopt/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace growthopt {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 28.0;
constexpr double kBottom = 56.0;
constexpr double kGapFloor = 1e-16;

const char* kPalette[] = {"#1f6fb2", "#d2502a", "#2e8b57", "#8b4fa8",
                          "#b08c00", "#3aa0a0", "#b23a6f", "#556b2f"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

std::string render_convergence_svg(const std::vector<PlotTrace>& traces, double f_star,
                                   double f_slb) {
  if (!(f_star > f_slb))
    throw std::invalid_argument("plot requires f_star > f_slb");
  const double denom = f_star - f_slb;

  struct Curve {
    std::string label;
    std::vector<std::pair<double, double>> pts;  // (iterate_count, log10 rel gap)
    std::vector<double> restarts;                // iterate counts where a restart fired
  };
  std::vector<Curve> curves;
  double xmax = 1.0, ymin = 0.0, ymax = -16.0;
  bool any = false;
  for (const PlotTrace& t : traces) {
    Curve c;
    c.label = t.label;
    for (const CsvTraceRow& r : t.rows) {
      double gap = (r.f_best - f_star) / denom;
      double y = std::log10(std::max(gap, kGapFloor));
      c.pts.emplace_back(static_cast<double>(r.iterate_count), y);
      if (r.restart) c.restarts.push_back(static_cast<double>(r.iterate_count));
      xmax = std::max(xmax, static_cast<double>(r.iterate_count));
      if (!any) {
        ymin = ymax = y;
        any = true;
      } else {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
    curves.push_back(std::move(c));
  }
  if (!any) {
    ymin = -16.0;
    ymax = 1.0;
  }
  if (ymax - ymin < 1.0) {
    ymax += 0.5;
    ymin -= 0.5;
  }
  ymax += 0.05 * (ymax - ymin);
  ymin -= 0.05 * (ymax - ymin);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + plot_w * (x / xmax); };
  auto sy = [&](double y) { return kTop + plot_h * (1.0 - (y - ymin) / (ymax - ymin)); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // frame
  svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w)
      << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  // y ticks at integer powers of ten
  int y_lo = static_cast<int>(std::ceil(ymin));
  int y_hi = static_cast<int>(std::floor(ymax));
  int y_step = std::max(1, (y_hi - y_lo) / 8);
  for (int e = y_lo; e <= y_hi; e += y_step) {
    double py = sy(e);
    svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py) << "\" x2=\""
        << num(kLeft + plot_w) << "\" y2=\"" << num(py)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">1e" << e
        << "</text>\n";
  }

  // x ticks
  for (int i = 0; i <= 5; ++i) {
    double x = xmax * i / 5.0;
    double px = sx(x);
    svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(px)
        << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(px) << "\" y=\"" << num(kTop + plot_h + 20)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
        << tick_label(std::round(x)) << "</text>\n";
  }

  // axis labels
  svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 14)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">iterates"
         "</text>\n";
  svg << "<text x=\"16\" y=\"" << num(kTop + plot_h / 2)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 16 "
      << num(kTop + plot_h / 2) << ")\">(f_best - f*) / (f* - f_slb)</text>\n";

  // restart markers then curves
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const char* color = kPalette[ci % (sizeof(kPalette) / sizeof(kPalette[0]))];
    for (double rx : curves[ci].restarts) {
      double px = sx(rx);
      svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(px)
          << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"" << color
          << "\" stroke-width=\"1\" stroke-dasharray=\"4 4\" opacity=\"0.45\"/>\n";
    }
  }
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const Curve& c = curves[ci];
    if (c.pts.empty()) continue;
    const char* color = kPalette[ci % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
    for (const auto& [x, y] : c.pts) svg << num(sx(x)) << ',' << num(sy(y)) << ' ';
    svg << "\"/>\n";
  }

  // legend
  double lx = kLeft + 12, ly = kTop + 10;
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const char* color = kPalette[ci % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly + 4) << "\" x2=\"" << num(lx + 24)
        << "\" y2=\"" << num(ly + 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 8)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << curves[ci].label << "</text>\n";
    ly += 18;
  }

  svg << "</svg>\n";
  return svg.str();
}

void write_convergence_svg(const std::vector<PlotTrace>& traces, double f_star, double f_slb,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write svg file: " + path);
  out << render_convergence_svg(traces, f_star, f_slb);
}

}  // namespace growthopt
