#include "growthopt/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "growthopt/agm.hpp"
#include "growthopt/constants.hpp"

namespace growthopt {

namespace {

double max_row_norm_sq(const Matrix& A) {
  double m = 0.0;
  for (std::size_t i = 0; i < A.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < A.cols; ++j) s += A(i, j) * A(i, j);
    m = std::max(m, s);
  }
  return m;
}

FeasibleSet resolve_set(const FeasibleSet& set, std::size_t dim) {
  return set.dim == 0 && set.kind == SetKind::full_space ? FeasibleSet::full(dim) : set;
}

}  // namespace

ProblemInstance entropy_smooth_pwl(const Matrix& A, const Vec& b, double mu,
                                   const FeasibleSet& set) {
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (A.rows != b.size()) throw std::invalid_argument("A and b row count mismatch");
  const double m = static_cast<double>(A.rows);

  ProblemInstance p;
  p.dimension = A.cols;
  p.kind = "smoothed_entropy";
  p.A = A;
  p.b = b;
  p.set = resolve_set(set, A.cols);
  p.objective = [A, b, m, mu](const Vec& x) {
    Vec t = add(matvec(A, x), b);
    for (double& e : t) e /= mu;
    double mx = *std::max_element(t.begin(), t.end());
    double s = 0.0;
    for (double e : t) s += std::exp(e - mx);
    return mu * (mx + std::log(s / m));
  };
  p.first_order = [A, b, mu](const Vec& x) {
    Vec t = add(matvec(A, x), b);
    for (double& e : t) e /= mu;
    double mx = *std::max_element(t.begin(), t.end());
    double s = 0.0;
    for (double& e : t) {
      e = std::exp(e - mx);
      s += e;
    }
    for (double& e : t) e /= s;
    return matvec_t(A, t);
  };
  {
    FeasibleSet s = p.set;
    p.projector = [s](const Vec& x) { return s.project(x); };
  }
  p.metadata.lipschitz_L = max_row_norm_sq(A) / mu;
  return p;
}

AdjointRepresentation make_entropy_adjoint(const Matrix& A, const Vec& b) {
  if (A.rows != b.size()) throw std::invalid_argument("A and b row count mismatch");
  double eb = 0.0;
  for (double e : b) eb += std::exp(e);
  if (eb > static_cast<double>(A.rows) * (1.0 + 1e-12))
    throw std::invalid_argument("entropy shift invalid: sum exp(b_i) must not exceed m");
  AdjointRepresentation rep;
  rep.A = A;
  rep.b = b;
  rep.sigma = 1.0;
  rep.D_bar = std::log(static_cast<double>(A.rows)) - *std::min_element(b.begin(), b.end());
  rep.L = spectral_norm_sq(A) / rep.sigma;
  return rep;
}

ProblemInstance adjoint_extra_smooth(const AdjointRepresentation& rep, double mu,
                                     const FeasibleSet& set) {
  if (mu < 0.0) throw std::invalid_argument("mu must be nonnegative");
  const Matrix& A = rep.A;
  const Vec& b = rep.b;
  const double m = static_cast<double>(A.rows);
  const double temp = 1.0 + mu;

  ProblemInstance p;
  p.dimension = A.cols;
  p.kind = "smoothed_adjoint";
  p.A = A;
  p.b = b;
  p.set = resolve_set(set, A.cols);
  p.objective = [A, b, m, temp](const Vec& x) {
    Vec t = matvec(A, x);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = t[i] / temp + b[i];
    double mx = *std::max_element(t.begin(), t.end());
    double s = 0.0;
    for (double e : t) s += std::exp(e - mx);
    return temp * (mx + std::log(s / m));
  };
  p.first_order = [A, b, temp](const Vec& x) {
    Vec t = matvec(A, x);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = t[i] / temp + b[i];
    double mx = *std::max_element(t.begin(), t.end());
    double s = 0.0;
    for (double& e : t) {
      e = std::exp(e - mx);
      s += e;
    }
    for (double& e : t) e /= s;
    return matvec_t(A, t);
  };
  {
    FeasibleSet s = p.set;
    p.projector = [s](const Vec& x) { return s.project(x); };
  }
  p.metadata.lipschitz_L = rep.L / temp;
  return p;
}

SmoothingFamily make_entropy_family(const ProblemInstance& pwl_base) {
  if (pwl_base.kind != "piecewise_linear" || pwl_base.smoothing_kind.has_value())
    throw std::invalid_argument("entropy family needs a plain piecewise-linear base");
  SmoothingFamily fam;
  fam.kind = SmoothingFamily::Kind::nonsmooth_nesterov;
  fam.base = pwl_base;
  fam.D_bar = std::log(static_cast<double>(pwl_base.A.rows));
  fam.A_bar = max_row_norm_sq(pwl_base.A);
  Matrix A = pwl_base.A;
  Vec b = pwl_base.b;
  FeasibleSet set = pwl_base.set;
  fam.make_smoothed = [A, b, set](double mu) { return entropy_smooth_pwl(A, b, mu, set); };
  return fam;
}

SmoothingFamily make_adjoint_family(const ProblemInstance& smooth_base) {
  if (smooth_base.smoothing_kind != std::optional<std::string>("adjoint_entropy"))
    throw std::invalid_argument("adjoint family needs an adjoint_entropy base");
  AdjointRepresentation rep = make_entropy_adjoint(smooth_base.A, smooth_base.b);
  SmoothingFamily fam;
  fam.kind = SmoothingFamily::Kind::adjoint_extra;
  fam.base = smooth_base;
  fam.D_bar = rep.D_bar;
  fam.A_bar = rep.L;
  FeasibleSet set = smooth_base.set;
  fam.make_smoothed = [rep, set](double mu) { return adjoint_extra_smooth(rep, mu, set); };
  return fam;
}

namespace {

bool meets(double f, double f_star, double f_slb, double eps_prime) {
  return f - f_star <= eps_prime * (f_star - f_slb);
}

}  // namespace

SolverRun run_parametric_smoothing_restart(const SmoothingFamily& family, const Vec& x0,
                                           double eps_prime, std::int64_t budget,
                                           const std::optional<double>& f_star_stop,
                                           const RunOptions& opts) {
  RelativeTolerance tol(eps_prime);
  if (!(family.D_bar > 0.0))
    throw std::invalid_argument("smoothing family needs D_bar > 0 to set mu");
  const double B = constants::smoothing_B;
  const double t_scale = constants::smoothing_t;
  const ProblemInstance& base = family.base;
  const double f_slb = base.f_slb;

  SolverRun run;
  Vec x_start = base.projector(x0);
  double f_cur = base.objective(x_start);
  if (!(f_cur - f_slb > 0.0))
    throw std::invalid_argument("start gap must be positive (f_slb not strict?)");

  run.best_point = x_start;
  run.best_value = f_cur;
  double f_best_a = f_cur;
  double f_best_b = std::numeric_limits<double>::infinity();

  auto record = [&](std::int64_t outer, std::int64_t inner, Stream s, double f, int restart) {
    double& fb = s == Stream::b ? f_best_b : f_best_a;
    fb = std::min(fb, f);
    if (!opts.record_trace) return;
    TraceRecord t;
    t.outer = outer;
    t.inner = inner;
    t.stream = s;
    t.iterate_count = run.iterates_computed;
    t.f = f;
    t.f_best = fb;
    t.restart = restart;
    run.trace.push_back(t);
  };
  auto note = [&](const Vec& x, double f) -> bool {
    if (f < run.best_value) {
      run.best_value = f;
      run.best_point = x;
    }
    if (f_star_stop && !run.success_iterates &&
        meets(f, *f_star_stop, f_slb, eps_prime)) {
      run.success_iterates = run.iterates_computed;
      run.termination = Termination::tolerance_met;
      return true;
    }
    return false;
  };

  record(0, 0, Stream::a, f_cur, 0);
  if (note(x_start, f_cur)) return run;

  Vec x_outer = x_start;
  for (std::int64_t outer = 0;; ++outer) {
    const double gap0 = f_cur - f_slb;
    if (outer > 0) record(outer, 0, Stream::a, f_cur, 1);

    const double mu1 = t_scale * gap0 / family.D_bar;
    const double mu2 = t_scale * eps_prime * gap0 / family.D_bar;
    run.mus_used.push_back(mu1);
    run.mus_used.push_back(mu2);
    ProblemInstance f_mu1 = family.make_smoothed(mu1);
    ProblemInstance f_mu2 = family.make_smoothed(mu2);
    const double L1 = *f_mu1.metadata.lipschitz_L;
    const double L2 = *f_mu2.metadata.lipschitz_L;

    AgmState sa{x_outer, x_outer, 0, 1.0};
    AgmState sb{x_outer, x_outer, 0, 1.0};
    for (std::int64_t j = 1;; ++j) {
      if (run.iterates_computed >= budget) {
        run.termination = Termination::budget_exhausted;
        return run;
      }
      sa = agm_step(f_mu1, sa, L1);
      double fa = base.objective(sa.x);
      ++run.iterates_computed;
      record(outer, j, Stream::a, fa, 0);
      if (note(sa.x, fa)) return run;

      if (run.iterates_computed >= budget) {
        run.termination = Termination::budget_exhausted;
        return run;
      }
      sb = agm_step(f_mu2, sb, L2);
      double fb = base.objective(sb.x);
      ++run.iterates_computed;
      record(outer, j, Stream::b, fb, 0);
      if (note(sb.x, fb)) return run;

      // Only the mu1 stream drives restarts; the mu2 stream just supplies
      // high-accuracy candidates for best-so-far.
      if (fa - f_slb < B * gap0) {
        run.restarts.push_back({outer, j, run.iterates_computed, gap0, Stream::a});
        x_outer = sa.x;
        f_cur = fa;
        break;
      }
    }
  }
}

double bound_theorem8(double G, double L, double D_bar, double eps_prime, double f0_gap_ratio,
                      double opt_gap) {
  using namespace constants;
  return G * std::sqrt(L * D_bar) *
         (t8_lead + t8_log * std::log1p(f0_gap_ratio) +
          t8_sqrt * std::sqrt(opt_gap / eps_prime));
}

double bound_standard_smoothing(double A_bar, double D_bar, double dist0, double eps_abs) {
  return std::ceil(std::sqrt(8.0 * A_bar * D_bar) * dist0 / eps_abs - 1.0);
}

CapsAlg4 diagnostics_caps_alg4(double G, double A_bar, double D_bar, double eps_prime,
                               double t) {
  if (!(G > 0.0) || !(A_bar > 0.0) || !(D_bar > 0.0) || !(eps_prime > 0.0) || !(t > 0.0))
    throw std::invalid_argument("caps need positive inputs");
  CapsAlg4 caps;
  double core = G * std::sqrt(2.0 * A_bar * D_bar) / t;
  caps.T = static_cast<std::int64_t>(std::ceil(core - 1.0));
  caps.U = static_cast<std::int64_t>(std::ceil(core / eps_prime - 1.0));
  return caps;
}

}  // namespace growthopt
