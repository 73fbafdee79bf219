#include "growthopt/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "growthopt/agm.hpp"
#include "growthopt/constants.hpp"
#include "growthopt/smoothing.hpp"
#include "growthopt/subgradient.hpp"

namespace growthopt {

double bound_theorem4(double M, double G, double eps_prime, double f0_gap_ratio) {
  using namespace constants;
  double inv = (1.0 + eps_prime) / eps_prime;
  return t4_outer * M * M * G * G * (t4_log * std::log1p(f0_gap_ratio) + inv * inv);
}

double bound_theorem6(double G, double A_bar, double D_bar, double eps_prime,
                      double f0_gap_ratio) {
  using namespace constants;
  return t6_outer * G * std::sqrt(A_bar * D_bar) *
         (1.0 + t6_log * std::log1p(f0_gap_ratio) + t6_inv / eps_prime);
}

double bound_theorem7(double G, double L, double f0_gap, double opt_gap, double eps_prime) {
  using namespace constants;
  return G * std::sqrt(L) *
         (t7_start * std::sqrt(f0_gap) + t7_opt * std::sqrt(opt_gap) / std::sqrt(eps_prime));
}

double bound_theorem7_relaxed(double G, double L, double opt_gap, double dist0,
                              double eps_prime) {
  using namespace constants;
  return G * std::sqrt(L) *
         (t7_start * std::sqrt(opt_gap) + t7_start * std::sqrt(L / 2.0) * dist0 +
          t7_opt * std::sqrt(opt_gap / eps_prime));
}

double bound_standard_subgradient(double M, double dist0, double eps_abs) {
  return M * M * dist0 * dist0 / (eps_abs * eps_abs) - 1.0;
}

namespace {

double req(const std::map<std::string, double>& inputs, const char* name) {
  auto it = inputs.find(name);
  if (it == inputs.end())
    throw std::invalid_argument(std::string("missing bound input: ") + name);
  return it->second;
}

}  // namespace

double evaluate_bound(const std::string& theorem, const std::map<std::string, double>& inputs) {
  if (theorem == "T4")
    return bound_theorem4(req(inputs, "M"), req(inputs, "G"), req(inputs, "eps_prime"),
                          req(inputs, "f0_gap_ratio"));
  if (theorem == "T5")
    return bound_theorem5(req(inputs, "M"), req(inputs, "G"), req(inputs, "eps_prime"),
                          req(inputs, "f0_gap_ratio"));
  if (theorem == "T6")
    return bound_theorem6(req(inputs, "G"), req(inputs, "A_bar"), req(inputs, "D_bar"),
                          req(inputs, "eps_prime"), req(inputs, "f0_gap_ratio"));
  if (theorem == "T7")
    return bound_theorem7(req(inputs, "G"), req(inputs, "L"), req(inputs, "f0_gap"),
                          req(inputs, "opt_gap"), req(inputs, "eps_prime"));
  if (theorem == "T8")
    return bound_theorem8(req(inputs, "G"), req(inputs, "L"), req(inputs, "D_bar"),
                          req(inputs, "eps_prime"), req(inputs, "f0_gap_ratio"),
                          req(inputs, "opt_gap"));
  if (theorem == "Eq8")
    return bound_standard_subgradient(req(inputs, "M"), req(inputs, "dist0"),
                                      req(inputs, "eps_abs"));
  if (theorem == "Eq17")
    return bound_standard_smoothing(req(inputs, "A_bar"), req(inputs, "D_bar"),
                                    req(inputs, "dist0"), req(inputs, "eps_abs"));
  if (theorem == "Eq25")
    return bound_standard_agm(req(inputs, "L"), req(inputs, "dist0"),
                              req(inputs, "eps_prime"), req(inputs, "opt_gap"));
  throw std::invalid_argument("unknown bound id: " + theorem);
}

BoundReport make_report(const std::string& theorem, const std::map<std::string, double>& inputs,
                        double theoretical, std::int64_t observed) {
  BoundReport r;
  r.theorem = theorem;
  r.inputs = inputs;
  r.theoretical = theoretical;
  r.observed = observed;
  r.satisfied = static_cast<double>(observed) <= theoretical;
  return r;
}

BoundReport compare_report(const SolverRun& run, const std::string& theorem,
                           const std::map<std::string, double>& inputs) {
  if (!run.success_iterates)
    throw std::runtime_error("budget_exhausted: run never met its stop tolerance");
  return make_report(theorem, inputs, evaluate_bound(theorem, inputs), *run.success_iterates);
}

EnvelopeResult envelope_check(const SolverRun& run, Envelope envelope,
                              const EnvelopeInputs& inputs) {
  if (run.trace.empty()) throw std::invalid_argument("envelope check needs a nonempty trace");
  const double slack = 1e-9;
  EnvelopeResult res;

  switch (envelope) {
    case Envelope::T2i: {
      if (!(inputs.M > 0.0) || !(inputs.dist0 >= 0.0))
        throw std::invalid_argument("T2i needs certified M and dist0");
      double sum_a = 0.0, sum_a2 = 0.0;
      for (std::size_t k = 0; k < run.trace.size(); ++k) {
        const TraceRecord& t = run.trace[k];
        sum_a += t.alpha;
        sum_a2 += t.alpha * t.alpha;
        if (sum_a == 0.0) continue;
        double bound = inputs.f_star +
                       (inputs.dist0 * inputs.dist0 + inputs.M * inputs.M * sum_a2) /
                           (2.0 * sum_a);
        if (t.f_best - bound > slack) {
          res.ok = false;
          res.first_violation = static_cast<std::int64_t>(k);
          return res;
        }
      }
      return res;
    }
    case Envelope::T2ii: {
      if (!(inputs.M > 0.0) || !(inputs.dist0 >= 0.0))
        throw std::invalid_argument("T2ii needs certified M and dist0");
      for (std::size_t k = 0; k < run.trace.size(); ++k) {
        double bound = inputs.f_star +
                       inputs.M * inputs.dist0 / std::sqrt(static_cast<double>(k + 1));
        if (run.trace[k].f_best - bound > slack) {
          res.ok = false;
          res.first_violation = static_cast<std::int64_t>(k);
          return res;
        }
      }
      return res;
    }
    case Envelope::T3: {
      if (!(inputs.L > 0.0) || !(inputs.dist0 >= 0.0))
        throw std::invalid_argument("T3 needs certified L and dist0");
      for (std::size_t k = 0; k < run.trace.size(); ++k) {
        double kk = static_cast<double>(k + 1);
        double bound = inputs.f_star + 2.0 * inputs.L * inputs.dist0 * inputs.dist0 / (kk * kk);
        if (run.trace[k].f - bound > slack) {
          res.ok = false;
          res.first_violation = static_cast<std::int64_t>(k);
          return res;
        }
      }
      return res;
    }
  }
  return res;
}

}  // namespace growthopt
