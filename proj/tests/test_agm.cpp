#include <doctest.h>

#include <cmath>

#include "growthopt/agm.hpp"
#include "growthopt/bounds.hpp"
#include "growthopt/catalog.hpp"

using namespace growthopt;

TEST_SUITE("agm") {
  TEST_CASE("theta recursion: frozen leading values") {
    double t1 = theta_next(1.0);
    double t2 = theta_next(t1);
    double t3 = theta_next(t2);
    CHECK(t1 == doctest::Approx(0.6180339887498949).epsilon(1e-14));
    CHECK(t2 == doctest::Approx(0.455886780).epsilon(2e-9));
    CHECK(t3 == doctest::Approx(0.363663957).epsilon(2e-9));
  }

  TEST_CASE("theta recursion: residual and cap over 10^4 steps") {
    double theta = 1.0;
    for (int i = 0; i < 10000; ++i) {
      double next = theta_next(theta);
      CHECK(next > 0.0);
      CHECK(next < theta);
      // root residual, measured against the growing 1/theta^2 scale
      double res = 1.0 / (next * next) - 1.0 / next - 1.0 / (theta * theta);
      double scale = std::max(1.0, 1.0 / (next * next));
      CHECK(std::fabs(res) <= 1e-12 * scale);
      theta = next;
      // theta_i <= 2 / (i + 2)
      CHECK(theta <= 2.0 / static_cast<double>(i + 3) + 1e-15);
    }
  }

  TEST_CASE("agm_step: one step on a quadratic lands at the minimizer") {
    auto p = catalog::quad1d();
    AgmState s;
    s.x = {1.0};
    s.z = {1.0};
    auto n = agm_step(p, s, 1.0);
    CHECK(n.x[0] == doctest::Approx(0.0));
    CHECK(n.z[0] == doctest::Approx(0.0));
    CHECK(n.i == 1);
    CHECK(n.theta == doctest::Approx(0.6180339887498949));
  }

  TEST_CASE("agm_step: projection clamps the z update") {
    auto p = catalog::quad1d();
    p.set = FeasibleSet::make_box({0.5}, {2.0});
    p.projector = [s = p.set](const Vec& v) { return s.project(v); };
    AgmState st;
    st.x = {1.0};
    st.z = {1.0};
    auto n = agm_step(p, st, 1.0);
    CHECK(n.z[0] == doctest::Approx(0.5));
    CHECK(n.x[0] == doctest::Approx(0.5));
  }

  TEST_CASE("agm_step: two steps match the hand recursion") {
    auto p = catalog::quad2d();  // 0.5 (x1^2 + 4 x2^2), L = 4
    AgmState s;
    s.x = {1.0, 1.0};
    s.z = {1.0, 1.0};
    auto s1 = agm_step(p, s, 4.0);
    CHECK(s1.z[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(s1.z[1] == doctest::Approx(0.0));
    CHECK(s1.x[0] == doctest::Approx(0.75).epsilon(1e-12));

    auto s2 = agm_step(p, s1, 4.0);
    double th = theta_next(1.0);
    // y = x = z = (0.75, 0); z+ = z - grad / (th L); x+ = (1-th) x + th z+
    double z2 = 0.75 - 0.75 / (th * 4.0);
    double x2 = (1.0 - th) * 0.75 + th * z2;
    CHECK(s2.z[0] == doctest::Approx(z2).epsilon(1e-12));
    CHECK(s2.x[0] == doctest::Approx(x2).epsilon(1e-12));
    CHECK(s2.x[1] == doctest::Approx(0.0));
  }

  TEST_CASE("run_agm satisfies the accelerated envelope") {
    auto q = catalog::quad1d();
    auto runq = run_agm(q, {4.0}, 1.0, 300, std::nullopt);
    EnvelopeInputs in;
    in.L = 1.0;
    in.dist0 = 4.0;
    in.f_star = 0.0;
    CHECK(envelope_check(runq, Envelope::T3, in).ok);

    auto ls = catalog::ls2d();
    auto runl = run_agm(ls, {5.0, -3.0}, 3.0, 300, std::nullopt);
    EnvelopeInputs in2;
    in2.L = 3.0;
    in2.dist0 = std::sqrt(32.0);
    in2.f_star = 1.5;
    CHECK(envelope_check(runl, Envelope::T3, in2).ok);
  }

  TEST_CASE("agm iterates stay feasible on a box") {
    auto p = catalog::adj3x2();
    double L = p.metadata.lipschitz_L.value();
    AgmState s;
    s.x = {2.0, 2.0};
    s.z = s.x;
    for (int k = 0; k < 50; ++k) {
      s = agm_step(p, s, L);
      CHECK(p.set.contains(s.x));
      CHECK(p.set.contains(s.z));
    }
  }

  TEST_CASE("run_agm: starting at the optimum succeeds at iterate zero") {
    auto p = catalog::quad1d();
    auto run = run_agm(p, {0.0}, 1.0, 50, StopRule{0.0, 0.5});
    CHECK(run.termination == Termination::tolerance_met);
    CHECK(run.success_iterates.value() == 0);
  }

  TEST_CASE("restarted agm: restart bookkeeping and contraction") {
    // quad2d from (10,10): gap0 = 251, one step reaches (7.5, 0), gap 29.125
    auto p = catalog::quad2d();
    auto run = run_agm_simple_restart(p, {10.0, 10.0}, 4.0, 0.1, 2000, std::nullopt);
    REQUIRE(run.restarts.size() >= 3);
    CHECK(run.restarts[0].start_gap == doctest::Approx(251.0));
    CHECK(run.restarts[0].K == 1);
    CHECK(run.restarts[0].iterates_at == 1);
    CHECK(run.restarts[1].start_gap == doctest::Approx(29.125));
    for (std::size_t i = 0; i + 1 < run.restarts.size(); ++i)
      CHECK(run.restarts[i + 1].start_gap < 0.5 * run.restarts[i].start_gap);
    CHECK(run.termination == Termination::budget_exhausted);
    CHECK(run.iterates_computed == 2000);
  }

  TEST_CASE("restarted agm: success compared against its bound") {
    auto p = catalog::quad1d();
    auto run = run_agm_simple_restart(p, {4.0}, 1.0, 0.1, 5000, 0.0);
    REQUIRE(run.success_iterates.has_value());
    CHECK(run.trace.front().f == doctest::Approx(8.0));
    std::map<std::string, double> inputs = {{"G", 1.0 / std::sqrt(2.0)},
                                            {"L", 1.0},
                                            {"f0_gap", 9.0},
                                            {"opt_gap", 1.0},
                                            {"eps_prime", 0.1}};
    auto report = compare_report(run, "T7", inputs);
    CHECK(report.satisfied);
    CHECK(report.observed == run.success_iterates.value());
    CHECK(report.theoretical == doctest::Approx(bound_theorem7(1.0 / std::sqrt(2.0), 1.0, 9.0,
                                                               1.0, 0.1)));
  }

  TEST_CASE("alg5 diagnostic caps") {
    auto caps = diagnostics_caps_alg5(1.0, 1.0, 1.0, 0.25, 0.25);
    CHECK(caps.J == 2);   // ceil(sqrt(8) - 1)
    CHECK(caps.I == 5);   // ceil(sqrt(32) - 1)
    CHECK_THROWS_AS(diagnostics_caps_alg5(0.0, 1.0, 1.0, 0.5), std::invalid_argument);
  }

  TEST_CASE("restarted agm is deterministic") {
    auto p = catalog::quad2d();
    auto a = run_agm_simple_restart(p, {1.0, 1.0}, 4.0, 0.05, 2000, std::nullopt);
    auto b = run_agm_simple_restart(p, {1.0, 1.0}, 4.0, 0.05, 2000, std::nullopt);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) CHECK(a.trace[i].f == b.trace[i].f);
  }
}
