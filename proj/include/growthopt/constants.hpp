#pragma once

#include <cmath>

// Single source of truth for every algorithm constant and complexity-bound
// coefficient. Nothing in the library inlines these numbers; the calculators
// and runners all read them from here.
namespace growthopt::constants {

// ---- two-rate restarted subgradient method (wire id of its bound: T4) ----
inline const double two_rate_B = 1.0 / std::sqrt(std::exp(1.0));   // restart threshold
inline const double two_rate_F = std::sqrt(std::exp(1.0));         // step-size damping
inline const double two_rate_eps_bar_prime = 0.9;                  // fixed coarse tolerance
inline const double t4_outer = 18.0;
inline const double t4_log = 2.7;

// ---- subgradient method with Polyak steps (T5) ----
inline const double t5_outer = 2.0;
inline const double t5_log = 2.9;
inline const double t5_inv = 6.8;
inline const double t5_inv_sq = 2.0;

// ---- parametric smoothing / restarting method (T6, T8) ----
inline const double smoothing_B = 0.5;   // restart threshold
inline const double smoothing_t = 0.125; // smoothing-parameter scale
inline const double t6_outer = 23.0;
inline const double t6_log = 1.42;
inline const double t6_inv = 2.0;
inline const double t8_lead = 22.7;
inline const double t8_log = 32.7;
inline const double t8_sqrt = 32.0;

// ---- accelerated gradient method with simple restarting (T7) ----
inline const double agm_restart_B = 0.5; // restart threshold
inline const double t7_start = 10.0;
inline const double t7_opt = 12.0;
inline const double agm_restart_v = 0.25; // analysis-only; appears in cap diagnostics

}  // namespace growthopt::constants
