#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bgkit/core/types.hpp"
#include "bgkit/sim/patient.hpp"

namespace bgkit::sim {

/// One 12-hour closed-loop run: 145 five-minute samples including the
/// initial state, with a single meal after the first hour.
struct Scenario {
  double initial_bg = 120.0;  // mg/dL true glucose at t = 0
  int horizon_steps = 145;
  int meal_step = 20;         // must satisfy 12 < meal_step < horizon_steps
  double meal_grams = 60.0;   // 30..100
  std::uint64_t rng_seed = 0; // drives the CGM noise stream
};

void validate_scenario(const Scenario& scenario);

// Simulates the closed loop: the controller issues the profile basal every
// step and, at the meal step, a bolus of carbs/carb_ratio plus a correction
// of max(0, cgm - target)/correction_factor. Each 5-minute step integrates
// five explicit-Euler minutes. The CGM channel is true glucose plus
// Gaussian(0, cgm_sigma^2), clamped to [40, 400]; true_bg is populated.
core::Trace run_closed_loop(const PatientProfile& profile, const Scenario& scenario,
                            double cgm_sigma);

struct DatasetConfig {
  std::vector<double> initials = {80, 100, 120, 140, 160, 180};
  int sims_per_initial = 75;
  double cgm_sigma = 11.0;
  int horizon_steps = 145;
  // Rebound protocol: low initial BG plus a large early unannounced-treatment
  // meal, producing low-then-high traces for alert stress tests.
  bool rebound_protocol = false;
};

// One trace per (profile, replicate, initial), ordered replicate-major so a
// chronological split keeps the initial-BG mix balanced. Meal size is uniform
// in [30, 100] g and meal time uniform in [13, horizon-13]; per-trace RNG
// streams derive from the master seed, so results are reproducible and
// independent of generation order.
std::vector<core::Trace> generate_dataset(std::span<const PatientProfile> profiles,
                                          const DatasetConfig& config, std::uint64_t seed);

// RMSE between the CGM channel and true subcutaneous glucose. Throws
// DataError when true_bg is absent (clinical data).
double cgm_noise_floor(const core::Trace& trace);
double cgm_noise_floor(std::span<const core::Trace> traces);

}  // namespace bgkit::sim
