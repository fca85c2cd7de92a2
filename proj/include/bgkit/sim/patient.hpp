#pragma once

#include <string>

#include "bgkit/core/rng.hpp"
#include "bgkit/core/types.hpp"

namespace bgkit::sim {

// Minimal-model rate constants, per-minute units. g_b/i_b are the
// zero-insulin equilibrium levels, so an untreated patient rests at g_b.
struct OdeParams {
  double p1 = 0.02;        // 1/min glucose effectiveness
  double p2 = 0.028;       // 1/min remote-insulin decay
  double p3 = 1.2e-5;      // (mL/uU)/min^2 insulin sensitivity gain
  double n_clear = 0.09;   // 1/min plasma insulin clearance
  double k_abs = 0.025;    // 1/min gut absorption
  double k_sc = 0.02;      // 1/min subcutaneous absorption
  double f_bio = 0.9;      // carb bioavailability, (0, 1]
  double v_g = 20.0;       // dL glucose distribution volume
  double v_i = 12000.0;    // mL insulin distribution volume
  double g_b = 180.0;      // mg/dL basal glucose
  double i_b = 0.0;        // uU/mL basal plasma insulin
};

struct PatientProfile {
  std::string id = "adult01";
  double basal_rate = 1.5;         // U/hr
  double carb_ratio = 10.0;        // g/U
  double correction_factor = 40.0; // mg/dL per U
  double target_bg = 120.0;        // mg/dL
  OdeParams ode;
};

// Throws InvalidInputError when a rate constant or volume is non-positive,
// or f_bio is outside (0, 1].
void validate_profile(const PatientProfile& profile);

PatientProfile reference_profile();

// Reference profile with the six rate constants scaled by uniform factors in
// [0.8, 1.2]; volumes and equilibrium levels stay fixed so every variant has
// a sane closed-loop operating point.
PatientProfile perturbed_profile(std::string id, core::Rng& rng);

struct PatientState {
  double g = 0.0;    // mg/dL plasma glucose
  double x = 0.0;    // 1/min remote insulin action
  double i = 0.0;    // uU/mL plasma insulin
  double q1 = 0.0;   // g gut compartment 1
  double q2 = 0.0;   // g gut compartment 2
  double s1 = 0.0;   // U subcutaneous compartment 1
  double s2 = 0.0;   // U subcutaneous compartment 2
  double iob = 0.0;  // U insulin on board
};

// Rest state with no insulin or carbs in transit: G = g_b, I = i_b, X = 0.
PatientState equilibrium_state(const PatientProfile& profile);

// One explicit-Euler minute. dt must be 1; basal is U/hr, bolus U and carbs g
// are delivered as impulses within this minute. Compartments are clipped at
// zero and glucose floored at 1 mg/dL. Throws NumericError naming the first
// variable that turns non-finite.
PatientState step_patient(const PatientState& state, const PatientProfile& profile,
                          double basal_u_hr, double bolus_u, double carbs_g,
                          double dt_minutes);

}  // namespace bgkit::sim
