#include "bgkit/sim/patient.hpp"

#include <cmath>
#include <utility>

namespace bgkit::sim {

using core::InvalidInputError;
using core::NumericError;

void validate_profile(const PatientProfile& p) {
  const OdeParams& o = p.ode;
  const double rates[] = {o.p1, o.p2, o.p3, o.n_clear, o.k_abs, o.k_sc, o.v_g, o.v_i};
  for (double r : rates) {
    if (!(r > 0.0)) throw InvalidInputError("profile '" + p.id + "': non-positive ODE parameter");
  }
  if (!(o.f_bio > 0.0 && o.f_bio <= 1.0)) {
    throw InvalidInputError("profile '" + p.id + "': f_bio must be in (0, 1]");
  }
  if (p.basal_rate < 0 || p.carb_ratio <= 0 || p.correction_factor <= 0 || p.target_bg <= 0) {
    throw InvalidInputError("profile '" + p.id + "': bad controller parameter");
  }
}

PatientProfile reference_profile() { return PatientProfile{}; }

PatientProfile perturbed_profile(std::string id, core::Rng& rng) {
  PatientProfile p = reference_profile();
  p.id = std::move(id);
  auto scale = [&rng](double v) { return v * rng.uniform(0.8, 1.2); };
  p.ode.p1 = scale(p.ode.p1);
  p.ode.p2 = scale(p.ode.p2);
  p.ode.p3 = scale(p.ode.p3);
  p.ode.n_clear = scale(p.ode.n_clear);
  p.ode.k_abs = scale(p.ode.k_abs);
  p.ode.k_sc = scale(p.ode.k_sc);
  return p;
}

PatientState equilibrium_state(const PatientProfile& profile) {
  PatientState s;
  s.g = profile.ode.g_b;
  s.i = profile.ode.i_b;
  return s;
}

PatientState step_patient(const PatientState& state, const PatientProfile& profile,
                          double basal_u_hr, double bolus_u, double carbs_g,
                          double dt_minutes) {
  if (dt_minutes != 1.0) {
    throw InvalidInputError("step_patient: dt must be 1 minute");
  }
  if (basal_u_hr < 0 || bolus_u < 0 || carbs_g < 0) {
    throw InvalidInputError("step_patient: negative input");
  }
  const OdeParams& o = profile.ode;
  const double dt = dt_minutes;

  const double carb_inflow = carbs_g / dt;                     // g/min
  const double insulin_inflow = basal_u_hr / 60.0 + bolus_u / dt;  // U/min

  const double dg = -o.p1 * (state.g - o.g_b) - state.x * state.g +
                    o.f_bio * o.k_abs * state.q2 * (100.0 / o.v_g);
  const double dx = -o.p2 * state.x + o.p3 * (state.i - o.i_b);
  const double di = -o.n_clear * state.i + o.k_sc * state.s2 * 1e6 / o.v_i;
  const double dq1 = carb_inflow - o.k_abs * state.q1;
  const double dq2 = o.k_abs * (state.q1 - state.q2);
  const double ds1 = insulin_inflow - o.k_sc * state.s1;
  const double ds2 = o.k_sc * (state.s1 - state.s2);

  PatientState next;
  next.g = std::max(1.0, state.g + dt * dg);
  next.x = state.x + dt * dx;
  next.i = state.i + dt * di;
  next.q1 = std::max(0.0, state.q1 + dt * dq1);
  next.q2 = std::max(0.0, state.q2 + dt * dq2);
  next.s1 = std::max(0.0, state.s1 + dt * ds1);
  next.s2 = std::max(0.0, state.s2 + dt * ds2);
  next.iob = state.iob * core::iob_decay_factor(dt) + basal_u_hr * dt / 60.0 + bolus_u;

  const std::pair<const char*, double> vars[] = {
      {"G", next.g},   {"X", next.x},   {"I", next.i},  {"q1", next.q1},
      {"q2", next.q2}, {"s1", next.s1}, {"s2", next.s2}, {"iob", next.iob}};
  for (const auto& [name, value] : vars) {
    if (!std::isfinite(value)) {
      throw NumericError(std::string("step_patient: ") + name + " diverged (non-finite)");
    }
  }
  return next;
}

}  // namespace bgkit::sim
