#include "bgkit/core/types.hpp"

#include <algorithm>
#include <cmath>

namespace bgkit::core {

double clamp_cgm(double bg_mgdl) {
  return std::clamp(bg_mgdl, kCgmFloor, kCgmCeil);
}

BgCategory classify(GlucoseLevel bg, const SafeRange& range) {
  if (!std::isfinite(bg)) {
    throw InvalidInputError("classify: bg is not finite");
  }
  if (!(range.low < range.high)) {
    throw InvalidInputError("classify: range.low must be below range.high");
  }
  if (bg < range.low) return BgCategory::Hypo;
  if (bg > range.high) return BgCategory::Hyper;
  return BgCategory::InRange;
}

void validate_trace(const Trace& trace) {
  if (trace.states.empty()) {
    throw DataError("trace '" + trace.patient_id + "': no states");
  }
  auto check_channel = [&](const std::vector<double>& ch, const char* name) {
    if (!ch.empty() && ch.size() != trace.states.size()) {
      throw DataError("trace '" + trace.patient_id + "': " + name +
                      " length does not match states");
    }
  };
  check_channel(trace.true_bg, "true_bg");
  check_channel(trace.basal_rate, "basal_rate");
  check_channel(trace.bolus, "bolus");
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const ApsState& s = trace.states[i];
    if (s.insulin_dose < 0 || s.iob < 0 || s.carbs < 0) {
      throw DataError("trace '" + trace.patient_id + "': negative insulin/iob/carbs at index " +
                      std::to_string(i));
    }
    if (!std::isfinite(s.bg)) {
      throw DataError("trace '" + trace.patient_id + "': non-finite bg at index " +
                      std::to_string(i));
    }
  }
}

double iob_decay_factor(double dt_minutes) {
  // <5% remaining at kDiaMinutes: decay rate ln(20)/DIA per minute.
  return std::exp(std::log(0.05) * dt_minutes / kDiaMinutes);
}

}  // namespace bgkit::core
