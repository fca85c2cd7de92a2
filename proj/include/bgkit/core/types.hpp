#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgkit::core {

// Error categories; the CLI maps these onto exit codes.
struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Blood glucose in mg/dL.
using GlucoseLevel = double;

// Commercial CGM sensors report within [40, 400] mg/dL. The clamp applies to
// the CGM channel only, never to true subcutaneous glucose.
inline constexpr double kCgmFloor = 40.0;
inline constexpr double kCgmCeil = 400.0;

double clamp_cgm(double bg_mgdl);

/// BG safe range; boundary values count as in range.
struct SafeRange {
  double low = 70.0;
  double high = 180.0;
};

enum class BgCategory { Hypo, InRange, Hyper };

// Hypo iff bg < low, Hyper iff bg > high, InRange otherwise.
// Throws InvalidInputError for non-finite bg.
BgCategory classify(GlucoseLevel bg, const SafeRange& range = {});

/// One 5-minute closed-loop APS sample.
struct ApsState {
  double bg = 0.0;            // CGM glucose, mg/dL
  double insulin_dose = 0.0;  // insulin delivered this step, U
  double iob = 0.0;           // insulin on board, U
  double carbs = 0.0;         // carbs entered this step, g
};

/// Chronological APS states for one patient at a fixed 5-minute cadence.
/// true_bg is populated by the simulator only; basal_rate / bolus carry the
/// pump channels when known (always present for CSV- or simulator-built
/// traces), so the insulin dose can be decomposed later.
struct Trace {
  static constexpr int kStepMinutes = 5;

  std::string patient_id;
  std::int64_t start_epoch = 0;  // unix seconds of states[0]
  std::vector<ApsState> states;
  std::vector<double> true_bg;     // empty, or one entry per state
  std::vector<double> basal_rate;  // U/hr; empty, or one entry per state
  std::vector<double> bolus;       // U; empty, or one entry per state

  std::size_t size() const { return states.size(); }
  bool has_true_bg() const { return !true_bg.empty(); }
};

// Throws DataError when a Trace invariant is violated (empty states,
// mismatched channel lengths, negative insulin/iob/carbs).
void validate_trace(const Trace& trace);

// Insulin-on-board decay. Exponential, tuned so under 5% of a dose remains
// after the 4-hour duration of insulin action.
inline constexpr double kDiaMinutes = 240.0;
double iob_decay_factor(double dt_minutes);

}  // namespace bgkit::core
