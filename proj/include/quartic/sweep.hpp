#pragma once

// Parameter sweeps over (|alpha|, theta, lambda, t): closed-form evaluation,
// exact evolution, or both side by side with lambda-scaling verdicts.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/criteria.hpp"
#include "quartic/perturbative.hpp"

namespace quartic {

enum class Witness { kF, kD1, kD2, kD3, kN, kQuadrature, kHillery };
enum class SweepMode { kClosedForm, kExact, kCompare };

inline constexpr double kScalingSlopeThreshold = 1.8;
inline constexpr double kErrorFloor = 1e-12;
inline constexpr double kConvergenceTolerance = 1e-9;

std::string_view to_string(Witness w);
std::string_view to_string(SweepMode m);
std::string_view to_string(FormFamily f);
Witness parse_witness(std::string_view token);
SweepMode parse_mode(std::string_view token);
FormFamily parse_forms(std::string_view token);
const std::vector<Witness>& all_witnesses();

/// Real number or a multiple of pi: "0.25", "1e-3", "pi", "2pi", "pi/2",
/// "-3pi/4", "3*pi/4". Multiples of pi are formed as (k * pi) / m so that
/// "pi/2" is exactly the double nearest pi/2.
double parse_angle(std::string_view token);
/// Comma-separated list of parse_angle tokens.
std::vector<double> parse_grid(std::string_view list);

struct TimeGrid {
  double start = 0.0;
  double end = 0.0;
  int steps = 2;

  /// Inclusive linspace point i of steps.
  double at(int i) const;
};

struct SweepSpec {
  std::vector<double> alpha;
  std::vector<double> theta;
  std::vector<double> lambda;
  TimeGrid t;
  std::optional<int> dim;  // empty: auto per alpha
  SweepMode mode = SweepMode::kClosedForm;
  FormFamily forms = FormFamily::kPublished;
  std::vector<Witness> witnesses;
  std::string output_path;  // empty: standard output

  /// Throws InvalidArgument naming the offending key.
  void validate() const;
  /// Throws PreconditionFailure when a forced dimension is too small for
  /// some alpha in the grid.
  void check_truncation() const;
  int dim_for(double alpha_mag) const;
  std::size_t expected_rows() const;
};

struct SweepRow {
  double alpha_mag = 0.0;
  double theta = 0.0;
  double lambda = 0.0;
  double t = 0.0;
  Witness witness = Witness::kF;
  std::optional<double> value_cf;
  std::optional<double> value_exact;
  std::optional<double> abs_error;
  std::optional<Classification> classification;
};

/// Statistics of one witness over the t grid at fixed (alpha, theta, lambda).
struct WitnessSummary {
  double alpha_mag = 0.0;
  double theta = 0.0;
  double lambda = 0.0;
  Witness witness = Witness::kF;
  double min = 0.0;
  double max = 0.0;
  int zero_crossings = 0;
  std::optional<double> max_abs_error;
};

/// log-log fit of max-over-t |closed form - exact| against lambda.
struct ScalingEntry {
  double alpha_mag = 0.0;
  double theta = 0.0;
  Witness witness = Witness::kF;
  std::vector<double> lambdas;
  std::vector<double> max_errors;
  std::optional<double> slope;  // empty when floor-limited
  bool floor_limited = false;
  bool passed = false;
};

enum class ScalingStatus { kPass, kFail, kFloorLimited };
std::string_view to_string(ScalingStatus s);

struct WitnessVerdict {
  Witness witness = Witness::kF;
  ScalingStatus status = ScalingStatus::kFloorLimited;
  std::optional<double> worst_slope;
};

struct ScalingReport {
  std::vector<ScalingEntry> entries;
  std::vector<WitnessVerdict> verdicts;
  bool passed() const;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<WitnessSummary> summary;
  std::optional<ScalingReport> scaling;
};

SweepResult run_sweep(const SweepSpec& spec);

/// Least-squares slope of log10(y) against log10(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Scaling fit over rows of a compare-mode sweep.
ScalingReport scaling_from_rows(const SweepSpec& spec, const std::vector<SweepRow>& rows);
/// Runs the sweep in compare mode and fits. Requires at least two distinct
/// positive lambdas spanning at least one decade.
ScalingReport compare_report(const SweepSpec& spec);

struct ConvergenceReport {
  double max_relative_drift = 0.0;
  int points_checked = 0;
  bool passed = false;
};

/// Recomputes up to samples_per_group t points of every (alpha, theta,
/// lambda) group at twice the truncation and compares all recorded moments.
/// Drift is relative with an absolute floor of kErrorFloor.
ConvergenceReport convergence_check(const SweepSpec& spec, int samples_per_group = 5);

/// Shortest decimal that reads back to the same double.
std::string format_number(double value);

inline constexpr std::string_view kCsvHeader =
    "alpha_mag,theta,lambda,t,witness,value_cf,value_exact,abs_error,classification";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_summary(std::ostream& out, const SweepSpec& spec, const SweepResult& result);

}  // namespace quartic
