#pragma once
// Replay of time-stamped sensor evidence: windowed fusion, a decision per
// step, and CSV / table traces of the result.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evident/decision.hpp"

namespace evident {

inline constexpr double kDefaultWindow = 10.0;
inline constexpr double kDefaultStep = 1.0;
// Slack when placing reports against step times built as t0 + k * step.
inline constexpr double kTimeSlack = 1e-9;

struct SensorReport {
    std::string sensor_id;
    double time = 0.0;
    Proposition focus;
    double degree = 0.0;
};

struct Scenario {
    Frame frame;
    std::vector<SensorReport> reports;  // by time, then sensor id
    double window = kDefaultWindow;
    double step = kDefaultStep;
    double discount_rate = 1.0;  // per second; 1 keeps evidence at full strength
    double conflict_threshold = kDefaultConflictThreshold;
};

// Throws InvalidWindow (window or step not positive), InvalidParameter,
// UnsortedReports, EmptyFocus, DegreeOutOfRange or FrameMismatch.
// Reports sharing a time are put in sensor id order.
void validate(Scenario& scenario);

// Scenario file:
// {"frame": [atoms], "window": s, "step": s, "discount_rate": r,
//  "conflict_threshold": c, "reports": [{"sensor": id, "t": s, "focus": [atoms], "degree": d}]}
// Only "frame" and "reports" are required.
Scenario load_scenario(std::string_view text);

struct AtomInterval {
    std::string atom;
    EvidentialInterval interval;
};

struct TraceRow {
    double time = 0.0;
    std::vector<AtomInterval> intervals;  // frame order
    double cumulative_conflict = 0.0;
    DecisionStatus status = DecisionStatus::Conflicted;
    ConflictReason reason = ConflictReason::Tie;
    std::optional<std::string> hypothesis;
    std::size_t fused_reports = 0;
};

// Evidence in force at time t: reports with t - window < time <= t, each as a
// simple support discounted by discount_rate^(t - time), in fold order.
std::vector<MassFunction> evidence_at(const Scenario& scenario, double t);

// One row per step from the first report time to the last. Total conflict
// does not stop the run: the row is vacuous with conflict 1 and status
// conflicted:high_conflict.
std::vector<TraceRow> run_scenario(const Scenario& scenario);

enum class TraceFormat : std::uint8_t { Csv, Table };

// Fixed-point with 6 fractional digits, ties to even.
std::string format_real(double value);

// Throws EmptyTrace when rows is empty.
std::string emit_trace(const std::vector<TraceRow>& rows, TraceFormat format);

// Input of the `combine` command:
// {"frame": [atoms], "masses": [[{"focus": [atoms], "mass": x}, ...], ...]}
struct MassBundle {
    Frame frame;
    std::vector<MassFunction> masses;
};
MassBundle parse_masses(std::string_view text);

}  // namespace evident
