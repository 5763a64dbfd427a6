#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sensegen/generator.hpp"
#include "sensegen/learn.hpp"
#include "sensegen/simulate.hpp"

namespace sensegen {

/// Data error in an input file, carrying the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// `YYYY-MM-DDTHH:MM:SSZ` (UTC) to seconds since epoch and back.
std::int64_t parse_timestamp(const std::string& text);
std::string format_timestamp(std::int64_t seconds);

// Matrix file: header `state,<s1>,<s2>,...`, one row per state in header
// order. Rows off by at most 1e-6 are renormalized on load; validation is
// the caller's step.
TransitionMatrix parse_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const TransitionMatrix& m);

// Activities file: header `activity,type,sensor,mean_seconds,sd_seconds`,
// type is ON/OFF case-insensitive.
std::vector<ActivityRecord> parse_activities_csv(std::istream& in);
void write_activities_csv(std::ostream& out,
                          const std::vector<ActivityRecord>& records);

// Event log file: header `timestamp,sensor,value`, value 0/1 (ON/OFF also
// accepted on input). An unsorted file is an error, never silently sorted.
EventLog parse_event_log_csv(std::istream& in);
void write_event_log_csv(std::ostream& out, const EventLog& log);

// Anomalies file: header `start,end,kind`, kind one of activity,
// duration_long, duration_short, both.
std::vector<AnomalySpec> parse_anomalies_csv(std::istream& in);
void write_anomalies_csv(std::ostream& out,
                         const std::vector<AnomalySpec>& anomalies);

AnomalyKind parse_anomaly_kind(const std::string& text);  // throws on unknown
const char* to_string(AnomalyKind kind);

/// Probability formatting used by the matrix writer: up to 9 significant
/// digits, shortest form.
std::string format_probability(double p);

}  // namespace sensegen
