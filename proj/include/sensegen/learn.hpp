#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sensegen/generator.hpp"

namespace sensegen {

/// A single binary sensor edge: the sensor switched to `polarity` at
/// `timestamp` (seconds since epoch, UTC).
struct Event {
    std::int64_t timestamp = 0;
    std::string sensor;
    Polarity polarity = Polarity::On;

    bool operator==(const Event&) const = default;
};

/// Events ordered by timestamp (ties keep input order).
struct EventLog {
    std::vector<Event> events;

    bool sorted() const;
};

/// State label for an event: `<sensor>_<ON|OFF>`.
std::string state_label(const std::string& sensor, Polarity polarity);

/// Raw per-period transition count matrices over the log's state set
/// (first-appearance order). Each consecutive event pair credits one count
/// to the period containing the earlier event's time of day; the total
/// over all periods is |log| - 1.
struct TransitionCounts {
    int period_hours = 0;
    std::vector<std::string> states;
    // counts[period][from][to]
    std::vector<std::vector<std::vector<std::int64_t>>> counts;
};

TransitionCounts transition_counts(const EventLog& log, int interval_hours);

/// Dwell-stats fallback when a state has fewer than two holding-time
/// samples anywhere in the log.
inline constexpr DurationStats kDefaultDuration{60.0, 0.0, 0};

/// Estimates a Generator from a sample log: per-period transition matrices
/// (zero-count rows become uniform) and per-(state, period) holding-time
/// statistics. The holding time of an event is the gap to the next event;
/// the last event contributes neither a transition nor a holding time.
/// Per-period stats with fewer than two samples fall back to the state's
/// all-period stats, then to kDefaultDuration.
/// Throws std::invalid_argument on bad interval, |log| < 2, or unsorted log.
Generator learn_generator(const EventLog& log, int interval_hours);

}  // namespace sensegen
