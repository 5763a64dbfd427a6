#pragma once

#include <map>
#include <string>
#include <vector>

#include "sensegen/duration.hpp"
#include "sensegen/matrix.hpp"

namespace sensegen {

enum class Polarity { On, Off };

inline const char* to_string(Polarity p) {
    return p == Polarity::On ? "ON" : "OFF";
}

/// One row of the activities table: a chain state bound to a sensor edge
/// and its dwell-time statistics.
struct ActivityRecord {
    std::string activity;  // state label
    Polarity polarity = Polarity::On;
    std::string sensor;
    DurationStats duration;
};

/// Sensor binding plus per-period dwell statistics for one chain state.
struct StateSpec {
    std::string sensor;
    Polarity polarity = Polarity::On;
    std::vector<DurationStats> per_period;  // size == chain_set.n_periods()

    const DurationStats& stats_for(int period) const {
        return per_period[static_cast<std::size_t>(period)];
    }
};

/// The complete behavioral model handed to the simulation engine:
/// period-indexed chains plus a spec for every chain state.
struct Generator {
    ChainSet chain_set;
    std::map<std::string, StateSpec> specs;
    std::vector<std::string> sensors;  // ordered, unique
};

/// Clock order of the four named periods under the 6-hour day split.
enum PeriodOfDay { kNight = 0, kMorning = 1, kAfternoon = 2, kEvening = 3 };

/// Builds a Generator from four user-authored period matrices and the
/// activities table. Chains are ordered by clock period (night, morning,
/// afternoon, evening over 6-hour quarters); all four matrices must share
/// one ordered state set and every state must have a matching activity
/// record. Duration stats are period-independent in this mode.
///
/// Activity records with no matching chain state are dropped; a note per
/// dropped record is appended to `warnings` when non-null.
/// Throws std::invalid_argument on any structural error.
Generator build_matrix_generator(const TransitionMatrix& morning,
                                 const TransitionMatrix& afternoon,
                                 const TransitionMatrix& evening,
                                 const TransitionMatrix& night,
                                 const std::vector<ActivityRecord>& activities,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace sensegen
