#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sensegen/generator.hpp"
#include "sensegen/learn.hpp"

namespace sensegen {

enum class AnomalyKind { Activity, DurationLong, DurationShort, Both };

/// A time window during which the engine perturbs the chain period and/or
/// the duration mean. Both window edges are inclusive.
struct AnomalySpec {
    std::int64_t window_start = 0;
    std::int64_t window_end = 0;
    AnomalyKind kind = AnomalyKind::Activity;
};

/// Tracked world state: one boolean per sensor, all OFF at simulation start.
class SensorState {
public:
    explicit SensorState(const std::vector<std::string>& sensors);

    /// ON is valid iff the sensor is currently OFF, and vice versa.
    /// Throws std::invalid_argument on an unknown sensor.
    bool is_valid_event(const std::string& sensor, Polarity polarity) const;

    void apply(const std::string& sensor, Polarity polarity);

private:
    std::map<std::string, bool> on_;
};

struct SimConfig {
    std::int64_t start_time = 0;  // 1970-01-01T00:00:00Z
    int days = 1;
    std::uint64_t seed = 0;
    std::vector<AnomalySpec> anomalies;
    int max_rejections = 32;
    std::int64_t stall_tick = 60;
};

/// The anomaly whose inclusive window contains t; overlaps resolve to the
/// earliest window_start, ties to input order. Returns the index into
/// `anomalies`, or nullopt.
std::optional<std::size_t> active_anomaly(
    const std::vector<AnomalySpec>& anomalies, std::int64_t t);

/// Uniform draw over all period indices except the true one.
/// Throws std::invalid_argument when n_periods < 2.
int anomalous_period(int true_period, int n_periods, RandomSource& rng);

/// Drives the clock from cfg.start_time for cfg.days, sampling events from
/// the period-appropriate chain, enforcing sensor validity by
/// zero-and-renormalize rejection, applying active anomalies, and emitting
/// the log. Deterministic for equal (gen, cfg).
EventLog simulate(const Generator& gen, const SimConfig& cfg);

}  // namespace sensegen
