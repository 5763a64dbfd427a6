#include "sensegen/simulate.hpp"

#include <stdexcept>
#include <utility>

namespace sensegen {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

bool perturbs_activity(AnomalyKind k) {
    return k == AnomalyKind::Activity || k == AnomalyKind::Both;
}

bool perturbs_duration(AnomalyKind k) {
    return k == AnomalyKind::DurationLong ||
           k == AnomalyKind::DurationShort || k == AnomalyKind::Both;
}

OutlierDirection duration_direction(AnomalyKind k) {
    // Both combines the activity anomaly with the long-duration one.
    return k == AnomalyKind::DurationShort ? OutlierDirection::Short
                                           : OutlierDirection::Long;
}

/// Inverse-CDF draw over an unnormalized weight row; -1 when all mass is 0.
int sample_row(const std::vector<double>& weights, RandomSource& rng) {
    double mass = 0.0;
    for (double w : weights) mass += w;
    if (mass <= 0.0) return -1;
    const double u = rng.uniform() * mass;
    double cumulative = 0.0;
    int last_positive = -1;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (weights[j] <= 0.0) continue;
        last_positive = static_cast<int>(j);
        cumulative += weights[j];
        if (cumulative >= u) return static_cast<int>(j);
    }
    return last_positive;
}

}  // namespace

SensorState::SensorState(const std::vector<std::string>& sensors) {
    for (const auto& s : sensors) on_[s] = false;
}

bool SensorState::is_valid_event(const std::string& sensor,
                                 Polarity polarity) const {
    const auto it = on_.find(sensor);
    if (it == on_.end()) {
        throw std::invalid_argument("unknown sensor '" + sensor + "'");
    }
    return (polarity == Polarity::On) ? !it->second : it->second;
}

void SensorState::apply(const std::string& sensor, Polarity polarity) {
    on_.at(sensor) = polarity == Polarity::On;
}

std::optional<std::size_t> active_anomaly(
    const std::vector<AnomalySpec>& anomalies, std::int64_t t) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < anomalies.size(); ++i) {
        const auto& a = anomalies[i];
        if (t < a.window_start || t > a.window_end) continue;
        if (!best || a.window_start < anomalies[*best].window_start) best = i;
    }
    return best;
}

int anomalous_period(int true_period, int n_periods, RandomSource& rng) {
    if (n_periods < 2) {
        throw std::invalid_argument(
            "anomalous_period needs at least 2 periods");
    }
    const int draw = static_cast<int>(
        rng.uniform_int(static_cast<std::uint64_t>(n_periods - 1)));
    return draw >= true_period ? draw + 1 : draw;
}

EventLog simulate(const Generator& gen, const SimConfig& cfg) {
    if (cfg.days < 1) throw std::invalid_argument("days must be >= 1");
    if (cfg.stall_tick < 1) {
        throw std::invalid_argument("stall_tick must be >= 1");
    }
    for (const auto& a : cfg.anomalies) {
        if (a.window_start >= a.window_end) {
            throw std::invalid_argument("anomaly window start must precede end");
        }
    }

    RandomSource rng(cfg.seed);
    const auto& chains = gen.chain_set.chains;
    const int n_periods = gen.chain_set.n_periods();
    const std::int64_t t_end = cfg.start_time + cfg.days * kSecondsPerDay;

    EventLog log;
    SensorState world(gen.sensors);
    // The initial state seeds the chain walk but is not emitted.
    std::size_t current = 0;
    std::int64_t t = cfg.start_time;

    // Anomalous period drawn once per (window, true period) pair so the
    // anomalous regime is stable within a window.
    std::map<std::pair<std::size_t, int>, int> anomalous_cache;

    while (t < t_end) {
        const int true_p =
            period_index(t % kSecondsPerDay, gen.chain_set.period_hours);
        const auto anomaly = active_anomaly(cfg.anomalies, t);

        int p = true_p;
        if (anomaly && perturbs_activity(cfg.anomalies[*anomaly].kind) &&
            n_periods >= 2) {
            const auto key = std::make_pair(*anomaly, true_p);
            auto it = anomalous_cache.find(key);
            if (it == anomalous_cache.end()) {
                it = anomalous_cache
                         .emplace(key,
                                  anomalous_period(true_p, n_periods, rng))
                         .first;
            }
            p = it->second;
        }

        const auto& chain = chains[static_cast<std::size_t>(p)];
        std::vector<double> weights = chain.rows[current];

        int candidate = -1;
        for (int rejections = 0; rejections < cfg.max_rejections;
             ++rejections) {
            const int j = sample_row(weights, rng);
            if (j < 0) break;  // all remaining mass invalid
            const auto& spec = gen.specs.at(chain.states[static_cast<std::size_t>(j)]);
            if (world.is_valid_event(spec.sensor, spec.polarity)) {
                candidate = j;
                break;
            }
            weights[static_cast<std::size_t>(j)] = 0.0;
        }

        if (candidate < 0) {
            t += cfg.stall_tick;
            continue;
        }

        const auto& label = chain.states[static_cast<std::size_t>(candidate)];
        const auto& spec = gen.specs.at(label);
        log.events.push_back({t, spec.sensor, spec.polarity});
        world.apply(spec.sensor, spec.polarity);
        current = static_cast<std::size_t>(candidate);

        // Dwell stats come from the true period even under an activity
        // anomaly; a duration anomaly replaces only the mean.
        DurationStats stats = spec.stats_for(true_p);
        if (anomaly && perturbs_duration(cfg.anomalies[*anomaly].kind)) {
            stats.mean_s = outlier_mean(
                stats, duration_direction(cfg.anomalies[*anomaly].kind));
        }
        t += sample_duration(stats, rng);
    }
    return log;
}

}  // namespace sensegen
