#include "sensegen/learn.hpp"

#include <map>
#include <stdexcept>

namespace sensegen {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

void check_inputs(const EventLog& log, int interval_hours) {
    if (interval_hours <= 0 || 24 % interval_hours != 0) {
        throw std::invalid_argument("interval_hours must divide 24, got " +
                                    std::to_string(interval_hours));
    }
    if (log.events.size() < 2) {
        throw std::invalid_argument(
            "log must contain at least 2 events, got " +
            std::to_string(log.events.size()));
    }
    if (!log.sorted()) {
        throw std::invalid_argument("log is not sorted by timestamp");
    }
}

std::vector<std::string> first_appearance_states(const EventLog& log) {
    std::vector<std::string> states;
    for (const auto& e : log.events) {
        const auto label = state_label(e.sensor, e.polarity);
        bool seen = false;
        for (const auto& s : states) {
            if (s == label) {
                seen = true;
                break;
            }
        }
        if (!seen) states.push_back(label);
    }
    return states;
}

}  // namespace

bool EventLog::sorted() const {
    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].timestamp < events[i - 1].timestamp) return false;
    }
    return true;
}

std::string state_label(const std::string& sensor, Polarity polarity) {
    return sensor + "_" + to_string(polarity);
}

TransitionCounts transition_counts(const EventLog& log, int interval_hours) {
    check_inputs(log, interval_hours);

    TransitionCounts tc;
    tc.period_hours = interval_hours;
    tc.states = first_appearance_states(log);

    const int n_periods = 24 / interval_hours;
    const std::size_t n_states = tc.states.size();
    tc.counts.assign(
        static_cast<std::size_t>(n_periods),
        std::vector<std::vector<std::int64_t>>(
            n_states, std::vector<std::int64_t>(n_states, 0)));

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n_states; ++i) index[tc.states[i]] = i;

    for (std::size_t i = 0; i + 1 < log.events.size(); ++i) {
        const auto& from = log.events[i];
        const auto& to = log.events[i + 1];
        const int p = period_index(from.timestamp % kSecondsPerDay,
                                   interval_hours);
        ++tc.counts[static_cast<std::size_t>(p)]
                   [index[state_label(from.sensor, from.polarity)]]
                   [index[state_label(to.sensor, to.polarity)]];
    }
    return tc;
}

Generator learn_generator(const EventLog& log, int interval_hours) {
    const TransitionCounts tc = transition_counts(log, interval_hours);
    const int n_periods = 24 / interval_hours;
    const std::size_t n_states = tc.states.size();

    Generator gen;
    gen.chain_set.period_hours = interval_hours;
    for (int p = 0; p < n_periods; ++p) {
        TransitionMatrix m;
        m.states = tc.states;
        m.rows.assign(n_states, std::vector<double>(n_states, 0.0));
        for (std::size_t i = 0; i < n_states; ++i) {
            std::int64_t row_total = 0;
            for (auto c : tc.counts[static_cast<std::size_t>(p)][i]) {
                row_total += c;
            }
            if (row_total == 0) {
                // No observation of this state in this period: uniform row
                // keeps the matrix valid and every state reachable.
                for (auto& v : m.rows[i]) {
                    v = 1.0 / static_cast<double>(n_states);
                }
            } else {
                for (std::size_t j = 0; j < n_states; ++j) {
                    m.rows[i][j] =
                        static_cast<double>(
                            tc.counts[static_cast<std::size_t>(p)][i][j]) /
                        static_cast<double>(row_total);
                }
            }
        }
        gen.chain_set.chains.push_back(std::move(m));
    }

    // Holding times per (state, period) and per state overall.
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n_states; ++i) index[tc.states[i]] = i;

    std::vector<std::vector<std::vector<std::int64_t>>> per_period_gaps(
        n_states, std::vector<std::vector<std::int64_t>>(
                      static_cast<std::size_t>(n_periods)));
    std::vector<std::vector<std::int64_t>> all_gaps(n_states);

    for (std::size_t i = 0; i + 1 < log.events.size(); ++i) {
        const auto& e = log.events[i];
        const std::int64_t gap = log.events[i + 1].timestamp - e.timestamp;
        const int p =
            period_index(e.timestamp % kSecondsPerDay, interval_hours);
        const std::size_t s = index[state_label(e.sensor, e.polarity)];
        per_period_gaps[s][static_cast<std::size_t>(p)].push_back(gap);
        all_gaps[s].push_back(gap);
    }

    for (std::size_t s = 0; s < n_states; ++s) {
        const auto& label = tc.states[s];
        StateSpec spec;
        const auto underscore = label.rfind('_');
        spec.sensor = label.substr(0, underscore);
        spec.polarity = label.substr(underscore + 1) == "ON" ? Polarity::On
                                                             : Polarity::Off;

        const DurationStats overall = all_gaps[s].size() >= 2
                                          ? empirical_stats(all_gaps[s])
                                          : kDefaultDuration;
        for (int p = 0; p < n_periods; ++p) {
            const auto& gaps = per_period_gaps[s][static_cast<std::size_t>(p)];
            spec.per_period.push_back(gaps.size() >= 2 ? empirical_stats(gaps)
                                                       : overall);
        }
        gen.specs.emplace(label, std::move(spec));
    }

    for (const auto& e : log.events) {
        bool seen = false;
        for (const auto& s : gen.sensors) {
            if (s == e.sensor) {
                seen = true;
                break;
            }
        }
        if (!seen) gen.sensors.push_back(e.sensor);
    }
    return gen;
}

}  // namespace sensegen
