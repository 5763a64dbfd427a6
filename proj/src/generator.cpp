#include "sensegen/generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace sensegen {

namespace {

void require_valid(const TransitionMatrix& m, const char* which) {
    const auto report = validate_matrix(m);
    if (!report.ok()) {
        throw std::invalid_argument(std::string(which) + " matrix invalid: " +
                                    report.violations.front().message);
    }
}

void require_same_states(const TransitionMatrix& reference,
                         const TransitionMatrix& other, const char* which) {
    for (const auto& s : other.states) {
        if (!reference.index_of(s)) {
            throw std::invalid_argument(std::string("state-set mismatch: '") +
                                        s + "' in " + which +
                                        " matrix is missing elsewhere");
        }
    }
    for (const auto& s : reference.states) {
        if (!other.index_of(s)) {
            throw std::invalid_argument(std::string("state-set mismatch: '") +
                                        s + "' is missing from the " + which +
                                        " matrix");
        }
    }
    if (reference.states != other.states) {
        throw std::invalid_argument(std::string("state order of the ") +
                                    which +
                                    " matrix differs from the night matrix");
    }
}

}  // namespace

Generator build_matrix_generator(const TransitionMatrix& morning,
                                 const TransitionMatrix& afternoon,
                                 const TransitionMatrix& evening,
                                 const TransitionMatrix& night,
                                 const std::vector<ActivityRecord>& activities,
                                 std::vector<std::string>* warnings) {
    require_valid(morning, "morning");
    require_valid(afternoon, "afternoon");
    require_valid(evening, "evening");
    require_valid(night, "night");

    require_same_states(night, morning, "morning");
    require_same_states(night, afternoon, "afternoon");
    require_same_states(night, evening, "evening");

    Generator gen;
    gen.chain_set.period_hours = 6;
    gen.chain_set.chains = {night, morning, afternoon, evening};
    const int n_periods = gen.chain_set.n_periods();

    for (const auto& record : activities) {
        if (record.sensor.empty()) {
            throw std::invalid_argument("activity '" + record.activity +
                                        "' has an empty sensor name");
        }
        if (gen.specs.count(record.activity)) {
            throw std::invalid_argument("duplicate activity record '" +
                                        record.activity + "'");
        }
        if (!night.index_of(record.activity)) {
            if (warnings) {
                warnings->push_back("activity '" + record.activity +
                                    "' matches no chain state; dropped");
            }
            continue;
        }
        StateSpec spec;
        spec.sensor = record.sensor;
        spec.polarity = record.polarity;
        spec.per_period.assign(static_cast<std::size_t>(n_periods),
                               record.duration);
        gen.specs.emplace(record.activity, std::move(spec));
    }

    for (const auto& state : night.states) {
        if (!gen.specs.count(state)) {
            throw std::invalid_argument("no activity record for state '" +
                                        state + "'");
        }
    }

    for (const auto& state : night.states) {
        const auto& sensor = gen.specs.at(state).sensor;
        if (std::find(gen.sensors.begin(), gen.sensors.end(), sensor) ==
            gen.sensors.end()) {
            gen.sensors.push_back(sensor);
        }
    }
    return gen;
}

}  // namespace sensegen
