// Shared builders for simulation-oriented tests.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "sensegen/generator.hpp"
#include "sensegen/learn.hpp"
#include "sensegen/simulate.hpp"

namespace testsupport {

using namespace sensegen;

/// Strictly positive 4-state matrix whose mass rides the valid cycle
/// a_ON -> a_OFF -> b_ON -> b_OFF -> a_ON, with `eps` leaked elsewhere.
/// `tilt` nudges the main diagonal of the cycle to differentiate periods.
inline TransitionMatrix cycle_matrix(double tilt = 0.0) {
    const double big = 0.92 - tilt;
    const double mid = 0.06 + tilt;
    TransitionMatrix m;
    m.states = {"a_ON", "a_OFF", "b_ON", "b_OFF"};
    m.rows = {
        {0.01, big, mid, 0.01},   // a_ON
        {mid, 0.01, big, 0.01},   // a_OFF
        {mid, 0.01, 0.01, big},   // b_ON
        {big, 0.01, mid, 0.01},   // b_OFF
    };
    return m;
}

/// Two-sensor generator with four distinct strictly positive period
/// matrices and per-state dwell stats.
inline Generator two_sensor_generator(double sd = 20.0) {
    std::vector<ActivityRecord> activities = {
        {"a_ON", Polarity::On, "a", {240.0, sd, 0}},
        {"a_OFF", Polarity::Off, "a", {120.0, sd, 0}},
        {"b_ON", Polarity::On, "b", {300.0, sd, 0}},
        {"b_OFF", Polarity::Off, "b", {180.0, sd, 0}},
    };
    return build_matrix_generator(cycle_matrix(0.01), cycle_matrix(0.02),
                                  cycle_matrix(0.03), cycle_matrix(0.0),
                                  activities);
}

/// Single-sensor alternator whose rows sit close to the validity
/// constraint: nearly all mass on the forced toggle, `eps` elsewhere.
/// Simulating and re-learning such a generator recovers its rows closely,
/// which makes it the reference model for round-trip estimation checks.
inline Generator alternator_generator(double sd = 15.0) {
    auto chain = [](double eps) {
        return TransitionMatrix{{"tv_ON", "tv_OFF"},
                                {{eps, 1.0 - eps}, {1.0 - eps, eps}}};
    };
    std::vector<ActivityRecord> activities = {
        {"tv_ON", Polarity::On, "tv", {300.0, sd, 0}},
        {"tv_OFF", Polarity::Off, "tv", {180.0, sd, 0}},
    };
    return build_matrix_generator(chain(0.01), chain(0.015), chain(0.02),
                                  chain(0.005), activities);
}

/// Single-sensor generator where every chain is the identity matrix.
inline Generator identity_tv_generator() {
    TransitionMatrix m{{"tv_ON", "tv_OFF"}, {{1.0, 0.0}, {0.0, 1.0}}};
    std::vector<ActivityRecord> activities = {
        {"tv_ON", Polarity::On, "tv", {600.0, 0.0, 0}},
        {"tv_OFF", Polarity::Off, "tv", {600.0, 0.0, 0}},
    };
    return build_matrix_generator(m, m, m, m, activities);
}

/// Checks per-sensor strict ON/OFF alternation starting with ON.
inline bool alternates(const EventLog& log) {
    std::map<std::string, bool> on;
    for (const auto& e : log.events) {
        const bool is_on = e.polarity == Polarity::On;
        if (on[e.sensor] == is_on) return false;
        on[e.sensor] = is_on;
    }
    return true;
}

}  // namespace testsupport
