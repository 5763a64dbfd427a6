#include <doctest.h>

#include <stdexcept>

#include "sensegen/generator.hpp"

using namespace sensegen;

namespace {

TransitionMatrix three_state() {
    return {{"tv_ON", "tv_OFF", "bed_ON"},
            {{0.0, 0.8, 0.2}, {0.5, 0.0, 0.5}, {0.3, 0.7, 0.0}}};
}

std::vector<ActivityRecord> three_activities() {
    return {
        {"tv_ON", Polarity::On, "tv", {600.0, 60.0, 0}},
        {"tv_OFF", Polarity::Off, "tv", {120.0, 10.0, 0}},
        {"bed_ON", Polarity::On, "bed", {28800.0, 1800.0, 0}},
    };
}

}  // namespace

TEST_CASE("build_matrix_generator assembles four chains and specs") {
    const auto m = three_state();
    const auto gen =
        build_matrix_generator(m, m, m, m, three_activities());
    CHECK(gen.chain_set.period_hours == 6);
    CHECK(gen.chain_set.n_periods() == 4);
    CHECK(gen.specs.size() == 3);
    CHECK(gen.sensors == std::vector<std::string>{"tv", "bed"});
    // duration stats period-independent in matrix mode
    for (int p = 0; p < 4; ++p) {
        CHECK(gen.specs.at("tv_ON").stats_for(p).mean_s == 600.0);
    }
}

TEST_CASE("chains are ordered night, morning, afternoon, evening") {
    auto morning = three_state();
    morning.rows[0] = {0.0, 0.5, 0.5};
    auto night = three_state();
    night.rows[0] = {0.0, 0.1, 0.9};
    const auto base = three_state();
    const auto gen = build_matrix_generator(morning, base, base, night,
                                            three_activities());
    CHECK(gen.chain_set.chains[kNight].rows[0][2] == 0.9);
    CHECK(gen.chain_set.chains[kMorning].rows[0][2] == 0.5);
    CHECK(gen.chain_set.chains[kAfternoon].rows[0][2] == 0.2);
}

TEST_CASE("state-set mismatch names the offending state") {
    auto morning = three_state();
    morning.states.push_back("nap");
    for (auto& row : morning.rows) row.push_back(0.0);
    morning.rows.push_back({0.0, 0.0, 0.0, 1.0});
    const auto base = three_state();
    try {
        build_matrix_generator(morning, base, base, base, three_activities());
        FAIL("expected state-set mismatch");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("nap") != std::string::npos);
    }
}

TEST_CASE("a state without an activity record is an error naming it") {
    auto activities = three_activities();
    activities.pop_back();  // drop bed_ON
    const auto base = three_state();
    try {
        build_matrix_generator(base, base, base, base, activities);
        FAIL("expected missing-spec error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("bed_ON") != std::string::npos);
    }
}

TEST_CASE("an activity without a matching state is dropped with a warning") {
    auto activities = three_activities();
    activities.push_back({"sink_ON", Polarity::On, "sink", {30.0, 5.0, 0}});
    const auto base = three_state();
    std::vector<std::string> warnings;
    const auto gen =
        build_matrix_generator(base, base, base, base, activities, &warnings);
    CHECK(gen.specs.count("sink_ON") == 0);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("sink_ON") != std::string::npos);
}

TEST_CASE("an invalid matrix is rejected") {
    auto bad = three_state();
    bad.rows[0] = {0.5, 0.4, 0.0};
    const auto base = three_state();
    CHECK_THROWS_AS(
        build_matrix_generator(bad, base, base, base, three_activities()),
        std::invalid_argument);
}

TEST_CASE("rebuilding from identical inputs is structurally equal") {
    const auto base = three_state();
    const auto a = build_matrix_generator(base, base, base, base,
                                          three_activities());
    const auto b = build_matrix_generator(base, base, base, base,
                                          three_activities());
    CHECK(a.sensors == b.sensors);
    REQUIRE(a.chain_set.n_periods() == b.chain_set.n_periods());
    for (int p = 0; p < a.chain_set.n_periods(); ++p) {
        CHECK(a.chain_set.chains[p].states == b.chain_set.chains[p].states);
        CHECK(a.chain_set.chains[p].rows == b.chain_set.chains[p].rows);
    }
    for (const auto& [state, spec] : a.specs) {
        const auto& other = b.specs.at(state);
        CHECK(spec.sensor == other.sensor);
        CHECK(spec.polarity == other.polarity);
        for (int p = 0; p < 4; ++p) {
            CHECK(spec.stats_for(p).mean_s == other.stats_for(p).mean_s);
        }
    }
}
