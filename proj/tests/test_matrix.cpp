#include <doctest.h>

#include <stdexcept>

#include <map>

#include "sensegen/matrix.hpp"
#include "stat_oracles.hpp"

using namespace sensegen;

namespace {

TransitionMatrix identity2() {
    return {{"A", "B"}, {{1.0, 0.0}, {0.0, 1.0}}};
}

}  // namespace

TEST_CASE("validate_matrix accepts the 2x2 identity") {
    CHECK(validate_matrix(identity2()).ok());
}

TEST_CASE("validate_matrix flags a short row sum") {
    TransitionMatrix m{{"A", "B"}, {{0.5, 0.4}, {0.5, 0.5}}};
    const auto report = validate_matrix(m);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::RowSum);
    CHECK(report.violations[0].row == 0);
}

TEST_CASE("validate_matrix flags out-of-range entries individually") {
    TransitionMatrix m{{"A", "B"}, {{1.2, -0.2}, {0.5, 0.5}}};
    const auto report = validate_matrix(m);
    int range_violations = 0;
    for (const auto& v : report.violations) {
        if (v.kind == Violation::Kind::Range) {
            ++range_violations;
            CHECK(v.row == 0);
        }
    }
    CHECK(range_violations == 2);
}

TEST_CASE("validate_matrix flags shape, duplicate and empty labels") {
    TransitionMatrix ragged{{"A", "B"}, {{1.0, 0.0}}};
    CHECK_FALSE(validate_matrix(ragged).ok());

    TransitionMatrix dup{{"A", "A"}, {{0.5, 0.5}, {0.5, 0.5}}};
    const auto report = validate_matrix(dup);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::DuplicateLabel);

    TransitionMatrix empty{{"A", ""}, {{0.5, 0.5}, {0.5, 0.5}}};
    CHECK(validate_matrix(empty).violations[0].kind ==
          Violation::Kind::EmptyLabel);
}

TEST_CASE("renormalize_rows fixes tiny deviations only") {
    TransitionMatrix m{{"A", "B"}, {{0.5, 0.5 + 4e-7}, {0.5, 0.4}}};
    renormalize_rows(m);
    CHECK(m.rows[0][0] + m.rows[0][1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.rows[1][1] == 0.4);  // 0.9 row untouched
}

TEST_CASE("sample_next follows a deterministic row") {
    TransitionMatrix m{{"A", "B"}, {{0.0, 1.0}, {0.0, 1.0}}};
    RandomSource rng(1);
    for (int i = 0; i < 100; ++i) CHECK(sample_next(m, "A", rng) == "B");
}

TEST_CASE("sample_next rejects an unknown state") {
    RandomSource rng(1);
    CHECK_THROWS_AS(sample_next(identity2(), "C", rng),
                    std::invalid_argument);
}

TEST_CASE("sample_next hits 50/50 within binomial bounds at n=10^4") {
    TransitionMatrix m{{"A", "B"}, {{0.5, 0.5}, {0.5, 0.5}}};
    RandomSource rng(42);
    int b = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        if (sample_next(m, "A", rng) == "B") ++b;
    }
    const double freq = static_cast<double>(b) / n;
    CHECK(freq >= 0.48);
    CHECK(freq <= 0.52);
}

TEST_CASE("sample_next never emits a zero-probability state") {
    TransitionMatrix m{{"A", "B", "C"},
                       {{0.7, 0.0, 0.3}, {0.0, 1.0, 0.0}, {0.5, 0.5, 0.0}}};
    RandomSource rng(7);
    for (int i = 0; i < 1000000; ++i) {
        CHECK(sample_next(m, "A", rng) != "B");
    }
}

TEST_CASE("sample_next frequencies pass chi-square at alpha 0.001") {
    TransitionMatrix m{{"A", "B", "C", "D"},
                       {{0.1, 0.2, 0.3, 0.4},
                        {0.25, 0.25, 0.25, 0.25},
                        {0.05, 0.9, 0.0, 0.05},
                        {0.6, 0.1, 0.1, 0.2}}};
    REQUIRE(validate_matrix(m).ok());
    RandomSource rng(123);
    for (const auto& from : m.states) {
        std::vector<std::int64_t> counts(m.states.size(), 0);
        for (int i = 0; i < 10000; ++i) {
            const auto next = sample_next(m, from, rng);
            ++counts[*m.index_of(next)];
        }
        const double p =
            oracles::chi_square_gof(counts, m.rows[*m.index_of(from)]);
        CHECK(p > 0.001);
    }
}

TEST_CASE("period_index maps times of day to equal intervals") {
    CHECK(period_index(7 * 3600 + 30 * 60, 3) == 2);
    CHECK(period_index(0, 1) == 0);
    CHECK(period_index(0, 24) == 0);
    CHECK(period_index(23 * 3600 + 59 * 60 + 59, 6) == 3);
    CHECK_THROWS_AS(period_index(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(period_index(0, 0), std::invalid_argument);
}

TEST_CASE("period_index preimages partition the day") {
    for (int h : {1, 2, 3, 4, 6, 8, 12, 24}) {
        std::map<int, int> counts;
        for (std::int64_t t = 0; t < 86400; t += 60) {
            ++counts[period_index(t, h)];
        }
        CHECK(static_cast<int>(counts.size()) == 24 / h);
        for (const auto& [p, c] : counts) {
            CHECK(p >= 0);
            CHECK(p < 24 / h);
            CHECK(c == 60 * h);
        }
    }
}

TEST_CASE("equal seeds give equal draw sequences") {
    RandomSource a(9999), b(9999);
    for (int i = 0; i < 10000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    RandomSource c(1), d(2);
    bool differ = false;
    for (int i = 0; i < 16 && !differ; ++i) differ = c.next_u64() != d.next_u64();
    CHECK(differ);
}

TEST_CASE("uniform_int stays in range and covers [0, n)") {
    RandomSource rng(5);
    std::vector<int> seen(6, 0);
    for (int i = 0; i < 60000; ++i) {
        ++seen[rng.uniform_int(6)];
    }
    for (int c : seen) CHECK(c > 9000);
}
