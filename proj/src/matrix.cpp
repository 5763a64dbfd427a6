#include "sensegen/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace sensegen {

std::optional<std::size_t> TransitionMatrix::index_of(
    const std::string& state) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == state) return i;
    }
    return std::nullopt;
}

ValidationReport validate_matrix(const TransitionMatrix& m) {
    ValidationReport report;
    const std::size_t n = m.states.size();

    if (m.rows.size() != n) {
        report.violations.push_back(
            {Violation::Kind::Shape, -1, -1,
             "matrix has " + std::to_string(m.rows.size()) + " rows but " +
                 std::to_string(n) + " states"});
        return report;  // further checks are meaningless on a ragged matrix
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m.rows[i].size() != n) {
            report.violations.push_back(
                {Violation::Kind::Shape, static_cast<int>(i), -1,
                 "row " + std::to_string(i) + " has " +
                     std::to_string(m.rows[i].size()) + " entries, expected " +
                     std::to_string(n)});
        }
    }
    if (!report.ok()) return report;

    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        if (m.states[i].empty()) {
            report.violations.push_back({Violation::Kind::EmptyLabel,
                                         static_cast<int>(i), -1,
                                         "state label at index " +
                                             std::to_string(i) + " is empty"});
        }
        if (!seen.insert(m.states[i]).second) {
            report.violations.push_back(
                {Violation::Kind::DuplicateLabel, static_cast<int>(i), -1,
                 "duplicate state label '" + m.states[i] + "'"});
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double p = m.rows[i][j];
            if (!(p >= 0.0 && p <= 1.0)) {
                report.violations.push_back(
                    {Violation::Kind::Range, static_cast<int>(i),
                     static_cast<int>(j),
                     "entry [" + std::to_string(i) + "][" + std::to_string(j) +
                         "] = " + std::to_string(p) + " outside [0, 1]"});
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            report.violations.push_back(
                {Violation::Kind::RowSum, static_cast<int>(i), -1,
                 "row " + std::to_string(i) + " sums to " +
                     std::to_string(sum)});
        }
    }
    return report;
}

void renormalize_rows(TransitionMatrix& m, double tolerance) {
    for (auto& row : m.rows) {
        double sum = 0.0;
        for (double p : row) sum += p;
        if (sum > 0.0 && std::abs(sum - 1.0) <= tolerance) {
            for (double& p : row) p /= sum;
        }
    }
}

std::string sample_next(const TransitionMatrix& m, const std::string& current,
                        RandomSource& rng) {
    const auto idx = m.index_of(current);
    if (!idx) {
        throw std::invalid_argument("unknown state '" + current + "'");
    }
    const auto& row = m.rows[*idx];
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_positive = row.size();
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] <= 0.0) continue;  // zero-mass states are never selected
        last_positive = j;
        cumulative += row[j];
        if (cumulative >= u) return m.states[j];
    }
    // Floating-point shortfall: the cumulative sum landed just below 1.
    // Fall back to the last state with positive probability.
    if (last_positive == row.size()) {
        throw std::invalid_argument("row for state '" + current +
                                    "' has no positive entry");
    }
    return m.states[last_positive];
}

int period_index(std::int64_t time_of_day_s, int period_hours) {
    if (period_hours <= 0 || 24 % period_hours != 0) {
        throw std::invalid_argument("period_hours must divide 24, got " +
                                    std::to_string(period_hours));
    }
    return static_cast<int>(time_of_day_s / (3600LL * period_hours));
}

}  // namespace sensegen
