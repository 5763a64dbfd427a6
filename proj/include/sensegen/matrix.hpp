#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sensegen/rng.hpp"

namespace sensegen {

/// Row-stochastic transition matrix over named states.
/// rows[i][j] is the probability of moving from states[i] to states[j].
struct TransitionMatrix {
    std::vector<std::string> states;
    std::vector<std::vector<double>> rows;

    std::size_t size() const { return states.size(); }

    std::optional<std::size_t> index_of(const std::string& state) const;
};

struct Violation {
    enum class Kind { Shape, RowSum, Range, DuplicateLabel, EmptyLabel };
    Kind kind;
    int row;  // -1 when not row-specific
    int col;  // -1 when not column-specific
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Row-sum tolerance for a matrix to count as valid.
inline constexpr double kRowSumTolerance = 1e-9;

/// Loader-side renormalization limit: rows whose sum deviates by no more
/// than this are rescaled to sum exactly 1 (CSV rounding survives, real
/// errors do not).
inline constexpr double kRenormalizeTolerance = 1e-6;

ValidationReport validate_matrix(const TransitionMatrix& m);

/// Rescales every row whose sum is within `tolerance` of 1 to sum exactly 1.
/// Rows deviating by more are left untouched for validate_matrix to flag.
void renormalize_rows(TransitionMatrix& m,
                      double tolerance = kRenormalizeTolerance);

/// Samples the successor of `current` by an inverse-CDF walk over the row
/// in declared column order: first index where the cumulative sum reaches
/// the uniform draw. Throws std::invalid_argument if `current` is unknown.
std::string sample_next(const TransitionMatrix& m, const std::string& current,
                        RandomSource& rng);

/// Maps a time of day (seconds since midnight) to its period index under a
/// day split into 24/period_hours equal intervals.
/// Throws std::invalid_argument unless 24 % period_hours == 0.
int period_index(std::int64_t time_of_day_s, int period_hours);

/// One transition matrix per period of day. chains[p] covers clock hours
/// [p*period_hours, (p+1)*period_hours); all chains share one ordered
/// state list.
struct ChainSet {
    int period_hours = 0;
    std::vector<TransitionMatrix> chains;

    int n_periods() const { return static_cast<int>(chains.size()); }
    const std::vector<std::string>& states() const {
        return chains.front().states;
    }
};

}  // namespace sensegen
