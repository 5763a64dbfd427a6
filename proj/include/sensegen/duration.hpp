#pragma once

#include <cstdint>
#include <span>

#include "sensegen/rng.hpp"

namespace sensegen {

/// Dwell-time statistics for one chain state (seconds).
/// sample_count is 0 for user-supplied stats, otherwise the number of
/// empirical samples behind mean/sd.
struct DurationStats {
    double mean_s = 0.0;
    double sd_s = 0.0;
    std::int64_t sample_count = 0;
};

enum class OutlierDirection { Long, Short };

/// z-score of the 0.75 quantile of the standard normal.
inline constexpr double kQuartileZ = 0.6744897501960817;

/// Draws a duration from normal(mean, sd), rounded to whole seconds.
/// Draws below 1 s are redrawn up to 10 times, then clamped to 1 s, so the
/// simulation clock always advances.
std::int64_t sample_duration(const DurationStats& stats, RandomSource& rng);

/// Mean shifted to the Tukey-style outlier fence of the fitted normal:
/// Q3 + 3*IQR for Long, max(Q1 - 3*IQR, 1) for Short, where
/// IQR = 2 * kQuartileZ * sd. Used by duration anomalies; sd is untouched.
double outlier_mean(const DurationStats& stats, OutlierDirection direction);

/// Arithmetic mean and sample standard deviation (n-1 denominator).
/// Fewer than two samples give sd 0; an empty list gives all zeros.
DurationStats empirical_stats(std::span<const std::int64_t> samples);

}  // namespace sensegen
