#include "sensegen/duration.hpp"

#include <algorithm>
#include <cmath>

namespace sensegen {

std::int64_t sample_duration(const DurationStats& stats, RandomSource& rng) {
    double draw = 0.0;
    for (int attempt = 0; attempt <= 10; ++attempt) {
        draw = stats.mean_s + stats.sd_s * rng.normal();
        if (draw >= 1.0) break;
    }
    draw = std::max(draw, 1.0);
    return std::max<std::int64_t>(std::llround(draw), 1);
}

double outlier_mean(const DurationStats& stats, OutlierDirection direction) {
    // Q3 + 3*IQR = mean + 7 * z(0.75) * sd, symmetrically for Q1 - 3*IQR.
    const double shift = 7.0 * kQuartileZ * stats.sd_s;
    if (direction == OutlierDirection::Long) {
        return stats.mean_s + shift;
    }
    return std::max(stats.mean_s - shift, 1.0);
}

DurationStats empirical_stats(std::span<const std::int64_t> samples) {
    DurationStats stats;
    stats.sample_count = static_cast<std::int64_t>(samples.size());
    if (samples.empty()) return stats;

    double sum = 0.0;
    for (auto s : samples) sum += static_cast<double>(s);
    stats.mean_s = sum / static_cast<double>(samples.size());

    if (samples.size() >= 2) {
        double sq = 0.0;
        for (auto s : samples) {
            const double d = static_cast<double>(s) - stats.mean_s;
            sq += d * d;
        }
        stats.sd_s = std::sqrt(sq / static_cast<double>(samples.size() - 1));
    }
    return stats;
}

}  // namespace sensegen
