#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wmeog/errors.hpp"
#include "wmeog/signal.hpp"

namespace wmeog {

// Time-domain feature bank: amplitude statistics plus blink timing. All
// statistics are population statistics (divisor N).

struct FeatureSet {
    double mav = 0.0;       // mean absolute value, volts
    double std_dev = 0.0;   // volts
    double variance = 0.0;  // volts^2
    double auc = 0.0;       // summed |amplitude|, volt*samples
    double peak_value = 0.0;
    std::size_t peak_index = 0;
    double valley_value = 0.0;
    std::size_t valley_index = 0;
};

// Interval statistics over a strictly increasing sequence of blink instants.
// mean_frequency averages the per-interval rates 1/T_i; blinks_per_interval
// is the actual blink count over the spanned time, (n+1)/sum(T_i).
struct BlinkStats {
    std::vector<double> blink_times;  // seconds
    std::vector<double> intervals;    // T_i = t[i+1] - t[i], seconds
    double mean_frequency = 0.0;      // Hz
    double blinks_per_interval = 0.0; // Hz
    double mean_interval = 0.0;       // seconds
};

// Threshold detector settings. A blink apex must rise threshold_sigmas
// standard deviations above the signal mean; refractory is the minimum
// spacing between accepted apices, in seconds.
struct BlinkDetectorConfig {
    double threshold_sigmas = 2.0;
    double refractory = 0.2;

    BlinkDetectorConfig(double k = 2.0, double refr = 0.2)
        : threshold_sigmas(k), refractory(refr) {
        if (!(threshold_sigmas > 0.0)) throw InvalidArgument("threshold sigmas must be > 0");
        if (refractory < 0.0) throw InvalidArgument("refractory must be >= 0");
    }
};

inline double auc(const Signal& signal) {
    double sum = 0.0;
    for (double x : signal.samples) sum += std::abs(x);
    return sum;
}

inline double mean(const Signal& signal) {
    double sum = 0.0;
    for (double x : signal.samples) sum += x;
    return sum / static_cast<double>(signal.size());
}

inline double mav(const Signal& signal) {
    return auc(signal) / static_cast<double>(signal.size());
}

// Welford's online recurrence; the test oracle uses the naive two-pass sum.
inline double variance(const Signal& signal) {
    double mean = 0.0;
    double m2 = 0.0;
    double count = 0.0;
    for (double x : signal.samples) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }
    return m2 / count;
}

inline double std_dev(const Signal& signal) { return std::sqrt(variance(signal)); }

// Global maximum value and its first index.
inline std::pair<double, std::size_t> peak(const Signal& signal) {
    double best = signal.samples[0];
    std::size_t at = 0;
    for (std::size_t i = 1; i < signal.size(); ++i) {
        if (signal.samples[i] > best) {
            best = signal.samples[i];
            at = i;
        }
    }
    return {best, at};
}

// Global minimum value and its first index.
inline std::pair<double, std::size_t> valley(const Signal& signal) {
    double best = signal.samples[0];
    std::size_t at = 0;
    for (std::size_t i = 1; i < signal.size(); ++i) {
        if (signal.samples[i] < best) {
            best = signal.samples[i];
            at = i;
        }
    }
    return {best, at};
}

inline FeatureSet compute_features(const Signal& signal) {
    FeatureSet f;
    f.auc = auc(signal);
    f.mav = f.auc / static_cast<double>(signal.size());
    f.variance = variance(signal);
    f.std_dev = std::sqrt(f.variance);
    std::tie(f.peak_value, f.peak_index) = peak(signal);
    std::tie(f.valley_value, f.valley_index) = valley(signal);
    return f;
}

// Blink apices: interior samples above mean + k*sigma that are local maxima
// (neighbours not larger, at least one strictly smaller), thinned so accepted
// apices are at least `refractory` seconds apart. Returns apex times in
// seconds; an empty result is valid.
inline std::vector<double> detect_blinks(const Signal& signal,
                                         const BlinkDetectorConfig& cfg = {}) {
    const double threshold = mean(signal) + cfg.threshold_sigmas * std_dev(signal);
    std::vector<double> times;
    for (std::size_t i = 1; i + 1 < signal.size(); ++i) {
        const double prev = signal.samples[i - 1];
        const double here = signal.samples[i];
        const double next = signal.samples[i + 1];
        if (!(here > threshold)) continue;
        if (!(prev <= here && here >= next)) continue;
        if (!(prev < here || here > next)) continue;
        const double t = static_cast<double>(i) / signal.sample_rate;
        if (!times.empty() && t - times.back() < cfg.refractory) continue;
        times.push_back(t);
    }
    return times;
}

// Eq-style interval statistics; needs at least two blink instants.
inline BlinkStats blink_stats(std::span<const double> blink_times) {
    if (blink_times.size() < 2) {
        throw InsufficientBlinks("need at least 2 blink times, got " +
                                 std::to_string(blink_times.size()));
    }
    BlinkStats s;
    s.blink_times.assign(blink_times.begin(), blink_times.end());
    s.intervals.reserve(blink_times.size() - 1);
    for (std::size_t i = 0; i + 1 < blink_times.size(); ++i) {
        const double t = blink_times[i + 1] - blink_times[i];
        if (!(t > 0.0)) throw InvalidArgument("blink times must be strictly increasing");
        s.intervals.push_back(t);
    }
    const double n = static_cast<double>(s.intervals.size());
    double freq_sum = 0.0;
    double interval_sum = 0.0;
    for (double t : s.intervals) {
        freq_sum += 1.0 / t;
        interval_sum += t;
    }
    s.mean_frequency = freq_sum / n;
    s.blinks_per_interval = (n + 1.0) / interval_sum;
    s.mean_interval = interval_sum / n;
    return s;
}

}  // namespace wmeog
