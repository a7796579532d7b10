#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wmeog/errors.hpp"

namespace wmeog {

// Real-valued sampled signal, the analyst-facing representation. Samples are
// in volts; sample_rate in Hz.
struct Signal {
    std::vector<double> samples;
    double sample_rate = 0.0;

    Signal(std::vector<double> s, double rate) : samples(std::move(s)), sample_rate(rate) {
        if (samples.empty()) throw InvalidArgument("signal must not be empty");
        if (!(sample_rate > 0.0)) throw InvalidArgument("sample rate must be > 0");
    }

    std::size_t size() const { return samples.size(); }
};

// Real -> integer bridge. scale is integer units per volt (1'000'000 gives
// microvolt resolution); rounding is fixed to half-away-from-zero.
struct QuantizationSpec {
    std::int64_t scale = 1'000'000;

    explicit QuantizationSpec(std::int64_t s = 1'000'000) : scale(s) {
        if (scale < 1) throw InvalidArgument("quantization scale must be >= 1");
    }
};

// Integer samples plus the scale they were quantized at. The only
// representation the embedding codec touches; every sample stays inside the
// signed 32-bit domain by construction.
struct IntSignal {
    std::vector<std::int32_t> samples;
    std::int64_t scale = 1;
    double sample_rate = 0.0;

    IntSignal(std::vector<std::int32_t> s, std::int64_t sc, double rate)
        : samples(std::move(s)), scale(sc), sample_rate(rate) {
        if (samples.empty()) throw InvalidArgument("signal must not be empty");
        if (scale < 1) throw InvalidArgument("quantization scale must be >= 1");
        if (!(sample_rate > 0.0)) throw InvalidArgument("sample rate must be > 0");
    }

    std::size_t size() const { return samples.size(); }
};

// Contiguous sample range [offset, offset+length). length must be even: the
// codec consumes disjoint pairs.
struct Region {
    std::size_t offset = 0;
    std::size_t length = 0;

    Region(std::size_t off, std::size_t len) : offset(off), length(len) {
        if (len == 0) throw InvalidArgument("region length must be positive");
        if (len % 2 != 0) throw InvalidArgument("region length must be even");
    }

    std::size_t end() const { return offset + length; }

    void check_against(std::size_t carrier_length) const {
        if (end() > carrier_length) {
            throw RegionOutOfBounds("region [" + std::to_string(offset) + ", " +
                                    std::to_string(end()) + ") exceeds signal length " +
                                    std::to_string(carrier_length));
        }
    }
};

// samples[i] = round(signal.samples[i] * scale), halves away from zero.
inline IntSignal quantize(const Signal& signal, const QuantizationSpec& spec) {
    constexpr double lo = -2147483648.0;
    constexpr double hi = 2147483647.0;
    std::vector<std::int32_t> out;
    out.reserve(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i) {
        // std::round is round-half-away-from-zero by definition
        const double r = std::round(signal.samples[i] * static_cast<double>(spec.scale));
        if (!std::isfinite(r) || r < lo || r > hi) {
            throw RangeOverflow("sample " + std::to_string(i) +
                                " leaves the 32-bit range at scale " +
                                std::to_string(spec.scale));
        }
        out.push_back(static_cast<std::int32_t>(r));
    }
    return IntSignal(std::move(out), spec.scale, signal.sample_rate);
}

inline Signal dequantize(const IntSignal& int_signal) {
    std::vector<double> out;
    out.reserve(int_signal.size());
    const double scale = static_cast<double>(int_signal.scale);
    for (auto s : int_signal.samples) out.push_back(static_cast<double>(s) / scale);
    return Signal(std::move(out), int_signal.sample_rate);
}

inline IntSignal crop(const IntSignal& int_signal, const Region& region) {
    region.check_against(int_signal.size());
    std::vector<std::int32_t> out(
        int_signal.samples.begin() + static_cast<std::ptrdiff_t>(region.offset),
        int_signal.samples.begin() + static_cast<std::ptrdiff_t>(region.end()));
    return IntSignal(std::move(out), int_signal.scale, int_signal.sample_rate);
}

// Replaces the samples of `region` with `replacement`; everything else is
// copied through untouched.
inline IntSignal merge(const IntSignal& carrier, const Region& region,
                       const IntSignal& replacement) {
    region.check_against(carrier.size());
    if (replacement.size() != region.length) {
        throw LengthMismatch("replacement has " + std::to_string(replacement.size()) +
                             " samples, region needs " + std::to_string(region.length));
    }
    if (replacement.scale != carrier.scale || replacement.sample_rate != carrier.sample_rate) {
        throw SignalMismatch("replacement scale or sample rate differs from carrier");
    }
    IntSignal out = carrier;
    std::copy(replacement.samples.begin(), replacement.samples.end(),
              out.samples.begin() + static_cast<std::ptrdiff_t>(region.offset));
    return out;
}

}  // namespace wmeog
