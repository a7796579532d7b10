#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "wmeog/bitstring.hpp"
#include "wmeog/errors.hpp"
#include "wmeog/signal.hpp"

namespace wmeog {

// Embedding quality measures: signal-to-distortion power ratio, bit error
// rate, and the worst per-sample error in quantized units.

struct SnrResult {
    double linear = 0.0;  // +inf when the signals are identical
    double db = 0.0;      // 10*log10(linear)

    bool infinite() const { return std::isinf(linear); }
};

namespace detail {

// Power sums are kept in 128-bit integers so the ratio is formed from exact
// values; reducing by the gcd first makes the double result invariant under
// common integer scaling of both signals.
using int128 = __int128;

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline double to_double(int128 v) { return static_cast<double>(v); }

inline void require_same_length(const IntSignal& a, const IntSignal& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("signals have " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()) + " samples");
    }
}

}  // namespace detail

// SNR of the embedding distortion: P_sig = sum(x^2)/N over the original,
// P_no = sum((x-y)^2)/N; N cancels in the ratio. Identical signals give the
// +inf sentinel, an all-zero original is an error.
inline SnrResult snr(const IntSignal& original, const IntSignal& watermarked) {
    detail::require_same_length(original, watermarked);
    if (original.scale != watermarked.scale) {
        throw SignalMismatch("signals are quantized at different scales");
    }
    detail::int128 sig = 0;
    detail::int128 noise = 0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const std::int64_t x = original.samples[i];
        const std::int64_t e = x - static_cast<std::int64_t>(watermarked.samples[i]);
        sig += static_cast<detail::int128>(x) * x;
        noise += static_cast<detail::int128>(e) * e;
    }
    if (sig == 0) throw ZeroSignal("original signal has zero power");
    if (noise == 0) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return SnrResult{inf, inf};
    }
    const detail::int128 g = detail::gcd128(sig, noise);
    const double linear = detail::to_double(sig / g) / detail::to_double(noise / g);
    return SnrResult{linear, 10.0 * std::log10(linear)};
}

// Fraction of differing bit positions.
inline double ber(const BitString& reference, const BitString& received) {
    if (reference.empty() || received.empty()) throw EmptyBits("bit strings must be non-empty");
    if (reference.size() != received.size()) {
        throw LengthMismatch("bit strings have " + std::to_string(reference.size()) +
                             " and " + std::to_string(received.size()) + " bits");
    }
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (reference[i] != received[i]) ++wrong;
    }
    return static_cast<double>(wrong) / static_cast<double>(reference.size());
}

inline std::int64_t max_abs_error(const IntSignal& original, const IntSignal& watermarked) {
    detail::require_same_length(original, watermarked);
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const std::int64_t e = static_cast<std::int64_t>(original.samples[i]) -
                               static_cast<std::int64_t>(watermarked.samples[i]);
        worst = std::max(worst, e < 0 ? -e : e);
    }
    return worst;
}

struct MetricsReport {
    double snr_linear = 0.0;  // +inf when distortion-free
    double snr_db = 0.0;
    double ber = 0.0;
    std::int64_t max_abs_error = 0;
};

}  // namespace wmeog
