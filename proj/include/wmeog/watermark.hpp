#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "wmeog/bitstring.hpp"
#include "wmeog/errors.hpp"
#include "wmeog/features.hpp"

namespace wmeog {

// 64-bit watermark payload: two blink statistics carried as IEEE-754 binary32
// words, mean frequency first, each MSB-first (sign, 8 exponent bits, 23
// mantissa bits).

struct WatermarkPayload {
    float mean_blink_frequency = 0.0f;  // Hz
    float mean_blink_interval = 0.0f;   // seconds

    WatermarkPayload() = default;

    // Rounds to binary32 (nearest-even) on construction, so the stored value
    // is exactly what the bit string carries.
    WatermarkPayload(double frequency, double interval)
        : mean_blink_frequency(static_cast<float>(frequency)),
          mean_blink_interval(static_cast<float>(interval)) {}

    static WatermarkPayload from_stats(const BlinkStats& stats) {
        return WatermarkPayload(stats.mean_frequency, stats.mean_interval);
    }

    bool operator==(const WatermarkPayload&) const = default;
};

// The 32 bits of the binary32 representation of x, MSB-first. x is rounded
// to binary32 with the IEEE default nearest-even rule; NaN and values that
// overflow to infinity are rejected, the watermark must decode to a number.
inline BitString encode_f32(double x) {
    const float f = static_cast<float>(x);
    if (!std::isfinite(f)) {
        throw NotFinite("value is not finite in binary32");
    }
    return BitString::from_u32_msb(std::bit_cast<std::uint32_t>(f));
}

// Inverse of encode_f32. NaN payloads are returned as-is; callers detect
// them with std::isnan.
inline float decode_f32(const BitString& bits) {
    if (bits.size() != 32) {
        throw WrongLength("expected 32 bits, got " + std::to_string(bits.size()));
    }
    return std::bit_cast<float>(bits.to_u32_msb());
}

inline BitString pack(const WatermarkPayload& payload) {
    return encode_f32(payload.mean_blink_frequency) +
           encode_f32(payload.mean_blink_interval);
}

inline WatermarkPayload unpack(const BitString& bits) {
    if (bits.size() != 64) {
        throw WrongLength("expected 64 bits, got " + std::to_string(bits.size()));
    }
    WatermarkPayload p;
    p.mean_blink_frequency = decode_f32(bits.slice(0, 32));
    p.mean_blink_interval = decode_f32(bits.slice(32, 32));
    return p;
}

// Exact binary32 bit equality, field by field. No tolerance: extraction is
// lossless, so honest recomputed statistics reproduce the embedded words
// bit-for-bit. Compares bit patterns directly so NaN payloads never throw.
inline bool verify(const WatermarkPayload& extracted, const WatermarkPayload& recomputed) {
    return std::bit_cast<std::uint32_t>(extracted.mean_blink_frequency) ==
               std::bit_cast<std::uint32_t>(recomputed.mean_blink_frequency) &&
           std::bit_cast<std::uint32_t>(extracted.mean_blink_interval) ==
               std::bit_cast<std::uint32_t>(recomputed.mean_blink_interval);
}

}  // namespace wmeog
