#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmeog/bitstring.hpp"
#include "wmeog/errors.hpp"
#include "wmeog/signal.hpp"

namespace wmeog {

// Difference-expansion reversible transform. One watermark bit rides on each
// disjoint sample pair: the pair difference is doubled, the bit appended as
// its new least significant bit, and the pair rebuilt around the (invariant)
// floored average. Floor division throughout keeps the transform a bijection
// for negative differences as well, so no sign special-casing is needed.

struct Pair {
    std::int32_t m1 = 0;
    std::int32_t m2 = 0;

    bool operator==(const Pair&) const = default;
};

struct EmbeddedPair {
    std::int32_t m1 = 0;
    std::int32_t m2 = 0;

    bool operator==(const EmbeddedPair&) const = default;
};

namespace detail {

// Floor division (rounds toward -inf), which C++ '/' is not for negatives.
constexpr std::int64_t floor_div2(std::int64_t a) {
    return (a >> 1);  // arithmetic shift floors on two's complement
}

constexpr bool in_sample_range(std::int64_t v) {
    return v >= INT32_MIN && v <= INT32_MAX;
}

// nullopt when the expanded pair would leave the signed 32-bit domain.
inline std::optional<EmbeddedPair> try_embed_pair(Pair p, int bit) {
    const std::int64_t m1 = p.m1;
    const std::int64_t m2 = p.m2;
    const std::int64_t d = m1 - m2;
    const std::int64_t a = floor_div2(m1 + m2);
    const std::int64_t dw = 2 * d + bit;
    const std::int64_t m1p = a + floor_div2(dw + 1);
    const std::int64_t m2p = a - floor_div2(dw);
    if (!in_sample_range(m1p) || !in_sample_range(m2p)) return std::nullopt;
    return EmbeddedPair{static_cast<std::int32_t>(m1p), static_cast<std::int32_t>(m2p)};
}

}  // namespace detail

// Embeds one bit into a pair. Throws ExpansionOverflow when either output
// sample would leave the signed 32-bit domain.
inline EmbeddedPair embed_pair(Pair p, int bit) {
    if (bit != 0 && bit != 1) throw InvalidArgument("watermark bit must be 0 or 1");
    const auto e = detail::try_embed_pair(p, bit);
    if (!e) {
        throw ExpansionOverflow("pair (" + std::to_string(p.m1) + ", " +
                                    std::to_string(p.m2) + ") is not expandable",
                                {});
    }
    return *e;
}

// Inverse transform: recovers the original pair and the embedded bit. Every
// integer pair decodes to something; the result is meaningful only for pairs
// produced by embed_pair.
inline std::pair<Pair, int> extract_pair(EmbeddedPair e) {
    const std::int64_t m1p = e.m1;
    const std::int64_t m2p = e.m2;
    const std::int64_t dw = m1p - m2p;
    const std::int64_t a = detail::floor_div2(m1p + m2p);
    const int bit = static_cast<int>(dw & 1);  // non-negative parity
    const std::int64_t d = detail::floor_div2(dw);
    const std::int64_t m1 = a + detail::floor_div2(d + 1);
    const std::int64_t m2 = a - detail::floor_div2(d);
    // Halving the difference pulls both samples back toward the average, so
    // the results cannot leave the domain the inputs came from.
    return {Pair{static_cast<std::int32_t>(m1), static_cast<std::int32_t>(m2)},
            bit};
}

// Embeds bits[i] into pair i = (samples[offset+2i], samples[offset+2i+1]).
// Exact-capacity rule: one bit per pair, no skipping and no location map, so
// bits.size() must equal region.length / 2. All-or-nothing: if any pair
// overflows, nothing is embedded and the error lists every failing pair.
inline IntSignal embed_region(const IntSignal& carrier, const Region& region,
                              const BitString& bits) {
    region.check_against(carrier.size());
    const std::size_t pair_count = region.length / 2;
    if (bits.size() != pair_count) {
        throw CapacityMismatch("region holds " + std::to_string(pair_count) +
                               " bits, watermark has " + std::to_string(bits.size()));
    }
    IntSignal out = carrier;
    std::vector<std::size_t> failed;
    for (std::size_t i = 0; i < pair_count; ++i) {
        const std::size_t j = region.offset + 2 * i;
        const auto e =
            detail::try_embed_pair(Pair{carrier.samples[j], carrier.samples[j + 1]}, bits[i]);
        if (!e) {
            failed.push_back(i);
            continue;
        }
        out.samples[j] = e->m1;
        out.samples[j + 1] = e->m2;
    }
    if (!failed.empty()) {
        const std::string msg = std::to_string(failed.size()) +
                                " pair(s) not expandable, first at pair index " +
                                std::to_string(failed.front());
        throw ExpansionOverflow(msg, std::move(failed));
    }
    return out;
}

// Recovers the watermark and the pre-embed samples of the region; samples
// outside the region are copied through.
inline std::pair<IntSignal, BitString> extract_region(const IntSignal& watermarked,
                                                      const Region& region) {
    region.check_against(watermarked.size());
    IntSignal restored = watermarked;
    BitString bits;
    for (std::size_t i = 0; i < region.length / 2; ++i) {
        const std::size_t j = region.offset + 2 * i;
        const auto [pair, bit] =
            extract_pair(EmbeddedPair{watermarked.samples[j], watermarked.samples[j + 1]});
        restored.samples[j] = pair.m1;
        restored.samples[j + 1] = pair.m2;
        bits.push_back(bit);
    }
    return {std::move(restored), std::move(bits)};
}

}  // namespace wmeog
