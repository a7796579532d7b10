#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wmeog/errors.hpp"

namespace wmeog {

// Ordered sequence of bits, MSB-first where it mirrors a machine word.
// The text form is '0'/'1' characters; parsing also accepts spaces between
// byte groups, output is always ungrouped.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_) {
            if (b > 1) throw InvalidArgument("bit value must be 0 or 1");
        }
    }

    static BitString zeros(std::size_t n) {
        BitString out;
        out.bits_.assign(n, 0);
        return out;
    }

    static BitString parse(std::string_view text) {
        BitString out;
        for (char c : text) {
            if (c == '0' || c == '1') {
                out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
            } else if (c == ' ') {
                continue;
            } else {
                throw InvalidArgument(std::string("invalid character '") + c +
                                      "' in bit string");
            }
        }
        return out;
    }

    // The 32 bits of a machine word, sign/most-significant bit first.
    static BitString from_u32_msb(std::uint32_t word) {
        BitString out;
        out.bits_.reserve(32);
        for (int i = 31; i >= 0; --i) {
            out.bits_.push_back(static_cast<std::uint8_t>((word >> i) & 1u));
        }
        return out;
    }

    std::uint32_t to_u32_msb() const {
        if (bits_.size() != 32) {
            throw WrongLength("expected 32 bits, got " + std::to_string(bits_.size()));
        }
        std::uint32_t word = 0;
        for (auto b : bits_) word = (word << 1) | b;
        return word;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int operator[](std::size_t i) const { return bits_[i]; }

    void push_back(int bit) {
        if (bit != 0 && bit != 1) throw InvalidArgument("bit value must be 0 or 1");
        bits_.push_back(static_cast<std::uint8_t>(bit));
    }

    BitString slice(std::size_t offset, std::size_t count) const {
        if (offset + count > bits_.size()) {
            throw WrongLength("slice past end of bit string");
        }
        BitString out;
        out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                         bits_.begin() + static_cast<std::ptrdiff_t>(offset + count));
        return out;
    }

    friend BitString operator+(const BitString& a, const BitString& b) {
        BitString out = a;
        out.bits_.insert(out.bits_.end(), b.bits_.begin(), b.bits_.end());
        return out;
    }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace wmeog
