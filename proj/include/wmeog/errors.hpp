#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmeog {

// Base class for every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated construction invariant (empty signal, non-positive rate, odd
// region length, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

// A quantized sample left the signed 32-bit domain; lower the scale.
struct RangeOverflow : Error {
    using Error::Error;
};

struct RegionOutOfBounds : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

// Scale or sample rate of two signals disagree where they must match.
struct SignalMismatch : Error {
    using Error::Error;
};

// Bit count does not equal the pair count of the target region.
struct CapacityMismatch : Error {
    using Error::Error;
};

// One or more pairs cannot be expanded without leaving the sample range.
// Carries the indices of every failing pair; embedding is all-or-nothing.
struct ExpansionOverflow : Error {
    std::vector<std::size_t> pair_indices;

    ExpansionOverflow(const std::string& msg, std::vector<std::size_t> indices)
        : Error(msg), pair_indices(std::move(indices)) {}
};

// Fewer than two blink instants; interval statistics are undefined.
struct InsufficientBlinks : Error {
    using Error::Error;
};

// Value is NaN or rounds to an infinity in binary32.
struct NotFinite : Error {
    using Error::Error;
};

// Bit string has the wrong length for the requested decode.
struct WrongLength : Error {
    using Error::Error;
};

// Reference signal has zero power; SNR is undefined.
struct ZeroSignal : Error {
    using Error::Error;
};

struct EmptyBits : Error {
    using Error::Error;
};

// Malformed signal file. line == 0 when no single line is at fault
// (e.g. a required header is missing entirely).
struct ParseError : Error {
    std::size_t line;

    ParseError(const std::string& msg, std::size_t line_no)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

}  // namespace wmeog
