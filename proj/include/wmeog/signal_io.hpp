#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "wmeog/errors.hpp"
#include "wmeog/features.hpp"
#include "wmeog/signal.hpp"

namespace wmeog {

// Line-based text interchange format. Quantized samples are decimal integers,
// so write/read round-trips are bit-exact, which the reversibility guarantee
// depends on across processes.
//
//   #WMEOG 1
//   #rate <Hz>
//   #scale <int>                 quantized files only
//   #region <offset> <length>    watermarked files only
//   #bits <count>                watermarked files only
//   #detector <k> <refractory>   watermarked files only
//   <one sample per line>

// Embedding parameters a watermarked file must carry so extraction and
// verification can run without out-of-band knowledge.
struct WatermarkHeader {
    Region region;
    std::size_t bit_count = 0;
    BlinkDetectorConfig detector;
};

struct SignalFile {
    double sample_rate = 0.0;
    std::optional<std::int64_t> scale;      // present: samples are quantized
    std::optional<WatermarkHeader> watermark;
    std::vector<double> real_samples;       // plain files
    std::vector<std::int32_t> int_samples;  // quantized files

    bool quantized() const { return scale.has_value(); }
    bool watermarked() const { return watermark.has_value(); }

    std::size_t sample_count() const {
        return quantized() ? int_samples.size() : real_samples.size();
    }

    IntSignal to_int_signal() const {
        if (!quantized()) throw InvalidArgument("file does not carry quantized samples");
        return IntSignal(int_samples, *scale, sample_rate);
    }

    Signal to_real_signal() const {
        if (quantized()) return dequantize(to_int_signal());
        return Signal(real_samples, sample_rate);
    }
};

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view token, std::size_t line) {
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size() ||
        !std::isfinite(v)) {
        throw ParseError("malformed number '" + std::string(token) + "'", line);
    }
    return v;
}

inline std::int64_t parse_int(std::string_view token, std::size_t line) {
    std::int64_t v = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw ParseError("malformed integer '" + std::string(token) + "'", line);
    }
    return v;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace detail

inline SignalFile read_signal_file(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;

    if (!std::getline(in, raw)) throw ParseError("empty file", 1);
    ++line_no;
    if (detail::trim(raw) != "#WMEOG 1") {
        throw ParseError("missing '#WMEOG 1' magic", line_no);
    }

    SignalFile file;
    bool have_rate = false;
    std::optional<Region> region;
    std::optional<std::size_t> bit_count;
    std::optional<BlinkDetectorConfig> detector;
    bool in_samples = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::trim(raw);
        if (line.empty()) continue;

        if (line.front() == '#') {
            if (in_samples) throw ParseError("header line after samples", line_no);
            const auto fields = detail::split_fields(line);
            const std::string_view key = fields[0];
            const auto expect = [&](std::size_t n) {
                if (fields.size() != n + 1) {
                    throw ParseError("header " + std::string(key) + " expects " +
                                         std::to_string(n) + " field(s)",
                                     line_no);
                }
            };
            if (key == "#rate") {
                expect(1);
                file.sample_rate = detail::parse_double(fields[1], line_no);
                if (!(file.sample_rate > 0.0)) {
                    throw ParseError("sample rate must be > 0", line_no);
                }
                have_rate = true;
            } else if (key == "#scale") {
                expect(1);
                const std::int64_t s = detail::parse_int(fields[1], line_no);
                if (s < 1) throw ParseError("scale must be >= 1", line_no);
                file.scale = s;
            } else if (key == "#region") {
                expect(2);
                const std::int64_t off = detail::parse_int(fields[1], line_no);
                const std::int64_t len = detail::parse_int(fields[2], line_no);
                if (off < 0 || len <= 0 || len % 2 != 0) {
                    throw ParseError("region needs offset >= 0 and positive even length",
                                     line_no);
                }
                region = Region(static_cast<std::size_t>(off),
                                static_cast<std::size_t>(len));
            } else if (key == "#bits") {
                expect(1);
                const std::int64_t n = detail::parse_int(fields[1], line_no);
                if (n <= 0) throw ParseError("bit count must be positive", line_no);
                bit_count = static_cast<std::size_t>(n);
            } else if (key == "#detector") {
                expect(2);
                const double k = detail::parse_double(fields[1], line_no);
                const double refr = detail::parse_double(fields[2], line_no);
                if (!(k > 0.0) || refr < 0.0) {
                    throw ParseError("detector needs k > 0 and refractory >= 0", line_no);
                }
                detector = BlinkDetectorConfig(k, refr);
            } else {
                throw ParseError("unknown header '" + std::string(key) + "'", line_no);
            }
            continue;
        }

        in_samples = true;
        if (!have_rate) throw ParseError("samples before '#rate' header", line_no);
        if (file.quantized()) {
            const std::int64_t v = detail::parse_int(line, line_no);
            if (v < INT32_MIN || v > INT32_MAX) {
                throw ParseError("sample outside the signed 32-bit range", line_no);
            }
            file.int_samples.push_back(static_cast<std::int32_t>(v));
        } else {
            file.real_samples.push_back(detail::parse_double(line, line_no));
        }
    }

    if (!have_rate) throw ParseError("missing '#rate' header", line_no);
    if (file.sample_count() == 0) throw ParseError("file has no samples", line_no);

    const bool any_wm = region || bit_count || detector;
    if (any_wm) {
        if (!file.quantized()) {
            throw ParseError("watermark headers require a '#scale' header", 0);
        }
        if (!region || !bit_count || !detector) {
            throw ParseError("watermarked file needs #region, #bits and #detector", 0);
        }
        if (region->end() > file.sample_count()) {
            throw ParseError("region [" + std::to_string(region->offset) + ", " +
                                 std::to_string(region->end()) +
                                 ") exceeds the " + std::to_string(file.sample_count()) +
                                 " samples present (truncated file?)",
                             line_no);
        }
        if (*bit_count != region->length / 2) {
            throw ParseError("#bits must equal half the region length", 0);
        }
        file.watermark = WatermarkHeader{*region, *bit_count, *detector};
    }
    return file;
}

inline SignalFile read_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return read_signal_file(in);
}

inline void write_signal_file(std::ostream& out, const Signal& signal) {
    out << "#WMEOG 1\n#rate " << detail::format_double(signal.sample_rate) << "\n";
    for (double v : signal.samples) out << detail::format_double(v) << "\n";
}

inline void write_signal_file(std::ostream& out, const IntSignal& signal,
                              const std::optional<WatermarkHeader>& header = {}) {
    out << "#WMEOG 1\n#rate " << detail::format_double(signal.sample_rate) << "\n";
    out << "#scale " << signal.scale << "\n";
    if (header) {
        out << "#region " << header->region.offset << " " << header->region.length << "\n";
        out << "#bits " << header->bit_count << "\n";
        out << "#detector " << detail::format_double(header->detector.threshold_sigmas)
            << " " << detail::format_double(header->detector.refractory) << "\n";
    }
    for (auto v : signal.samples) out << v << "\n";
}

inline void write_signal_file(const std::string& path, const Signal& signal) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_signal_file(out, signal);
    if (!out) throw Error("failed writing '" + path + "'");
}

inline void write_signal_file(const std::string& path, const IntSignal& signal,
                              const std::optional<WatermarkHeader>& header = {}) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_signal_file(out, signal, header);
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace wmeog
