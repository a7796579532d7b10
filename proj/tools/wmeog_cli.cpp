// wmeog: reversible blink-statistics watermarking for sampled 1-D biosignals.
//
// Subcommands: features, embed, extract, verify, metrics. Signal files use
// the #WMEOG 1 text format; JSON reports go to standard output.
//
// Exit codes: 0 success; 1 verification mismatch under --strict; 2 input or
// parse error; 3 codec error (overflow, capacity, insufficient blinks).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmeog/json_report.hpp"
#include "wmeog/wmeog.hpp"

namespace {

using nlohmann::json;

struct CommonArgs {
    std::string input;
    std::optional<double> rate;  // overrides the file's #rate header
};

wmeog::SignalFile load(const CommonArgs& args) {
    wmeog::SignalFile file = wmeog::read_signal_file(args.input);
    if (args.rate) {
        if (!(*args.rate > 0.0)) throw wmeog::InvalidArgument("--rate must be > 0");
        file.sample_rate = *args.rate;
    }
    return file;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_features(const CommonArgs& args, const wmeog::BlinkDetectorConfig& detector) {
    const wmeog::SignalFile file = load(args);
    const wmeog::Signal signal = file.to_real_signal();
    const wmeog::FeatureSet features = wmeog::compute_features(signal);
    const auto blink_times = wmeog::detect_blinks(signal, detector);

    std::optional<wmeog::BlinkStats> stats;
    if (blink_times.size() >= 2) stats = wmeog::blink_stats(blink_times);

    print_json(wmeog::feature_report(signal, features, blink_times, stats));
    if (!stats) {
        std::cerr << "error: " << blink_times.size()
                  << " blink(s) detected; interval statistics need at least 2\n";
        return 3;
    }
    return 0;
}

int cmd_embed(const CommonArgs& args, const wmeog::EmbedOptions& opt,
              const std::string& out_path) {
    const wmeog::SignalFile file = load(args);
    const wmeog::EmbedOutput out = wmeog::embed_pipeline(file, opt);
    if (out_path.empty()) {
        wmeog::write_signal_file(std::cout, out.watermarked, out.header);
    } else {
        wmeog::write_signal_file(out_path, out.watermarked, out.header);
    }
    return 0;
}

int cmd_extract(const CommonArgs& args, const std::string& out_path) {
    const wmeog::SignalFile file = load(args);
    const wmeog::ExtractOutput out = wmeog::extract_pipeline(file);

    json j;
    j["bits"] = out.bits.str();
    j["payload"] = out.payload ? wmeog::to_json(*out.payload) : json(nullptr);
    print_json(j);

    if (!out_path.empty()) wmeog::write_signal_file(out_path, out.restored);
    return 0;
}

int cmd_verify(const CommonArgs& args, const std::string& reference_path, bool strict) {
    const wmeog::SignalFile file = load(args);

    std::optional<wmeog::IntSignal> reference;
    if (!reference_path.empty()) {
        const wmeog::SignalFile ref = wmeog::read_signal_file(reference_path);
        if (ref.quantized()) {
            reference = ref.to_int_signal();
        } else if (file.quantized()) {
            reference = wmeog::quantize(ref.to_real_signal(),
                                        wmeog::QuantizationSpec(*file.scale));
        }
    }

    const wmeog::VerificationReport report = wmeog::verify_pipeline(file, reference);
    print_json(wmeog::to_json(report));

    const bool mismatch = !report.payload_match ||
                          (report.ber && *report.ber > 0.0) ||
                          (report.restored_identical && !*report.restored_identical);
    if (strict && mismatch) return 1;
    return 0;
}

int cmd_metrics(const std::string& original_path, const CommonArgs& watermarked_args,
                const std::string& bits_text) {
    const wmeog::SignalFile wm_file = load(watermarked_args);
    if (!wm_file.watermarked()) {
        throw wmeog::InvalidArgument("second file carries no watermark headers");
    }
    const wmeog::IntSignal watermarked = wm_file.to_int_signal();

    const wmeog::SignalFile orig_file = wmeog::read_signal_file(original_path);
    const wmeog::IntSignal original =
        orig_file.quantized()
            ? orig_file.to_int_signal()
            : wmeog::quantize(orig_file.to_real_signal(),
                              wmeog::QuantizationSpec(*wm_file.scale));

    const wmeog::ExtractOutput extracted = wmeog::extract_pipeline(wm_file);
    const wmeog::BitString reference_bits =
        bits_text.empty()
            ? wmeog::pack(wmeog::payload_from_signal(wmeog::dequantize(original),
                                                     wm_file.watermark->detector))
            : wmeog::BitString::parse(bits_text);

    const wmeog::SnrResult s = wmeog::snr(original, watermarked);
    wmeog::MetricsReport report;
    report.snr_linear = s.linear;
    report.snr_db = s.db;
    report.ber = wmeog::ber(reference_bits, extracted.bits);
    report.max_abs_error = wmeog::max_abs_error(original, watermarked);

    print_json(wmeog::to_json(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversible blink-statistics watermarking for sampled biosignals"};
    app.require_subcommand(1);

    CommonArgs common;
    double k = 2.0;
    double refractory = 0.2;
    std::int64_t scale = 1'000'000;
    std::size_t offset = 0;
    std::size_t length = 128;
    std::string bits_text;
    std::string out_path;
    std::string reference_path;
    bool strict = false;
    std::string original_path;

    const auto add_rate = [&](CLI::App* cmd) {
        cmd->add_option("--rate", common.rate, "Override the file's sample rate (Hz)");
    };
    const auto add_detector = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "Blink threshold, standard deviations above the mean")
            ->capture_default_str();
        cmd->add_option("--refractory", refractory,
                        "Minimum spacing between accepted blinks (seconds)")
            ->capture_default_str();
    };

    CLI::App* features = app.add_subcommand(
        "features", "Compute time-domain features and blink statistics (JSON)");
    features->add_option("input", common.input, "Signal file")->required();
    add_rate(features);
    add_detector(features);

    CLI::App* embed = app.add_subcommand(
        "embed", "Embed a 64-bit watermark; payload defaults to the signal's own blink statistics");
    embed->add_option("input", common.input, "Carrier signal file")->required();
    embed->add_option("--out", out_path, "Watermarked file path (default: stdout)");
    embed->add_option("--scale", scale, "Integer units per volt for quantization")
        ->capture_default_str();
    embed->add_option("--offset", offset, "Region start sample")->capture_default_str();
    embed->add_option("--length", length, "Region length in samples (even)")
        ->capture_default_str();
    embed->add_option("--bits", bits_text,
                      "Explicit watermark bits ('0'/'1', byte grouping allowed)");
    add_rate(embed);
    add_detector(embed);

    CLI::App* extract = app.add_subcommand(
        "extract", "Recover the watermark bits and restore the carrier");
    extract->add_option("input", common.input, "Watermarked signal file")->required();
    extract->add_option("--out", out_path, "Write the restored signal here");

    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-validate the extracted payload against the restored carrier (JSON)");
    verify->add_option("input", common.input, "Watermarked signal file")->required();
    verify->add_option("--reference", reference_path,
                       "Pre-embed signal file to check restoration against");
    verify->add_flag("--strict", strict, "Exit 1 on any verification mismatch");

    CLI::App* metrics = app.add_subcommand(
        "metrics", "SNR / BER / distortion between an original and a watermarked file (JSON)");
    metrics->add_option("original", original_path, "Original signal file")->required();
    metrics->add_option("watermarked", common.input, "Watermarked signal file")->required();
    metrics->add_option("--bits", bits_text, "Reference watermark bits for BER");
    add_rate(metrics);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (features->parsed()) {
            return cmd_features(common, wmeog::BlinkDetectorConfig(k, refractory));
        }
        if (embed->parsed()) {
            wmeog::EmbedOptions opt;
            opt.quant = wmeog::QuantizationSpec(scale);
            opt.offset = offset;
            opt.length = length;
            if (!bits_text.empty()) opt.bits = wmeog::BitString::parse(bits_text);
            opt.detector = wmeog::BlinkDetectorConfig(k, refractory);
            return cmd_embed(common, opt, out_path);
        }
        if (extract->parsed()) return cmd_extract(common, out_path);
        if (verify->parsed()) return cmd_verify(common, reference_path, strict);
        if (metrics->parsed()) return cmd_metrics(original_path, common, bits_text);
    } catch (const wmeog::ExpansionOverflow& e) {
        std::cerr << "error: " << e.what() << "; failing pair indices:";
        for (auto i : e.pair_indices) std::cerr << " " << i;
        std::cerr << "\n";
        return 3;
    } catch (const wmeog::CapacityMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wmeog::RangeOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wmeog::InsufficientBlinks& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wmeog::NotFinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wmeog::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
