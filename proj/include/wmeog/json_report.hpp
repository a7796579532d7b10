#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include <json.hpp>

#include "wmeog/features.hpp"
#include "wmeog/metrics.hpp"
#include "wmeog/pipeline.hpp"
#include "wmeog/watermark.hpp"

namespace wmeog {

// JSON views of the report types. Key names are part of the tool's contract;
// infinities are carried as the string "inf" because JSON has no infinity
// literal.

inline nlohmann::json json_number_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

inline nlohmann::json to_json(const WatermarkPayload& p) {
    return {{"mean_blink_frequency", static_cast<double>(p.mean_blink_frequency)},
            {"mean_blink_interval", static_cast<double>(p.mean_blink_interval)}};
}

inline nlohmann::json to_json(const MetricsReport& r) {
    return {{"snr_linear", json_number_or_inf(r.snr_linear)},
            {"snr_db", json_number_or_inf(r.snr_db)},
            {"ber", r.ber},
            {"max_abs_error", r.max_abs_error}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["extracted_payload"] = to_json(r.extracted_payload);
    j["recomputed_payload"] =
        r.recomputed_payload ? to_json(*r.recomputed_payload) : nlohmann::json(nullptr);
    j["payload_match"] = r.payload_match;
    j["ber"] = r.ber ? nlohmann::json(*r.ber) : nlohmann::json(nullptr);
    j["snr_db"] = r.snr_db ? json_number_or_inf(*r.snr_db) : nlohmann::json(nullptr);
    j["restored_identical"] = r.restored_identical ? nlohmann::json(*r.restored_identical)
                                                   : nlohmann::json(nullptr);
    return j;
}

// Scalar features plus blink timing; blink_stats is null when fewer than two
// blinks were found. Peak/valley positions are reported both as 0-based
// sample indices and in seconds.
inline nlohmann::json feature_report(const Signal& signal, const FeatureSet& f,
                                     const std::vector<double>& blink_times,
                                     const std::optional<BlinkStats>& stats) {
    nlohmann::json j;
    j["mav"] = f.mav;
    j["std_dev"] = f.std_dev;
    j["variance"] = f.variance;
    j["auc"] = f.auc;
    j["peak_value"] = f.peak_value;
    j["peak_index"] = f.peak_index;
    j["peak_time_s"] = static_cast<double>(f.peak_index) / signal.sample_rate;
    j["valley_value"] = f.valley_value;
    j["valley_index"] = f.valley_index;
    j["valley_time_s"] = static_cast<double>(f.valley_index) / signal.sample_rate;
    j["blink_times_s"] = blink_times;
    if (stats) {
        j["blink_stats"] = {{"intervals_s", stats->intervals},
                            {"mean_frequency_hz", stats->mean_frequency},
                            {"blinks_per_interval_hz", stats->blinks_per_interval},
                            {"mean_interval_s", stats->mean_interval}};
    } else {
        j["blink_stats"] = nullptr;
    }
    return j;
}

}  // namespace wmeog
