#include "chromasift/detect.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>

#include "chromasift/error.hpp"

namespace chromasift {

const char* grade_name(Grade g) {
    switch (g) {
    case Grade::Stable: return "Stable";
    case Grade::Suspicious: return "Suspicious";
    default: return "HighlyAnomalous";
    }
}

std::vector<bool> response_flags_from_peaks(const std::vector<double>& peaks,
                                            double threshold) {
    const std::size_t n = peaks.size();
    if (n < 2)
        throw TooFewFrames("response rule needs at least 2 frames, got " +
                           std::to_string(n));

    double total = 0.0;
    for (double p : peaks) total += p;

    std::vector<bool> flags(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        double baseline = (total - peaks[i]) / static_cast<double>(n - 1);
        flags[i] = peaks[i] > (1.0 + threshold) * baseline; // strict
    }
    return flags;
}

std::vector<bool> channel_response_flags(const std::vector<ColorFeature>& features,
                                         Channel channel,
                                         const DetectorConfig& config) {
    std::vector<double> peaks;
    peaks.reserve(features.size());
    for (const ColorFeature& f : features) peaks.push_back(f.stat(channel).peak_value);
    return response_flags_from_peaks(peaks, config.response_threshold);
}

Grade grade_frame(bool structurally_rare, bool any_channel_flag) {
    if (structurally_rare && any_channel_flag) return Grade::HighlyAnomalous;
    if (structurally_rare || any_channel_flag) return Grade::Suspicious;
    return Grade::Stable;
}

namespace {

std::string format_line(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return buf;
}

} // namespace

std::vector<AnomalyVerdict> run_detection(const std::vector<ColorFeature>& features,
                                          const ClusterModel& model,
                                          const DetectorConfig& config) {
    const std::size_t n = features.size();
    if (n != model.assignments.size())
        throw LengthMismatch("features (" + std::to_string(n) +
                             ") and assignments (" +
                             std::to_string(model.assignments.size()) +
                             ") differ in length");
    if (n < 2)
        throw TooFewFrames("detection needs at least 2 frames, got " +
                           std::to_string(n));
    if (config.rule_channels.empty()) throw Error("rule_channels is empty");
    if (config.response_threshold <= 0.0)
        throw Error("response_threshold must be > 0");

    std::vector<bool> rare = rarity_flags(model.assignments);
    std::vector<int> cluster_sizes(model.centroids.size(), 0);
    for (int a : model.assignments) ++cluster_sizes[a];

    // Normalize the channel set to R, G, B order so verdicts and their
    // serialized form agree regardless of how the config was built.
    std::vector<Channel> rule_channels;
    for (Channel c : kAllChannels)
        if (std::find(config.rule_channels.begin(), config.rule_channels.end(), c) !=
            config.rule_channels.end())
            rule_channels.push_back(c);

    // Gather peaks once per configured channel.
    std::vector<std::vector<bool>> channel_flags;
    std::vector<std::vector<double>> channel_peaks;
    for (Channel c : rule_channels) {
        std::vector<double> peaks;
        peaks.reserve(n);
        for (const ColorFeature& f : features) peaks.push_back(f.stat(c).peak_value);
        channel_flags.push_back(response_flags_from_peaks(peaks, config.response_threshold));
        channel_peaks.push_back(std::move(peaks));
    }

    std::vector<AnomalyVerdict> verdicts;
    verdicts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        AnomalyVerdict v;
        v.frame_index = features[i].frame_index;
        v.structurally_rare = rare[i];

        if (v.structurally_rare) {
            int cluster = model.assignments[i];
            v.rationale.push_back(format_line(
                "structural rarity: cluster %d has exactly %d member", cluster,
                cluster_sizes[cluster]));
        }

        for (std::size_t ci = 0; ci < rule_channels.size(); ++ci) {
            Channel c = rule_channels[ci];
            bool fired = channel_flags[ci][i];
            v.channel_flags.push_back({c, fired});
            if (!fired) continue;

            double peak = channel_peaks[ci][i];
            double total = 0.0;
            for (double p : channel_peaks[ci]) total += p;
            double baseline = (total - peak) / static_cast<double>(n - 1);
            v.rationale.push_back(format_line(
                "%s channel response: peak %.6f exceeds baseline %.6f by more "
                "than %.0f%% (ratio %.3f)",
                channel_name(c), peak, baseline, config.response_threshold * 100.0,
                baseline > 0.0 ? peak / baseline : 0.0));
        }

        v.grade = grade_frame(v.structurally_rare, v.any_channel_flag());
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

} // namespace chromasift
