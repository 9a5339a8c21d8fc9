#pragma once

#include <string>
#include <vector>

#include "chromasift/cluster.hpp"
#include "chromasift/features.hpp"

namespace chromasift {

enum class Grade { Stable, Suspicious, HighlyAnomalous };

const char* grade_name(Grade g);

struct DetectorConfig {
    // A frame's channel peak must exceed the leave-one-out baseline by
    // strictly more than this fraction to fire.
    double response_threshold = 0.25;
    // Channels the response rule is evaluated on, kept in R, G, B order.
    std::vector<Channel> rule_channels = {Channel::R};

    bool operator==(const DetectorConfig&) const = default;
};

struct ChannelFlag {
    Channel channel = Channel::R;
    bool fired = false;

    bool operator==(const ChannelFlag&) const = default;
};

struct AnomalyVerdict {
    int frame_index = 0;
    bool structurally_rare = false;
    std::vector<ChannelFlag> channel_flags; // one entry per rule channel
    Grade grade = Grade::Stable;
    std::vector<std::string> rationale; // one line per fired rule

    bool any_channel_flag() const {
        for (const auto& f : channel_flags)
            if (f.fired) return true;
        return false;
    }

    bool operator==(const AnomalyVerdict&) const = default;
};

// Core response rule on raw peak values: flag[i] is true iff
// peaks[i] > (1 + threshold) * mean of the other frames' peaks (strict).
// Throws TooFewFrames when fewer than two peaks are given.
std::vector<bool> response_flags_from_peaks(const std::vector<double>& peaks,
                                            double threshold);

// The same rule applied to the given channel's histogram peak_value of each
// frame.
std::vector<bool> channel_response_flags(const std::vector<ColorFeature>& features,
                                         Channel channel,
                                         const DetectorConfig& config);

// (rare, flagged) -> HighlyAnomalous; exactly one -> Suspicious;
// neither -> Stable.
Grade grade_frame(bool structurally_rare, bool any_channel_flag);

// Compose cluster rarity, per-channel response flags and the grade ladder
// into one verdict per frame. Throws LengthMismatch when features and
// model.assignments disagree in length, TooFewFrames when N < 2.
std::vector<AnomalyVerdict> run_detection(const std::vector<ColorFeature>& features,
                                          const ClusterModel& model,
                                          const DetectorConfig& config);

} // namespace chromasift
