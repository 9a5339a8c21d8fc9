#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chromasift/types.hpp"

namespace chromasift {

// Band edges for the reported high/low mass diagnostics.
inline constexpr int kHighBandLow = 180;  // high band covers bins 180..255
inline constexpr int kLowBandHigh = 89;   // low band covers bins 0..89

// Per-frame average intensity of each channel, the clustering feature.
struct MeanVector {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    double component(Channel c) const {
        switch (c) {
        case Channel::R: return r;
        case Channel::G: return g;
        default: return b;
        }
    }

    bool operator==(const MeanVector&) const = default;
};

// Normalized 256-bin intensity histogram of one channel; bins sum to 1.
struct ChannelHistogram {
    Channel channel = Channel::R;
    std::array<double, 256> bins{};

    bool operator==(const ChannelHistogram&) const = default;
};

struct HistogramStats {
    double peak_value = 0.0;     // max bin frequency
    int peak_bin = 0;            // argmax, ties broken toward the lowest bin
    double high_band_mass = 0.0; // sum of bins 180..255
    double low_band_mass = 0.0;  // sum of bins 0..89
    double skewness = 0.0;       // third standardized moment; 0 for point mass
    double total_variation = 0.0; // sum |bins[i+1]-bins[i]|

    bool operator==(const HistogramStats&) const = default;
};

struct ColorFeature {
    int frame_index = 0;
    MeanVector mean;
    std::array<ChannelHistogram, 3> histograms; // R, G, B order
    std::array<HistogramStats, 3> stats;        // R, G, B order

    const ChannelHistogram& histogram(Channel c) const {
        return histograms[static_cast<int>(c)];
    }
    const HistogramStats& stat(Channel c) const {
        return stats[static_cast<int>(c)];
    }
};

// Arithmetic channel means over all pixels, accumulated in 64-bit integers so
// any grid up to 2^32 pixels sums without overflow.
MeanVector channel_means(const PixelGrid& grid);

// bins[v] = count(intensity == v) / pixel_count, one exact division per bin.
ChannelHistogram channel_histogram(const PixelGrid& grid, Channel channel);

HistogramStats histogram_stats(const ChannelHistogram& h);

// Bundle means, histograms and stats for one frame.
ColorFeature compute_features(const PixelGrid& grid, int frame_index);

} // namespace chromasift
