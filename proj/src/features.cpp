#include "chromasift/features.hpp"

#include <cmath>

#include "chromasift/error.hpp"

namespace chromasift {

MeanVector channel_means(const PixelGrid& grid) {
    if (grid.pixels.empty()) throw Error("channel_means on an empty grid");

    std::uint64_t sum_r = 0, sum_g = 0, sum_b = 0;
    for (const Rgb& p : grid.pixels) {
        sum_r += p.r;
        sum_g += p.g;
        sum_b += p.b;
    }
    const double n = static_cast<double>(grid.pixels.size());
    return {sum_r / n, sum_g / n, sum_b / n};
}

ChannelHistogram channel_histogram(const PixelGrid& grid, Channel channel) {
    if (grid.pixels.empty()) throw Error("channel_histogram on an empty grid");

    std::array<std::uint64_t, 256> counts{};
    for (const Rgb& p : grid.pixels) ++counts[channel_value(p, channel)];

    ChannelHistogram h;
    h.channel = channel;
    const double n = static_cast<double>(grid.pixels.size());
    for (int i = 0; i < 256; ++i) h.bins[i] = counts[i] / n;
    return h;
}

HistogramStats histogram_stats(const ChannelHistogram& h) {
    HistogramStats s;
    for (int i = 0; i < 256; ++i) {
        if (h.bins[i] > s.peak_value) {
            s.peak_value = h.bins[i];
            s.peak_bin = i;
        }
        if (i >= kHighBandLow) s.high_band_mass += h.bins[i];
        if (i <= kLowBandHigh) s.low_band_mass += h.bins[i];
        if (i < 255) s.total_variation += std::abs(h.bins[i + 1] - h.bins[i]);
    }

    double mean = 0.0;
    for (int i = 0; i < 256; ++i) mean += i * h.bins[i];
    double variance = 0.0, third_moment = 0.0;
    for (int i = 0; i < 256; ++i) {
        double d = i - mean;
        variance += d * d * h.bins[i];
        third_moment += d * d * d * h.bins[i];
    }
    // A point mass has zero variance; its skewness is defined as 0.
    s.skewness = variance > 0.0
                     ? third_moment / (variance * std::sqrt(variance))
                     : 0.0;
    return s;
}

ColorFeature compute_features(const PixelGrid& grid, int frame_index) {
    ColorFeature f;
    f.frame_index = frame_index;
    f.mean = channel_means(grid);
    for (Channel c : kAllChannels) {
        int i = static_cast<int>(c);
        f.histograms[i] = channel_histogram(grid, c);
        f.stats[i] = histogram_stats(f.histograms[i]);
    }
    return f;
}

} // namespace chromasift
