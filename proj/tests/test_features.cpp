#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "chromasift/features.hpp"
#include "chromasift/rng.hpp"
#include "chromasift/synth.hpp"
#include "oracles.hpp"

using namespace chromasift;

TEST_CASE("channel_means on constant and two-pixel grids") {
    CHECK(channel_means(make_uniform_frame({255, 0, 0}, 3, 3)) ==
          MeanVector{255.0, 0.0, 0.0});

    PixelGrid two;
    two.width = 2;
    two.height = 1;
    two.pixels = {{0, 0, 0}, {255, 255, 255}};
    CHECK(channel_means(two) == MeanVector{127.5, 127.5, 127.5});
}

TEST_CASE("channel_means matches the naive summation oracle exactly") {
    PixelGrid grid = oracle::random_grid(256, 256, 0xfeed);
    MeanVector got = channel_means(grid);
    MeanVector expected = oracle::naive_means(grid);
    CHECK(got.r == expected.r);
    CHECK(got.g == expected.g);
    CHECK(got.b == expected.b);
}

TEST_CASE("channel_histogram point mass and two-point distribution") {
    ChannelHistogram h = channel_histogram(make_uniform_frame({128, 128, 128}, 4, 4),
                                           Channel::G);
    for (int i = 0; i < 256; ++i) CHECK(h.bins[i] == (i == 128 ? 1.0 : 0.0));

    PixelGrid two;
    two.width = 2;
    two.height = 1;
    two.pixels = {{0, 7, 7}, {255, 7, 7}};
    ChannelHistogram r = channel_histogram(two, Channel::R);
    CHECK(r.bins[0] == 0.5);
    CHECK(r.bins[255] == 0.5);
}

TEST_CASE("histograms and means are permutation invariant") {
    PixelGrid grid = oracle::random_grid(64, 64, 0xbadd);
    PixelGrid shuffled = grid;
    SplitMix64 rng(12345);
    for (std::size_t i = shuffled.pixels.size(); i > 1; --i)
        std::swap(shuffled.pixels[i - 1], shuffled.pixels[rng.bounded(i)]);

    CHECK(channel_means(grid) == channel_means(shuffled));
    for (Channel c : kAllChannels)
        CHECK(channel_histogram(grid, c).bins == channel_histogram(shuffled, c).bins);
}

TEST_CASE("histogram normalization and mean consistency over random grids") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        PixelGrid grid = oracle::random_grid(48, 32, 1000 + seed);
        MeanVector mean = channel_means(grid);
        for (Channel c : kAllChannels) {
            ChannelHistogram h = channel_histogram(grid, c);
            double sum = 0.0, weighted = 0.0;
            for (int i = 0; i < 256; ++i) {
                sum += h.bins[i];
                weighted += i * h.bins[i];
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(weighted == doctest::Approx(mean.component(c)).epsilon(1e-6));
        }
    }
}

TEST_CASE("split grids add up to the whole grid's counts") {
    PixelGrid grid = oracle::random_grid(40, 20, 77);
    PixelGrid top = grid, bottom = grid;
    top.height = 10;
    top.pixels.resize(40 * 10);
    bottom.height = 10;
    bottom.pixels.erase(bottom.pixels.begin(), bottom.pixels.begin() + 40 * 10);

    for (Channel c : kAllChannels) {
        ChannelHistogram whole = channel_histogram(grid, c);
        ChannelHistogram ha = channel_histogram(top, c);
        ChannelHistogram hb = channel_histogram(bottom, c);
        for (int i = 0; i < 256; ++i) {
            // halves have equal pixel counts, so counts add as 0.5*(a+b)
            CHECK(whole.bins[i] ==
                  doctest::Approx(0.5 * (ha.bins[i] + hb.bins[i])).epsilon(1e-12));
        }
    }
}

TEST_CASE("histogram_stats point mass at 200") {
    ChannelHistogram h;
    h.channel = Channel::R;
    h.bins[200] = 1.0;

    HistogramStats s = histogram_stats(h);
    CHECK(s.peak_value == 1.0);
    CHECK(s.peak_bin == 200);
    CHECK(s.high_band_mass == 1.0);
    CHECK(s.low_band_mass == 0.0);
    CHECK(s.skewness == 0.0);
    CHECK(s.total_variation == 2.0); // rise and fall of one spike
}

TEST_CASE("histogram_stats uniform distribution") {
    ChannelHistogram h;
    for (double& b : h.bins) b = 1.0 / 256.0;

    HistogramStats s = histogram_stats(h);
    CHECK(s.peak_value == doctest::Approx(1.0 / 256.0));
    CHECK(s.peak_bin == 0); // tie goes to the lowest bin
    CHECK(s.total_variation == doctest::Approx(0.0));
}

TEST_CASE("histogram_stats two-point mixtures against the moment formula") {
    SUBCASE("symmetric 0.5/0.5 at 60 and 220") {
        ChannelHistogram h;
        h.bins[60] = 0.5;
        h.bins[220] = 0.5;
        HistogramStats s = histogram_stats(h);
        CHECK(s.high_band_mass == doctest::Approx(0.5));
        CHECK(s.low_band_mass == doctest::Approx(0.5));
        // mean 140, both deviations +-80: third central moment is 0
        CHECK(s.skewness == doctest::Approx(0.0));
    }
    SUBCASE("asymmetric 0.75/0.25 at 60 and 220") {
        ChannelHistogram h;
        h.bins[60] = 0.75;
        h.bins[220] = 0.25;
        HistogramStats s = histogram_stats(h);
        // mean 100, var 4800, m3 384000 -> skew = 384000/4800^1.5 = 2/sqrt(3)
        CHECK(s.skewness == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
    }
}

TEST_CASE("compute_features ties the pieces together") {
    PixelGrid grid = oracle::random_grid(32, 32, 4242);
    ColorFeature f = compute_features(grid, 7);
    CHECK(f.frame_index == 7);
    CHECK(f.mean == channel_means(grid));
    for (Channel c : kAllChannels) {
        CHECK(f.histogram(c).channel == c);
        CHECK(f.histogram(c).bins == channel_histogram(grid, c).bins);
        CHECK(f.stat(c).peak_value == f.histogram(c).bins[f.stat(c).peak_bin]);
    }
}
