#pragma once

#include <cstdint>
#include <vector>

#include "chromasift/types.hpp"

namespace chromasift {

// One intensity mass of a channel recipe. spread 0 is a point mass at
// mean_bin; otherwise values are drawn from a Gaussian with that mean and
// standard deviation, rounded and clamped to [0, 255].
struct MixtureComponent {
    double mean_bin = 0.0;
    double spread = 0.0;
    double weight = 1.0;
};

struct ChannelRecipe {
    std::vector<MixtureComponent> components;
};

// Deterministic per-frame recipe: one intensity mixture per channel, frame
// dimensions, and the generator seed. Weights of each channel must sum to 1
// and all mass means must lie in [0, 255].
struct SceneSpec {
    ChannelRecipe r;
    ChannelRecipe g;
    ChannelRecipe b;
    int width = 256;
    int height = 256;
    std::uint64_t seed = 0;
};

PixelGrid make_uniform_frame(Rgb color, int width, int height);

// Draw every pixel channel from the recipe mixtures using one SplitMix64
// stream (pixel-major, channels R then G then B within a pixel). Identical
// specs produce bit-identical grids. Throws InvalidRecipe on malformed specs.
PixelGrid make_frame(const SceneSpec& spec);

// Recipes behind the bundled five-frame demo sequence, in 1-based display
// order (frame i lives at index i-1).
std::vector<SceneSpec> demo_sequence_specs();

// The frozen five-frame fixture: two near-identical blue-dominant frames
// (indices 0 and 2), two red-peaked frames whose red histogram spikes in the
// 180-255 band (indices 1 and 3), and one isolated frame with a narrow blue
// peak in the 50-90 band (index 4). Under k=3 the mean vectors admit exactly
// one optimal partition: {0,2}, {1,3}, {4}.
std::vector<PixelGrid> make_demo_sequence();

} // namespace chromasift
