#include "chromasift/synth.hpp"

#include <algorithm>
#include <cmath>

#include "chromasift/error.hpp"
#include "chromasift/rng.hpp"

namespace chromasift {

namespace {

void validate_recipe(const ChannelRecipe& recipe, const char* which) {
    if (recipe.components.empty())
        throw InvalidRecipe(std::string(which) + " channel recipe has no components");
    double weight_sum = 0.0;
    for (const MixtureComponent& c : recipe.components) {
        if (c.mean_bin < 0.0 || c.mean_bin > 255.0)
            throw InvalidRecipe(std::string(which) + " channel mass mean outside [0,255]");
        if (c.spread < 0.0)
            throw InvalidRecipe(std::string(which) + " channel spread is negative");
        if (c.weight < 0.0)
            throw InvalidRecipe(std::string(which) + " channel weight is negative");
        weight_sum += c.weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw InvalidRecipe(std::string(which) + " channel weights sum to " +
                            std::to_string(weight_sum) + ", expected 1");
}

std::uint8_t draw_value(const ChannelRecipe& recipe, SplitMix64& rng) {
    double u = rng.unit();
    double cumulative = 0.0;
    const MixtureComponent* chosen = &recipe.components.back();
    for (const MixtureComponent& c : recipe.components) {
        cumulative += c.weight;
        if (u < cumulative) {
            chosen = &c;
            break;
        }
    }
    double v = chosen->mean_bin;
    if (chosen->spread > 0.0) v += chosen->spread * rng.gaussian();
    return static_cast<std::uint8_t>(std::clamp<long>(std::lround(v), 0, 255));
}

} // namespace

PixelGrid make_uniform_frame(Rgb color, int width, int height) {
    if (width < 1 || height < 1) throw Error("frame dimensions must be >= 1");
    PixelGrid grid;
    grid.width = width;
    grid.height = height;
    grid.pixels.assign(static_cast<std::size_t>(width) * height, color);
    return grid;
}

PixelGrid make_frame(const SceneSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw InvalidRecipe("frame dimensions must be >= 1");
    validate_recipe(spec.r, "R");
    validate_recipe(spec.g, "G");
    validate_recipe(spec.b, "B");

    PixelGrid grid;
    grid.width = spec.width;
    grid.height = spec.height;
    grid.pixels.resize(static_cast<std::size_t>(spec.width) * spec.height);

    SplitMix64 rng(spec.seed);
    for (Rgb& p : grid.pixels) {
        p.r = draw_value(spec.r, rng);
        p.g = draw_value(spec.g, rng);
        p.b = draw_value(spec.b, rng);
    }
    return grid;
}

std::vector<SceneSpec> demo_sequence_specs() {
    // Frozen calibration. The broad masses keep stable frames' histogram
    // peaks low while the narrow masses in frames 2, 4 (red) and 5 (blue)
    // push those peaks well past 1.25x the leave-one-out baseline. Mean
    // vectors pair up as {frame 1, frame 3} and {frame 2, frame 4} with
    // frame 5 isolated.
    std::vector<SceneSpec> specs(5);

    // frame 1: stable, blue-dominant
    specs[0].r = {{{90.0, 35.0, 1.0}}};
    specs[0].g = {{{120.0, 30.0, 1.0}}};
    specs[0].b = {{{200.0, 20.0, 1.0}}};
    specs[0].seed = 9001;

    // frame 2: red spike high in the intensity range
    specs[1].r = {{{150.0, 40.0, 0.3}, {220.0, 5.0, 0.7}}};
    specs[1].g = {{{120.0, 30.0, 1.0}}};
    specs[1].b = {{{110.0, 30.0, 1.0}}};
    specs[1].seed = 9002;

    // frame 3: near-identical to frame 1
    specs[2].r = {{{92.0, 35.0, 1.0}}};
    specs[2].g = {{{122.0, 30.0, 1.0}}};
    specs[2].b = {{{198.0, 20.0, 1.0}}};
    specs[2].seed = 9003;

    // frame 4: near-identical to frame 2
    specs[3].r = {{{148.0, 40.0, 0.3}, {222.0, 5.0, 0.7}}};
    specs[3].g = {{{118.0, 30.0, 1.0}}};
    specs[3].b = {{{112.0, 30.0, 1.0}}};
    specs[3].seed = 9004;

    // frame 5: isolated mean, narrow blue peak in the 50-90 band
    specs[4].r = {{{120.0, 35.0, 1.0}}};
    specs[4].g = {{{125.0, 30.0, 1.0}}};
    specs[4].b = {{{70.0, 4.0, 0.85}, {150.0, 40.0, 0.15}}};
    specs[4].seed = 9005;

    return specs;
}

std::vector<PixelGrid> make_demo_sequence() {
    std::vector<PixelGrid> frames;
    for (const SceneSpec& spec : demo_sequence_specs())
        frames.push_back(make_frame(spec));
    return frames;
}

} // namespace chromasift
