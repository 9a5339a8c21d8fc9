#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chromasift {

enum class Channel : int { R = 0, G = 1, B = 2 };

inline constexpr Channel kAllChannels[3] = {Channel::R, Channel::G, Channel::B};

inline const char* channel_name(Channel c) {
    switch (c) {
    case Channel::R: return "R";
    case Channel::G: return "G";
    default: return "B";
    }
}

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

inline std::uint8_t channel_value(const Rgb& p, Channel c) {
    switch (c) {
    case Channel::R: return p.r;
    case Channel::G: return p.g;
    default: return p.b;
    }
}

// A decoded, resized 8-bit RGB raster. Pixels are row-major, top-left origin.
struct PixelGrid {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;

    std::size_t pixel_count() const { return pixels.size(); }

    const Rgb& at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    Rgb& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }

    bool operator==(const PixelGrid&) const = default;
};

// One entry of an ordered frame sequence. Indices are unique and contiguous
// from 0 within a sequence.
struct FrameRef {
    int index = 0;
    std::string source_id;

    bool operator==(const FrameRef&) const = default;
};

} // namespace chromasift
