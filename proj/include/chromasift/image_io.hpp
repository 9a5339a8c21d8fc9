#pragma once

#include <filesystem>

#include "chromasift/types.hpp"

namespace chromasift {

// True if the extension names a format decode_image understands
// (.png, .jpg, .jpeg, .bmp; case-insensitive).
bool has_image_extension(const std::filesystem::path& path);

// Decode a PNG, JPEG or BMP file into an RGB grid at its native size.
// Alpha channels are dropped, grayscale sources are replicated into all
// three channels. Throws IoError if the file cannot be read, DecodeError
// on corrupt or unsupported content.
PixelGrid decode_image(const std::filesystem::path& path);

// Bilinear resample to exactly dst_width x dst_height. Sample positions use
// half-pixel centers: output pixel (x, y) reads the source at
// ((x+0.5)*sw/dw - 0.5, (y+0.5)*sh/dh - 0.5), clamped to the image, and each
// channel is rounded to the nearest integer. Resizing to the source size is
// an exact no-op.
PixelGrid resize_bilinear(const PixelGrid& src, int dst_width, int dst_height);

// Write an 8-bit RGB PNG. Throws IoError on failure.
void write_png(const PixelGrid& grid, const std::filesystem::path& path);

} // namespace chromasift
