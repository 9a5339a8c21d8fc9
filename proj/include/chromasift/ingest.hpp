#pragma once

#include <string>
#include <vector>

#include "chromasift/types.hpp"

namespace chromasift {

// Resolve a directory, a single file, or a glob ('*' and '?' wildcards in the
// filename part) into an ordered frame sequence. Frames are sorted by
// lexicographic byte order of their path and indexed 0..N-1, so the result is
// a pure function of the matching file set. Throws EmptyInput when nothing
// matches, IoError when the location cannot be read.
std::vector<FrameRef> discover_frames(const std::string& path_spec);

// Keep every stride-th frame (original indices 0, stride, 2*stride, ...) and
// renumber the survivors 0..M-1 where M = ceil(N/stride).
std::vector<FrameRef> sample_keyframes(const std::vector<FrameRef>& frames,
                                       int stride);

// Decode ref.source_id and bilinearly resize it to the target dimensions.
PixelGrid load_and_resize(const FrameRef& ref, int target_width,
                          int target_height);

} // namespace chromasift
