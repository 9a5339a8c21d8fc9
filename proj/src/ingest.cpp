#include "chromasift/ingest.hpp"

#include <algorithm>
#include <filesystem>

#include "chromasift/error.hpp"
#include "chromasift/image_io.hpp"

namespace fs = std::filesystem;

namespace chromasift {

namespace {

// Filename wildcard match with '*' and '?'. Iterative two-pointer form with
// backtracking to the last star.
bool glob_match(const std::string& pattern, const std::string& name) {
    std::size_t p = 0, n = 0;
    std::size_t star = std::string::npos, star_n = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            star_n = n;
        } else if (star != std::string::npos) {
            p = star + 1;
            n = ++star_n;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::vector<std::string> list_image_files(const fs::path& dir,
                                          const std::string& pattern) {
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) throw IoError("cannot read directory: " + dir.string());

    std::vector<std::string> out;
    for (const auto& entry : it) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (!has_image_extension(p)) continue;
        if (!pattern.empty() && !glob_match(pattern, p.filename().string()))
            continue;
        out.push_back(p.string());
    }
    return out;
}

} // namespace

std::vector<FrameRef> discover_frames(const std::string& path_spec) {
    std::vector<std::string> paths;
    fs::path spec(path_spec);
    std::error_code ec;

    if (path_spec.find('*') != std::string::npos ||
        path_spec.find('?') != std::string::npos) {
        fs::path dir = spec.parent_path();
        if (dir.empty()) dir = ".";
        paths = list_image_files(dir, spec.filename().string());
    } else if (fs::is_directory(spec, ec)) {
        paths = list_image_files(spec, "");
    } else if (fs::is_regular_file(spec, ec)) {
        if (has_image_extension(spec)) paths.push_back(spec.string());
    } else {
        throw IoError("no such file or directory: " + path_spec);
    }

    std::sort(paths.begin(), paths.end());
    if (paths.empty())
        throw EmptyInput("no image files match: " + path_spec);

    std::vector<FrameRef> frames;
    frames.reserve(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i)
        frames.push_back({static_cast<int>(i), paths[i]});
    return frames;
}

std::vector<FrameRef> sample_keyframes(const std::vector<FrameRef>& frames,
                                       int stride) {
    if (stride < 1)
        throw InvalidStride("stride must be >= 1, got " + std::to_string(stride));

    std::vector<FrameRef> sampled;
    for (std::size_t i = 0; i < frames.size(); i += stride) {
        FrameRef ref = frames[i];
        ref.index = static_cast<int>(sampled.size());
        sampled.push_back(std::move(ref));
    }
    return sampled;
}

PixelGrid load_and_resize(const FrameRef& ref, int target_width,
                          int target_height) {
    PixelGrid native = decode_image(ref.source_id);
    return resize_bilinear(native, target_width, target_height);
}

} // namespace chromasift
