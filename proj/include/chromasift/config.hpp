#pragma once

#include <string>

#include "chromasift/cluster.hpp"
#include "chromasift/detect.hpp"

namespace chromasift {

// Full pipeline configuration. The defaults are the reference operating
// point: stride 1, 256x256 resize, k=3 with seed 42 and at most 300
// iterations, response threshold 0.25 on the red channel only.
struct RunConfig {
    std::string input;           // directory, file, or glob
    int stride = 1;
    int resize_width = 256;
    int resize_height = 256;
    ClusterConfig cluster;
    DetectorConfig detector;
    std::string out_dir = "out";
    bool emit_json = true;
    bool emit_csv = true;
    bool emit_charts = false;

    bool operator==(const RunConfig&) const = default;
};

} // namespace chromasift
