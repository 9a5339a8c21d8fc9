#pragma once

#include "chromasift/config.hpp"
#include "chromasift/report.hpp"

namespace chromasift {

// Restart count of the pipeline's clustering stage; the best-inertia model
// of the deterministically seeded restarts wins.
inline constexpr int kPipelineRestarts = 10;

// Execute the five stages in order: discover/sample/load frames, compute
// color features, cluster the mean vectors, run detection, emit the report
// files selected in config. Returns the report; module errors propagate.
RunReport run_pipeline(const RunConfig& config);

// 2 if any frame graded HighlyAnomalous, else 0.
int exit_code_for(const RunReport& report);

} // namespace chromasift
