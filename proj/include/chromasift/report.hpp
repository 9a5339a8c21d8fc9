#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "chromasift/config.hpp"
#include "chromasift/detect.hpp"

namespace chromasift {

inline constexpr int kReportSchemaVersion = 1;

struct FrameSummary {
    int index = 0;
    std::string source_id;
    MeanVector mean;
    std::array<HistogramStats, 3> stats; // R, G, B order

    bool operator==(const FrameSummary&) const = default;
};

struct ClusterSection {
    std::vector<MeanVector> centroids;
    std::vector<int> assignments;
    double inertia = 0.0;
    int iterations_run = 0;

    bool operator==(const ClusterSection&) const = default;
};

// Everything one run produces, serialized deterministically: no timestamps,
// keys sorted, frame-index order throughout.
struct RunReport {
    int schema_version = kReportSchemaVersion;
    std::string tool_version;
    RunConfig config;
    std::vector<FrameSummary> frames;
    ClusterSection clustering;
    std::vector<AnomalyVerdict> verdicts;

    bool operator==(const RunReport&) const = default;
};

RunReport build_report(const RunConfig& config,
                       const std::vector<ColorFeature>& features,
                       const std::vector<std::string>& source_ids,
                       const ClusterModel& model,
                       const std::vector<AnomalyVerdict>& verdicts);

// Canonical JSON: lexicographically sorted keys, arrays in frame-index order,
// shortest round-trip doubles. Byte-identical for identical inputs.
std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);
void emit_json(const RunReport& report, const std::filesystem::path& destination);

// One row per frame with a fixed header; RFC-4180 quoting. Channel flag
// columns of channels outside rule_channels stay empty.
std::string report_to_csv(const RunReport& report);
void emit_csv(const RunReport& report, const std::filesystem::path& destination);

// Backing data of one per-frame histogram chart. All numeric assertions in
// tests run against this, never against rendered output.
struct HistogramChartData {
    int frame_index = 0;
    std::array<ChannelHistogram, 3> series; // R, G, B order
    std::filesystem::path file;
};

// Data table behind the cluster scatter chart.
struct ScatterPoint {
    int frame_index = 0;
    double r_mean = 0.0;
    int cluster = 0;
    bool singleton = false;
};
struct ScatterChartData {
    std::vector<ScatterPoint> points;
    std::vector<int> cluster_sizes;
    std::filesystem::path file;
};

// Write hist_<index>.svg per frame: the three normalized channel histograms
// as color-coded series over the 0..255 axis. Returns the backing series.
std::vector<HistogramChartData> render_histograms(const std::vector<ColorFeature>& features,
                                                  const std::filesystem::path& out_dir);

// Write clusters.svg: (frame index, red mean) colored by cluster, singleton
// clusters marked distinctly, legend carries cluster sizes.
ScatterChartData render_cluster_scatter(const std::vector<ColorFeature>& features,
                                        const ClusterModel& model,
                                        const std::filesystem::path& out_dir);

} // namespace chromasift
