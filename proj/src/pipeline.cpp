#include "chromasift/pipeline.hpp"

#include <filesystem>

#include "chromasift/error.hpp"
#include "chromasift/ingest.hpp"

namespace fs = std::filesystem;

namespace chromasift {

RunReport run_pipeline(const RunConfig& config) {
    auto refs = discover_frames(config.input);
    refs = sample_keyframes(refs, config.stride);

    std::vector<ColorFeature> features;
    std::vector<std::string> source_ids;
    features.reserve(refs.size());
    for (const FrameRef& ref : refs) {
        PixelGrid grid = load_and_resize(ref, config.resize_width, config.resize_height);
        features.push_back(compute_features(grid, ref.index));
        source_ids.push_back(ref.source_id);
    }

    std::vector<MeanVector> points;
    points.reserve(features.size());
    for (const ColorFeature& f : features) points.push_back(f.mean);
    ClusterModel model = kmeans_fit_restarts(points, config.cluster, kPipelineRestarts);

    std::vector<AnomalyVerdict> verdicts = run_detection(features, model, config.detector);

    RunReport report = build_report(config, features, source_ids, model, verdicts);
    if (config.emit_json || config.emit_csv || config.emit_charts) {
        fs::path out(config.out_dir);
        std::error_code ec;
        fs::create_directories(out, ec);
        if (config.emit_json) emit_json(report, out / "report.json");
        if (config.emit_csv) emit_csv(report, out / "report.csv");
        if (config.emit_charts) {
            render_histograms(features, out);
            render_cluster_scatter(features, model, out);
        }
    }
    return report;
}

int exit_code_for(const RunReport& report) {
    for (const AnomalyVerdict& v : report.verdicts)
        if (v.grade == Grade::HighlyAnomalous) return 2;
    return 0;
}

} // namespace chromasift
