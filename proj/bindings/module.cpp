#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "chromasift/cli.hpp"
#include "chromasift/error.hpp"
#include "chromasift/image_io.hpp"
#include "chromasift/ingest.hpp"
#include "chromasift/pipeline.hpp"
#include "chromasift/synth.hpp"
#include "chromasift/version.hpp"

namespace py = pybind11;
using namespace chromasift;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Color-statistics anomaly screening for frame sequences";
    m.attr("__version__") = kToolVersion;

    py::enum_<Channel>(m, "Channel")
        .value("R", Channel::R)
        .value("G", Channel::G)
        .value("B", Channel::B);

    py::enum_<Grade>(m, "Grade")
        .value("Stable", Grade::Stable)
        .value("Suspicious", Grade::Suspicious)
        .value("HighlyAnomalous", Grade::HighlyAnomalous);

    py::class_<Rgb>(m, "Rgb")
        .def(py::init([](int r, int g, int b) {
                 return Rgb{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                            static_cast<std::uint8_t>(b)};
             }),
             py::arg("r"), py::arg("g"), py::arg("b"))
        .def_readwrite("r", &Rgb::r)
        .def_readwrite("g", &Rgb::g)
        .def_readwrite("b", &Rgb::b);

    py::class_<PixelGrid>(m, "PixelGrid")
        .def_readonly("width", &PixelGrid::width)
        .def_readonly("height", &PixelGrid::height)
        .def("pixel",
             [](const PixelGrid& g, int x, int y) {
                 const Rgb& p = g.at(x, y);
                 return py::make_tuple(p.r, p.g, p.b);
             })
        .def("__eq__", [](const PixelGrid& a, const PixelGrid& b) { return a == b; });

    py::class_<FrameRef>(m, "FrameRef")
        .def(py::init<int, std::string>(), py::arg("index"), py::arg("source_id"))
        .def_readwrite("index", &FrameRef::index)
        .def_readwrite("source_id", &FrameRef::source_id);

    py::class_<MeanVector>(m, "MeanVector")
        .def(py::init<double, double, double>(), py::arg("r") = 0.0,
             py::arg("g") = 0.0, py::arg("b") = 0.0)
        .def_readwrite("r", &MeanVector::r)
        .def_readwrite("g", &MeanVector::g)
        .def_readwrite("b", &MeanVector::b);

    py::class_<ChannelHistogram>(m, "ChannelHistogram")
        .def_readonly("channel", &ChannelHistogram::channel)
        .def_property_readonly("bins", [](const ChannelHistogram& h) {
            return std::vector<double>(h.bins.begin(), h.bins.end());
        });

    py::class_<HistogramStats>(m, "HistogramStats")
        .def_readonly("peak_value", &HistogramStats::peak_value)
        .def_readonly("peak_bin", &HistogramStats::peak_bin)
        .def_readonly("high_band_mass", &HistogramStats::high_band_mass)
        .def_readonly("low_band_mass", &HistogramStats::low_band_mass)
        .def_readonly("skewness", &HistogramStats::skewness)
        .def_readonly("total_variation", &HistogramStats::total_variation);

    py::class_<ColorFeature>(m, "ColorFeature")
        .def_readonly("frame_index", &ColorFeature::frame_index)
        .def_readonly("mean", &ColorFeature::mean)
        .def("histogram", &ColorFeature::histogram, py::arg("channel"))
        .def("stat", &ColorFeature::stat, py::arg("channel"));

    py::class_<ClusterConfig>(m, "ClusterConfig")
        .def(py::init<>())
        .def_readwrite("k", &ClusterConfig::k)
        .def_readwrite("seed", &ClusterConfig::seed)
        .def_readwrite("max_iterations", &ClusterConfig::max_iterations)
        .def_readwrite("convergence_tolerance", &ClusterConfig::convergence_tolerance);

    py::class_<ClusterModel>(m, "ClusterModel")
        .def_readonly("centroids", &ClusterModel::centroids)
        .def_readonly("assignments", &ClusterModel::assignments)
        .def_readonly("inertia", &ClusterModel::inertia)
        .def_readonly("iterations_run", &ClusterModel::iterations_run)
        .def_readonly("inertia_trace", &ClusterModel::inertia_trace)
        .def_readonly("seed", &ClusterModel::seed);

    py::class_<DetectorConfig>(m, "DetectorConfig")
        .def(py::init<>())
        .def_readwrite("response_threshold", &DetectorConfig::response_threshold)
        .def_readwrite("rule_channels", &DetectorConfig::rule_channels);

    py::class_<ChannelFlag>(m, "ChannelFlag")
        .def_readonly("channel", &ChannelFlag::channel)
        .def_readonly("fired", &ChannelFlag::fired);

    py::class_<AnomalyVerdict>(m, "AnomalyVerdict")
        .def_readonly("frame_index", &AnomalyVerdict::frame_index)
        .def_readonly("structurally_rare", &AnomalyVerdict::structurally_rare)
        .def_readonly("channel_flags", &AnomalyVerdict::channel_flags)
        .def_readonly("grade", &AnomalyVerdict::grade)
        .def_readonly("rationale", &AnomalyVerdict::rationale);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("input", &RunConfig::input)
        .def_readwrite("stride", &RunConfig::stride)
        .def_readwrite("resize_width", &RunConfig::resize_width)
        .def_readwrite("resize_height", &RunConfig::resize_height)
        .def_readwrite("cluster", &RunConfig::cluster)
        .def_readwrite("detector", &RunConfig::detector)
        .def_readwrite("out_dir", &RunConfig::out_dir)
        .def_readwrite("emit_json", &RunConfig::emit_json)
        .def_readwrite("emit_csv", &RunConfig::emit_csv)
        .def_readwrite("emit_charts", &RunConfig::emit_charts);

    py::class_<FrameSummary>(m, "FrameSummary")
        .def_readonly("index", &FrameSummary::index)
        .def_readonly("source_id", &FrameSummary::source_id)
        .def_readonly("mean", &FrameSummary::mean);

    py::class_<ClusterSection>(m, "ClusterSection")
        .def_readonly("centroids", &ClusterSection::centroids)
        .def_readonly("assignments", &ClusterSection::assignments)
        .def_readonly("inertia", &ClusterSection::inertia)
        .def_readonly("iterations_run", &ClusterSection::iterations_run);

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("schema_version", &RunReport::schema_version)
        .def_readonly("tool_version", &RunReport::tool_version)
        .def_readonly("config", &RunReport::config)
        .def_readonly("frames", &RunReport::frames)
        .def_readonly("clustering", &RunReport::clustering)
        .def_readonly("verdicts", &RunReport::verdicts);

    py::class_<MixtureComponent>(m, "MixtureComponent")
        .def(py::init([](double mean_bin, double spread, double weight) {
                 return MixtureComponent{mean_bin, spread, weight};
             }),
             py::arg("mean_bin"), py::arg("spread") = 0.0, py::arg("weight") = 1.0)
        .def_readwrite("mean_bin", &MixtureComponent::mean_bin)
        .def_readwrite("spread", &MixtureComponent::spread)
        .def_readwrite("weight", &MixtureComponent::weight);

    py::class_<ChannelRecipe>(m, "ChannelRecipe")
        .def(py::init<>())
        .def(py::init([](std::vector<MixtureComponent> components) {
                 return ChannelRecipe{std::move(components)};
             }),
             py::arg("components"))
        .def_readwrite("components", &ChannelRecipe::components);

    py::class_<SceneSpec>(m, "SceneSpec")
        .def(py::init<>())
        .def_readwrite("r", &SceneSpec::r)
        .def_readwrite("g", &SceneSpec::g)
        .def_readwrite("b", &SceneSpec::b)
        .def_readwrite("width", &SceneSpec::width)
        .def_readwrite("height", &SceneSpec::height)
        .def_readwrite("seed", &SceneSpec::seed);

    // ingest
    m.def("discover_frames", &discover_frames, py::arg("path_spec"));
    m.def("sample_keyframes", &sample_keyframes, py::arg("frames"), py::arg("stride"));
    m.def("load_and_resize", &load_and_resize, py::arg("ref"),
          py::arg("target_width"), py::arg("target_height"));

    // features
    m.def("channel_means", &channel_means, py::arg("grid"));
    m.def("channel_histogram", &channel_histogram, py::arg("grid"), py::arg("channel"));
    m.def("histogram_stats", &histogram_stats, py::arg("histogram"));
    m.def("compute_features", &compute_features, py::arg("grid"), py::arg("frame_index"));

    // cluster
    m.def("kmeans_fit", &kmeans_fit, py::arg("points"), py::arg("config"));
    m.def("kmeans_fit_restarts", &kmeans_fit_restarts, py::arg("points"),
          py::arg("config"), py::arg("restarts"));
    m.def("assign_point", &assign_point, py::arg("point"), py::arg("centroids"));
    m.def("rarity_flags", &rarity_flags, py::arg("assignments"));

    // detect
    m.def("response_flags_from_peaks", &response_flags_from_peaks, py::arg("peaks"),
          py::arg("threshold"));
    m.def("channel_response_flags", &channel_response_flags, py::arg("features"),
          py::arg("channel"), py::arg("config"));
    m.def("grade_frame", &grade_frame, py::arg("structurally_rare"),
          py::arg("any_channel_flag"));
    m.def("run_detection", &run_detection, py::arg("features"), py::arg("model"),
          py::arg("config"));

    // synth
    m.def("make_uniform_frame", &make_uniform_frame, py::arg("color"),
          py::arg("width"), py::arg("height"));
    m.def("make_frame", &make_frame, py::arg("spec"));
    m.def("make_demo_sequence", &make_demo_sequence);

    // report + pipeline
    m.def("report_to_json", &report_to_json, py::arg("report"));
    m.def("report_to_csv", &report_to_csv, py::arg("report"));
    m.def("run_pipeline", &run_pipeline, py::arg("config"));
    m.def("exit_code_for", &exit_code_for, py::arg("report"));
    m.def("write_png", &write_png, py::arg("grid"), py::arg("path"));
    m.def("parse_rule_channels", &parse_rule_channels, py::arg("spec"));

    py::register_exception<EmptyInput>(m, "EmptyInput");
    py::register_exception<IoError>(m, "IoError");
    py::register_exception<DecodeError>(m, "DecodeError");
    py::register_exception<InvalidStride>(m, "InvalidStride");
    py::register_exception<InsufficientPoints>(m, "InsufficientPoints");
    py::register_exception<NonFiniteInput>(m, "NonFiniteInput");
    py::register_exception<TooFewFrames>(m, "TooFewFrames");
    py::register_exception<LengthMismatch>(m, "LengthMismatch");
    py::register_exception<InvalidRecipe>(m, "InvalidRecipe");
}
