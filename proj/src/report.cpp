#include "chromasift/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "chromasift/error.hpp"
#include "chromasift/version.hpp"

using nlohmann::json;

namespace chromasift {

namespace {

// Shortest representation that parses back to the same double.
std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

Channel channel_from_name(const std::string& name) {
    if (name == "R") return Channel::R;
    if (name == "G") return Channel::G;
    if (name == "B") return Channel::B;
    throw Error("unknown channel name: " + name);
}

Grade grade_from_name(const std::string& name) {
    if (name == "Stable") return Grade::Stable;
    if (name == "Suspicious") return Grade::Suspicious;
    if (name == "HighlyAnomalous") return Grade::HighlyAnomalous;
    throw Error("unknown grade name: " + name);
}

json mean_to_json(const MeanVector& m) {
    return json{{"r", m.r}, {"g", m.g}, {"b", m.b}};
}
MeanVector mean_from_json(const json& j) {
    return {j.at("r").get<double>(), j.at("g").get<double>(), j.at("b").get<double>()};
}

json stats_to_json(const HistogramStats& s) {
    return json{{"peak_value", s.peak_value},
                {"peak_bin", s.peak_bin},
                {"high_band_mass", s.high_band_mass},
                {"low_band_mass", s.low_band_mass},
                {"skewness", s.skewness},
                {"total_variation", s.total_variation}};
}
HistogramStats stats_from_json(const json& j) {
    HistogramStats s;
    s.peak_value = j.at("peak_value").get<double>();
    s.peak_bin = j.at("peak_bin").get<int>();
    s.high_band_mass = j.at("high_band_mass").get<double>();
    s.low_band_mass = j.at("low_band_mass").get<double>();
    s.skewness = j.at("skewness").get<double>();
    s.total_variation = j.at("total_variation").get<double>();
    return s;
}

json config_to_json(const RunConfig& c) {
    json rule_channels = json::array();
    for (Channel ch : c.detector.rule_channels) rule_channels.push_back(channel_name(ch));
    return json{{"input", c.input},
                {"stride", c.stride},
                {"resize_width", c.resize_width},
                {"resize_height", c.resize_height},
                {"k", c.cluster.k},
                {"seed", c.cluster.seed},
                {"max_iterations", c.cluster.max_iterations},
                {"convergence_tolerance", c.cluster.convergence_tolerance},
                {"response_threshold", c.detector.response_threshold},
                {"rule_channels", rule_channels},
                {"out_dir", c.out_dir},
                {"emit_json", c.emit_json},
                {"emit_csv", c.emit_csv},
                {"emit_charts", c.emit_charts}};
}
RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.input = j.at("input").get<std::string>();
    c.stride = j.at("stride").get<int>();
    c.resize_width = j.at("resize_width").get<int>();
    c.resize_height = j.at("resize_height").get<int>();
    c.cluster.k = j.at("k").get<int>();
    c.cluster.seed = j.at("seed").get<std::uint64_t>();
    c.cluster.max_iterations = j.at("max_iterations").get<int>();
    c.cluster.convergence_tolerance = j.at("convergence_tolerance").get<double>();
    c.detector.response_threshold = j.at("response_threshold").get<double>();
    c.detector.rule_channels.clear();
    for (const auto& name : j.at("rule_channels"))
        c.detector.rule_channels.push_back(channel_from_name(name.get<std::string>()));
    c.out_dir = j.at("out_dir").get<std::string>();
    c.emit_json = j.at("emit_json").get<bool>();
    c.emit_csv = j.at("emit_csv").get<bool>();
    c.emit_charts = j.at("emit_charts").get<bool>();
    return c;
}

void write_text_file(const std::string& text, const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw IoError("cannot write " + destination.string());
    out << text;
    if (!out) throw IoError("write failed: " + destination.string());
}

} // namespace

RunReport build_report(const RunConfig& config,
                       const std::vector<ColorFeature>& features,
                       const std::vector<std::string>& source_ids,
                       const ClusterModel& model,
                       const std::vector<AnomalyVerdict>& verdicts) {
    if (features.size() != source_ids.size())
        throw LengthMismatch("features and source_ids differ in length");
    RunReport report;
    report.tool_version = kToolVersion;
    report.config = config;
    for (std::size_t i = 0; i < features.size(); ++i)
        report.frames.push_back(
            {features[i].frame_index, source_ids[i], features[i].mean, features[i].stats});
    report.clustering = {model.centroids, model.assignments, model.inertia,
                         model.iterations_run};
    report.verdicts = verdicts;
    return report;
}

std::string report_to_json(const RunReport& report) {
    json frames = json::array();
    for (const FrameSummary& f : report.frames) {
        json stats;
        for (Channel c : kAllChannels)
            stats[channel_name(c)] = stats_to_json(f.stats[static_cast<int>(c)]);
        frames.push_back(json{{"index", f.index},
                              {"source_id", f.source_id},
                              {"mean", mean_to_json(f.mean)},
                              {"stats", stats}});
    }

    json centroids = json::array();
    for (const MeanVector& c : report.clustering.centroids)
        centroids.push_back(json::array({c.r, c.g, c.b}));

    json verdicts = json::array();
    for (const AnomalyVerdict& v : report.verdicts) {
        json flags;
        for (const ChannelFlag& f : v.channel_flags)
            flags[channel_name(f.channel)] = f.fired;
        verdicts.push_back(json{{"frame_index", v.frame_index},
                                {"structurally_rare", v.structurally_rare},
                                {"channel_flags", flags},
                                {"grade", grade_name(v.grade)},
                                {"rationale", v.rationale}});
    }

    json root{{"schema_version", report.schema_version},
              {"tool_version", report.tool_version},
              {"config", config_to_json(report.config)},
              {"frames", frames},
              {"clustering",
               json{{"centroids", centroids},
                    {"assignments", report.clustering.assignments},
                    {"inertia", report.clustering.inertia},
                    {"iterations_run", report.clustering.iterations_run}}},
              {"verdicts", verdicts}};
    return root.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    json root = json::parse(text);
    RunReport report;
    report.schema_version = root.at("schema_version").get<int>();
    report.tool_version = root.at("tool_version").get<std::string>();
    report.config = config_from_json(root.at("config"));

    for (const json& jf : root.at("frames")) {
        FrameSummary f;
        f.index = jf.at("index").get<int>();
        f.source_id = jf.at("source_id").get<std::string>();
        f.mean = mean_from_json(jf.at("mean"));
        for (Channel c : kAllChannels)
            f.stats[static_cast<int>(c)] = stats_from_json(jf.at("stats").at(channel_name(c)));
        report.frames.push_back(std::move(f));
    }

    const json& jc = root.at("clustering");
    for (const json& c : jc.at("centroids"))
        report.clustering.centroids.push_back(
            {c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>()});
    report.clustering.assignments = jc.at("assignments").get<std::vector<int>>();
    report.clustering.inertia = jc.at("inertia").get<double>();
    report.clustering.iterations_run = jc.at("iterations_run").get<int>();

    for (const json& jv : root.at("verdicts")) {
        AnomalyVerdict v;
        v.frame_index = jv.at("frame_index").get<int>();
        v.structurally_rare = jv.at("structurally_rare").get<bool>();
        // flags are stored per channel name; rebuild in R, G, B order
        const json& flags = jv.at("channel_flags");
        for (Channel c : kAllChannels)
            if (flags.contains(channel_name(c)))
                v.channel_flags.push_back({c, flags.at(channel_name(c)).get<bool>()});
        v.grade = grade_from_name(jv.at("grade").get<std::string>());
        v.rationale = jv.at("rationale").get<std::vector<std::string>>();
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

void emit_json(const RunReport& report, const std::filesystem::path& destination) {
    write_text_file(report_to_json(report), destination);
}

std::string report_to_csv(const RunReport& report) {
    std::string out =
        "index,source_id,r_mean,g_mean,b_mean,cluster,"
        "r_peak_value,r_peak_bin,r_high_band_mass,"
        "g_peak_value,g_peak_bin,g_high_band_mass,"
        "b_peak_value,b_peak_bin,b_high_band_mass,"
        "structurally_rare,flag_r,flag_g,flag_b,grade\r\n";

    for (std::size_t i = 0; i < report.frames.size(); ++i) {
        const FrameSummary& f = report.frames[i];
        const AnomalyVerdict& v = report.verdicts[i];

        out += std::to_string(f.index) + ',' + csv_quote(f.source_id) + ',';
        out += format_double(f.mean.r) + ',' + format_double(f.mean.g) + ',' +
               format_double(f.mean.b) + ',';
        out += std::to_string(report.clustering.assignments[i]) + ',';
        for (Channel c : kAllChannels) {
            const HistogramStats& s = f.stats[static_cast<int>(c)];
            out += format_double(s.peak_value) + ',' + std::to_string(s.peak_bin) +
                   ',' + format_double(s.high_band_mass) + ',';
        }
        out += v.structurally_rare ? "true," : "false,";
        for (Channel c : kAllChannels) {
            // Evaluated rule channels carry true/false; the rest stay empty.
            for (const ChannelFlag& flag : v.channel_flags)
                if (flag.channel == c) out += flag.fired ? "true" : "false";
            out += ',';
        }
        out += grade_name(v.grade);
        out += "\r\n";
    }
    return out;
}

void emit_csv(const RunReport& report, const std::filesystem::path& destination) {
    write_text_file(report_to_csv(report), destination);
}

namespace {

constexpr int kChartWidth = 640;
constexpr int kChartHeight = 400;
constexpr int kMarginLeft = 50;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 40;

const char* kSeriesColor[3] = {"#d62728", "#2ca02c", "#1f77b4"}; // R, G, B

const char* kClusterPalette[10] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                   "#bcbd22", "#17becf"};

std::string svg_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string svg_header(const std::string& title) {
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(kChartWidth) + "\" height=\"" +
           std::to_string(kChartHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(kChartWidth / 2) +
           "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + title + "</text>\n";
    // axes
    int x0 = kMarginLeft, y0 = kChartHeight - kMarginBottom;
    int x1 = kChartWidth - kMarginRight, y1 = kMarginTop;
    svg += "<line x1=\"" + std::to_string(x0) + "\" y1=\"" + std::to_string(y0) +
           "\" x2=\"" + std::to_string(x1) + "\" y2=\"" + std::to_string(y0) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + std::to_string(x0) + "\" y1=\"" + std::to_string(y0) +
           "\" x2=\"" + std::to_string(x0) + "\" y2=\"" + std::to_string(y1) +
           "\" stroke=\"black\"/>\n";
    return svg;
}

} // namespace

std::vector<HistogramChartData> render_histograms(const std::vector<ColorFeature>& features,
                                                  const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);

    const double plot_w = kChartWidth - kMarginLeft - kMarginRight;
    const double plot_h = kChartHeight - kMarginTop - kMarginBottom;

    std::vector<HistogramChartData> charts;
    charts.reserve(features.size());
    for (const ColorFeature& f : features) {
        HistogramChartData data;
        data.frame_index = f.frame_index;
        data.series = f.histograms;
        data.file = out_dir / ("hist_" + std::to_string(f.frame_index) + ".svg");

        double max_bin = 0.0;
        for (const ChannelHistogram& h : data.series)
            for (double v : h.bins) max_bin = std::max(max_bin, v);
        if (max_bin <= 0.0) max_bin = 1.0;

        std::string svg = svg_header("frame " + std::to_string(f.frame_index) +
                                     " channel histograms");
        for (Channel c : kAllChannels) {
            const ChannelHistogram& h = data.series[static_cast<int>(c)];
            std::string points;
            for (int i = 0; i < 256; ++i) {
                double px = kMarginLeft + plot_w * i / 255.0;
                double py = (kChartHeight - kMarginBottom) -
                            plot_h * (h.bins[i] / max_bin);
                points += svg_number(px) + "," + svg_number(py) + " ";
            }
            svg += "<polyline fill=\"none\" stroke=\"";
            svg += kSeriesColor[static_cast<int>(c)];
            svg += "\" stroke-width=\"1\" points=\"" + points + "\"/>\n";
        }
        svg += "<text x=\"" + std::to_string(kChartWidth - kMarginRight) + "\" y=\"" +
               std::to_string(kChartHeight - 10) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
               "intensity 0-255, peak " + svg_number(max_bin) + "</text>\n";
        svg += "</svg>\n";

        write_text_file(svg, data.file);
        charts.push_back(std::move(data));
    }
    return charts;
}

ScatterChartData render_cluster_scatter(const std::vector<ColorFeature>& features,
                                        const ClusterModel& model,
                                        const std::filesystem::path& out_dir) {
    if (features.size() != model.assignments.size())
        throw LengthMismatch("features and assignments differ in length");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);

    ScatterChartData data;
    data.file = out_dir / "clusters.svg";
    data.cluster_sizes.assign(model.centroids.size(), 0);
    for (int a : model.assignments) ++data.cluster_sizes[a];
    for (std::size_t i = 0; i < features.size(); ++i) {
        int cluster = model.assignments[i];
        data.points.push_back({features[i].frame_index, features[i].mean.r, cluster,
                               data.cluster_sizes[cluster] == 1});
    }

    const double plot_w = kChartWidth - kMarginLeft - kMarginRight;
    const double plot_h = kChartHeight - kMarginTop - kMarginBottom;
    const int n = static_cast<int>(data.points.size());

    std::string svg = svg_header("red channel mean by frame, colored by cluster");
    for (const ScatterPoint& p : data.points) {
        double px = n > 1 ? kMarginLeft + plot_w * p.frame_index / (n - 1)
                          : kMarginLeft + plot_w / 2.0;
        double py = (kChartHeight - kMarginBottom) - plot_h * (p.r_mean / 255.0);
        const char* color = kClusterPalette[p.cluster % 10];
        if (p.singleton) {
            // Singletons get a diamond with a black outline.
            svg += "<rect x=\"" + svg_number(px - 6) + "\" y=\"" + svg_number(py - 6) +
                   "\" width=\"12\" height=\"12\" fill=\"" + color +
                   "\" stroke=\"black\" stroke-width=\"1.5\" transform=\"rotate(45 " +
                   svg_number(px) + " " + svg_number(py) + ")\"/>\n";
        } else {
            svg += "<circle cx=\"" + svg_number(px) + "\" cy=\"" + svg_number(py) +
                   "\" r=\"6\" fill=\"" + std::string(color) + "\"/>\n";
        }
    }
    for (std::size_t j = 0; j < data.cluster_sizes.size(); ++j) {
        int ly = kMarginTop + 14 + static_cast<int>(j) * 16;
        svg += "<circle cx=\"" + std::to_string(kChartWidth - 130) + "\" cy=\"" +
               std::to_string(ly - 4) + "\" r=\"5\" fill=\"" +
               std::string(kClusterPalette[j % 10]) + "\"/>\n";
        svg += "<text x=\"" + std::to_string(kChartWidth - 120) + "\" y=\"" +
               std::to_string(ly) +
               "\" font-family=\"sans-serif\" font-size=\"11\">cluster " +
               std::to_string(j) + " (n=" + std::to_string(data.cluster_sizes[j]) +
               ")</text>\n";
    }
    svg += "</svg>\n";

    write_text_file(svg, data.file);
    return data;
}

} // namespace chromasift
