#include "chromasift/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "chromasift/error.hpp"
#include "chromasift/image_io.hpp"
#include "chromasift/ingest.hpp"
#include "chromasift/pipeline.hpp"
#include "chromasift/synth.hpp"
#include "chromasift/version.hpp"

namespace fs = std::filesystem;

namespace chromasift {

std::vector<Channel> parse_rule_channels(const std::string& spec) {
    if (spec.empty()) throw UsageError("--rule-channels needs at least one of R, G, B");
    bool seen[3] = {false, false, false};
    for (char ch : spec) {
        switch (ch) {
        case 'R': case 'r': seen[0] = true; break;
        case 'G': case 'g': seen[1] = true; break;
        case 'B': case 'b': seen[2] = true; break;
        default:
            throw UsageError(std::string("--rule-channels accepts only R, G, B; got '") +
                             ch + "'");
        }
    }
    std::vector<Channel> channels;
    for (Channel c : kAllChannels)
        if (seen[static_cast<int>(c)]) channels.push_back(c);
    return channels;
}

namespace {

struct RunOptions {
    RunConfig config;
    std::string rule_channels = "R";
    std::string resize = "256x256";
    std::string formats = "json,csv";
};

void parse_resize(const std::string& spec, RunConfig& config) {
    auto x = spec.find('x');
    if (x == std::string::npos) x = spec.find('X');
    int w = 0, h = 0;
    try {
        if (x != std::string::npos) {
            w = std::stoi(spec.substr(0, x));
            h = std::stoi(spec.substr(x + 1));
        }
    } catch (const std::exception&) {
        w = 0;
    }
    if (w < 1 || h < 1)
        throw UsageError("--resize expects <W>x<H> with positive dimensions, got '" +
                         spec + "'");
    config.resize_width = w;
    config.resize_height = h;
}

void parse_formats(const std::string& spec, RunConfig& config) {
    config.emit_json = false;
    config.emit_csv = false;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string item = spec.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item == "json") config.emit_json = true;
        else if (item == "csv") config.emit_csv = true;
        else if (!item.empty())
            throw UsageError("--format accepts json,csv; got '" + item + "'");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
}

void add_run_options(CLI::App& run, RunOptions& opts) {
    run.option_defaults()->always_capture_default();
    run.add_option("--input", opts.config.input, "Input directory, file, or glob")
        ->required();
    run.add_option("--stride", opts.config.stride,
                   "Keep every stride-th frame (default 1: all frames)")
        ->check(CLI::PositiveNumber);
    run.add_option("--resize", opts.resize, "Working resolution <W>x<H> (default 256x256)");
    run.add_option("--k", opts.config.cluster.k, "Cluster count (default 3)")
        ->check(CLI::PositiveNumber);
    run.add_option("--seed", opts.config.cluster.seed,
                   "Clustering seed, echoed in the report (default 42)");
    run.add_option("--max-iter", opts.config.cluster.max_iterations,
                   "Clustering iteration cap (default 300)")
        ->check(CLI::PositiveNumber);
    run.add_option("--tol", opts.config.cluster.convergence_tolerance,
                   "Centroid displacement below which clustering stops (default 1e-6)")
        ->check(CLI::NonNegativeNumber);
    run.add_option("--threshold", opts.config.detector.response_threshold,
                   "Fractional peak excess over the leave-one-out baseline "
                   "(default 0.25, i.e. more than 25%)")
        ->check(CLI::PositiveNumber);
    run.add_option("--rule-channels", opts.rule_channels,
                   "Channels the response rule checks, e.g. R or RB (default R)");
    run.add_option("--out", opts.config.out_dir, "Output directory (default out)");
    run.add_option("--format", opts.formats, "Report formats: json,csv (default both)");
    run.add_flag("--charts", opts.config.emit_charts,
                 "Also write per-frame histogram charts and the cluster scatter");
}

RunConfig finalize_run_config(RunOptions& opts) {
    parse_resize(opts.resize, opts.config);
    parse_formats(opts.formats, opts.config);
    opts.config.detector.rule_channels = parse_rule_channels(opts.rule_channels);
    return opts.config;
}

int do_run(const RunConfig& config) {
    RunReport report = run_pipeline(config);
    int worst = exit_code_for(report);
    std::printf("%zu frames analyzed, %d highly anomalous, %d suspicious\n",
                report.frames.size(),
                static_cast<int>(std::count_if(
                    report.verdicts.begin(), report.verdicts.end(),
                    [](const AnomalyVerdict& v) { return v.grade == Grade::HighlyAnomalous; })),
                static_cast<int>(std::count_if(
                    report.verdicts.begin(), report.verdicts.end(),
                    [](const AnomalyVerdict& v) { return v.grade == Grade::Suspicious; })));
    for (const AnomalyVerdict& v : report.verdicts) {
        std::printf("frame %d [%s] %s\n", v.frame_index,
                    report.frames[v.frame_index].source_id.c_str(), grade_name(v.grade));
        for (const std::string& line : v.rationale)
            std::printf("  - %s\n", line.c_str());
    }
    return worst;
}

int do_synth(const std::string& out_dir) {
    fs::path out(out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    auto frames = make_demo_sequence();
    for (std::size_t i = 0; i < frames.size(); ++i) {
        fs::path file = out / ("frame_" + std::to_string(i + 1) + ".png");
        write_png(frames[i], file);
        std::printf("wrote %s\n", file.string().c_str());
    }
    return 0;
}

int do_inspect(const std::string& input, const std::string& resize) {
    RunConfig scratch;
    parse_resize(resize, scratch);
    FrameRef ref{0, input};
    PixelGrid grid = load_and_resize(ref, scratch.resize_width, scratch.resize_height);
    ColorFeature f = compute_features(grid, 0);

    std::printf("%s (%dx%d working resolution)\n", input.c_str(), grid.width,
                grid.height);
    std::printf("mean: r=%.4f g=%.4f b=%.4f\n", f.mean.r, f.mean.g, f.mean.b);
    for (Channel c : kAllChannels) {
        const HistogramStats& s = f.stat(c);
        std::printf("%s: peak %.6f at bin %d, high-band %.4f, low-band %.4f, "
                    "skew %.4f, tv %.4f\n",
                    channel_name(c), s.peak_value, s.peak_bin, s.high_band_mass,
                    s.low_band_mass, s.skewness, s.total_variation);
    }
    return 0;
}

} // namespace

RunConfig parse_run_config(const std::vector<std::string>& args) {
    CLI::App app{"chromasift run"};
    RunOptions opts;
    add_run_options(app, opts);
    try {
        // CLI11 consumes arguments in reverse.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    return finalize_run_config(opts);
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Color-statistics anomaly screening for frame sequences"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    RunOptions run_opts;
    CLI::App* run = app.add_subcommand(
        "run", "Analyze a frame sequence and write reports");
    add_run_options(*run, run_opts);

    std::string synth_out;
    CLI::App* synth = app.add_subcommand(
        "synth", "Write the bundled five-frame demo sequence as PNGs");
    synth->add_option("--out", synth_out, "Output directory")->required();

    std::string inspect_input;
    std::string inspect_resize = "256x256";
    CLI::App* inspect = app.add_subcommand(
        "inspect", "Print one frame's color features (debugging aid)");
    inspect->add_option("--input", inspect_input, "Image file")->required();
    inspect->add_option("--resize", inspect_resize,
                        "Working resolution <W>x<H> (default 256x256)")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e); // 0 for --help/--version, nonzero otherwise
    }

    try {
        if (run->parsed()) return do_run(finalize_run_config(run_opts));
        if (synth->parsed()) return do_synth(synth_out);
        if (inspect->parsed()) return do_inspect(inspect_input, inspect_resize);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace chromasift
