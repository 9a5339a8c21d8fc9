#include <doctest.h>

#include <fstream>
#include <sstream>

#include "chromasift/cli.hpp"
#include "chromasift/error.hpp"
#include "chromasift/image_io.hpp"
#include "chromasift/pipeline.hpp"
#include "chromasift/synth.hpp"
#include "temp_dir.hpp"

using namespace chromasift;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_fixture(const std::filesystem::path& dir) {
    auto frames = make_demo_sequence();
    for (std::size_t i = 0; i < frames.size(); ++i)
        write_png(frames[i], dir / ("frame_" + std::to_string(i + 1) + ".png"));
}

} // namespace

TEST_CASE("pipeline on the fixture directory reproduces the grade ladder") {
    TempDir dir("pipe");
    write_fixture(dir.path);

    RunConfig config;
    config.input = dir.path.string();
    config.detector.rule_channels = {Channel::R, Channel::B};
    config.out_dir = (dir.path / "out").string();
    config.emit_charts = true;

    RunReport report = run_pipeline(config);
    REQUIRE(report.verdicts.size() == 5);
    std::vector<Grade> grades;
    for (const auto& v : report.verdicts) grades.push_back(v.grade);
    CHECK(grades == std::vector<Grade>{Grade::Stable, Grade::Suspicious, Grade::Stable,
                                       Grade::Suspicious, Grade::HighlyAnomalous});
    CHECK(exit_code_for(report) == 2);

    CHECK(std::filesystem::exists(dir.path / "out" / "report.json"));
    CHECK(std::filesystem::exists(dir.path / "out" / "report.csv"));
    for (int i = 0; i < 5; ++i)
        CHECK(std::filesystem::exists(dir.path / "out" /
                                      ("hist_" + std::to_string(i) + ".svg")));
    CHECK(std::filesystem::exists(dir.path / "out" / "clusters.svg"));

    // source ids land in the report in frame order
    for (int i = 0; i < 5; ++i) {
        CHECK(report.frames[i].index == i);
        CHECK(report.frames[i].source_id ==
              (dir.path / ("frame_" + std::to_string(i + 1) + ".png")).string());
    }
}

TEST_CASE("pipeline reports are byte-identical across identical runs") {
    TempDir dir("pipe_det");
    write_fixture(dir.path);

    RunConfig config;
    config.input = dir.path.string();
    config.out_dir = (dir.path / "out").string();

    run_pipeline(config);
    std::string json_first = slurp(dir.path / "out" / "report.json");
    std::string csv_first = slurp(dir.path / "out" / "report.csv");
    run_pipeline(config);

    CHECK_FALSE(json_first.empty());
    CHECK(slurp(dir.path / "out" / "report.json") == json_first);
    CHECK(slurp(dir.path / "out" / "report.csv") == csv_first);
}

TEST_CASE("pipeline with identical frames and k=1 grades everything Stable") {
    TempDir dir("pipe_flat");
    for (int i = 0; i < 5; ++i)
        write_png(make_uniform_frame({80, 90, 100}, 64, 64),
                  dir.path / ("f" + std::to_string(i) + ".png"));

    RunConfig config;
    config.input = dir.path.string();
    config.cluster.k = 1;
    config.out_dir = (dir.path / "out").string();

    RunReport report = run_pipeline(config);
    for (const auto& v : report.verdicts) CHECK(v.grade == Grade::Stable);
    CHECK(exit_code_for(report) == 0);
}

TEST_CASE("pipeline surfaces InsufficientPoints with N and k") {
    TempDir dir("pipe_few");
    write_png(make_uniform_frame({1, 2, 3}, 8, 8), dir.path / "a.png");
    write_png(make_uniform_frame({9, 8, 7}, 8, 8), dir.path / "b.png");

    RunConfig config;
    config.input = dir.path.string();
    config.out_dir = (dir.path / "out").string();
    try {
        run_pipeline(config);
        FAIL("expected InsufficientPoints");
    } catch (const InsufficientPoints& e) {
        std::string message = e.what();
        CHECK(message.find("k=3") != std::string::npos);
        CHECK(message.find("N=2") != std::string::npos);
    }
}

TEST_CASE("pipeline honors the stride") {
    TempDir dir("pipe_stride");
    write_fixture(dir.path); // 5 frames
    RunConfig config;
    config.input = dir.path.string();
    config.stride = 2; // keeps frames 1, 3, 5 of the fixture
    config.cluster.k = 2;
    config.out_dir = (dir.path / "out").string();

    RunReport report = run_pipeline(config);
    REQUIRE(report.frames.size() == 3);
    CHECK(report.frames[0].source_id == (dir.path / "frame_1.png").string());
    CHECK(report.frames[1].source_id == (dir.path / "frame_3.png").string());
    CHECK(report.frames[2].source_id == (dir.path / "frame_5.png").string());
}

TEST_CASE("parse_run_config defaults match the reference settings") {
    RunConfig config = parse_run_config({"--input", "somewhere"});
    CHECK(config.input == "somewhere");
    CHECK(config.stride == 1);
    CHECK(config.resize_width == 256);
    CHECK(config.resize_height == 256);
    CHECK(config.cluster.k == 3);
    CHECK(config.cluster.seed == 42);
    CHECK(config.cluster.max_iterations == 300);
    CHECK(config.cluster.convergence_tolerance == 1e-6);
    CHECK(config.detector.response_threshold == 0.25);
    CHECK(config.detector.rule_channels == std::vector<Channel>{Channel::R});
    CHECK(config.emit_json);
    CHECK(config.emit_csv);
    CHECK_FALSE(config.emit_charts);
}

TEST_CASE("parse_run_config flag overrides") {
    RunConfig config = parse_run_config(
        {"--input", "d", "--threshold", "0.20", "--rule-channels", "RB", "--k", "4",
         "--seed", "7", "--stride", "3", "--resize", "64x32", "--max-iter", "50",
         "--tol", "1e-4", "--format", "json", "--charts", "--out", "elsewhere"});
    CHECK(config.detector.response_threshold == 0.20);
    CHECK(config.detector.rule_channels ==
          std::vector<Channel>{Channel::R, Channel::B});
    CHECK(config.cluster.k == 4);
    CHECK(config.cluster.seed == 7);
    CHECK(config.cluster.max_iterations == 50);
    CHECK(config.cluster.convergence_tolerance == 1e-4);
    CHECK(config.stride == 3);
    CHECK(config.resize_width == 64);
    CHECK(config.resize_height == 32);
    CHECK(config.emit_json);
    CHECK_FALSE(config.emit_csv);
    CHECK(config.emit_charts);
    CHECK(config.out_dir == "elsewhere");
}

TEST_CASE("parse_run_config usage errors") {
    CHECK_THROWS_AS(parse_run_config({"--input", "d", "--stride", "0"}), UsageError);
    CHECK_THROWS_AS(parse_run_config({"--input", "d", "--bogus"}), UsageError);
    CHECK_THROWS_AS(parse_run_config({}), UsageError); // --input required
    CHECK_THROWS_AS(parse_run_config({"--input", "d", "--resize", "abc"}), UsageError);
    CHECK_THROWS_AS(parse_run_config({"--input", "d", "--rule-channels", "X"}),
                    UsageError);
    CHECK_THROWS_AS(parse_run_config({"--input", "d", "--format", "xml"}), UsageError);
}

TEST_CASE("parse_rule_channels normalizes order and rejects junk") {
    CHECK(parse_rule_channels("BR") == std::vector<Channel>{Channel::R, Channel::B});
    CHECK(parse_rule_channels("rgb") ==
          std::vector<Channel>{Channel::R, Channel::G, Channel::B});
    CHECK(parse_rule_channels("GG") == std::vector<Channel>{Channel::G});
    CHECK_THROWS_AS(parse_rule_channels(""), UsageError);
    CHECK_THROWS_AS(parse_rule_channels("RX"), UsageError);
}

TEST_CASE("run_cli end to end: synth then run") {
    TempDir dir("cli");
    std::string frames_dir = (dir.path / "frames").string();

    CHECK(run_cli({"synth", "--out", frames_dir}) == 0);
    for (int i = 1; i <= 5; ++i)
        CHECK(std::filesystem::exists(dir.path / "frames" /
                                      ("frame_" + std::to_string(i) + ".png")));

    // red-and-blue rules spot the highly anomalous frame -> exit code 2
    int code = run_cli({"run", "--input", frames_dir, "--rule-channels", "RB",
                        "--out", (dir.path / "out").string()});
    CHECK(code == 2);
    CHECK(std::filesystem::exists(dir.path / "out" / "report.json"));

    // strict red-only rules leave only suspicious frames -> exit code 0
    code = run_cli({"run", "--input", frames_dir,
                    "--out", (dir.path / "out_r").string()});
    CHECK(code == 0);
}

TEST_CASE("run_cli inspect and error exits") {
    TempDir dir("cli2");
    write_png(make_uniform_frame({50, 60, 70}, 16, 16), dir.path / "one.png");

    CHECK(run_cli({"inspect", "--input", (dir.path / "one.png").string()}) == 0);
    CHECK(run_cli({"run", "--input", (dir.path / "missing").string()}) == 1);
    CHECK(run_cli({"run", "--input", dir.path.string(), "--stride", "0"}) != 0);
    CHECK(run_cli({"definitely-not-a-subcommand"}) != 0);
    CHECK(run_cli({}) != 0);
}
