"""Smoke tests for the python module; runnable directly or under pytest."""

import csv
import os
import tempfile

import chromasift as cs

GRADE_LADDER = ["Stable", "Suspicious", "Stable", "Suspicious", "HighlyAnomalous"]


def fixture_features():
    frames = cs.make_demo_sequence()
    return [cs.compute_features(g, i) for i, g in enumerate(frames)]


def test_uniform_frame_features():
    grid = cs.make_uniform_frame(cs.Rgb(10, 20, 30), 16, 16)
    mean = cs.channel_means(grid)
    assert (mean.r, mean.g, mean.b) == (10.0, 20.0, 30.0)

    hist = cs.channel_histogram(grid, cs.Channel.B)
    assert hist.bins[30] == 1.0
    assert abs(sum(hist.bins) - 1.0) < 1e-9

    stats = cs.histogram_stats(hist)
    assert stats.peak_bin == 30
    assert stats.peak_value == 1.0


def test_fixture_detection_ladder():
    features = fixture_features()
    points = [f.mean for f in features]

    config = cs.ClusterConfig()
    model = cs.kmeans_fit_restarts(points, config, 10)
    assert cs.rarity_flags(model.assignments) == [False, False, False, False, True]

    det = cs.DetectorConfig()
    det.rule_channels = [cs.Channel.R, cs.Channel.B]
    verdicts = cs.run_detection(features, model, det)
    assert [v.grade.name for v in verdicts] == GRADE_LADDER


def test_grade_truth_table():
    g = cs.grade_frame
    assert g(True, True) == cs.Grade.HighlyAnomalous
    assert g(True, False) == cs.Grade.Suspicious
    assert g(False, True) == cs.Grade.Suspicious
    assert g(False, False) == cs.Grade.Stable


def test_pipeline_reports_round_trip_through_stdlib_csv():
    with tempfile.TemporaryDirectory() as work:
        frames_dir = os.path.join(work, "frames")
        os.makedirs(frames_dir)
        for i, grid in enumerate(cs.make_demo_sequence()):
            cs.write_png(grid, os.path.join(frames_dir, "frame_%d.png" % (i + 1)))

        config = cs.RunConfig()
        config.input = frames_dir
        config.detector.rule_channels = [cs.Channel.R, cs.Channel.B]
        config.out_dir = os.path.join(work, "out")
        report = cs.run_pipeline(config)

        assert cs.exit_code_for(report) == 2
        assert [v.grade.name for v in report.verdicts] == GRADE_LADDER

        with open(os.path.join(work, "out", "report.csv"), newline="") as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 5
        assert [r["grade"] for r in rows] == GRADE_LADDER
        assert rows[4]["structurally_rare"] == "true"

        text = cs.report_to_json(report)
        assert '"schema_version": 1' in text


def test_error_translation():
    try:
        cs.sample_keyframes([cs.FrameRef(0, "x")], 0)
    except cs.InvalidStride:
        pass
    else:
        raise AssertionError("expected InvalidStride")


if __name__ == "__main__":
    test_uniform_frame_features()
    test_fixture_detection_ladder()
    test_grade_truth_table()
    test_pipeline_reports_round_trip_through_stdlib_csv()
    test_error_translation()
    print("python smoke tests OK")
