import io as _io
import json

import numpy as np
import pytest

from bandtopsis import (
    Direction,
    ProblemFormatError,
    RunConfig,
    emit_tables,
    final_ranking_from_summary,
    load_summary,
    parse_problem,
    run_pipeline,
)
from conftest import REF_LOWER, REF_UPPER, SOCIAL_DIRECTIONS, SOCIAL_VALUES


# ------------------------------------------------------------------ parsing

def test_parse_social_csv(social_csv):
    matrix, cfg = parse_problem(social_csv)
    assert matrix.m == 6 and matrix.n == 12
    assert matrix.alternatives == tuple(f"a{i}" for i in range(1, 7))
    assert [c.direction.value for c in matrix.criteria] == SOCIAL_DIRECTIONS
    assert np.allclose(matrix.values, SOCIAL_VALUES)
    assert cfg == RunConfig()


def test_parse_csv_without_corner_cell():
    text = "g1,g2\nmax,min\nrow a,1,2\nrow b,3,4\n"
    matrix, _ = parse_problem(_io.StringIO(text), fmt="csv")
    assert matrix.criterion_ids() == ["g1", "g2"]
    assert matrix.alternatives == ("row a", "row b")


def test_parse_csv_direction_case_folding():
    text = "c,g1,g2\nc,MAX,Min\na,1,2\nb,3,4\n"
    matrix, _ = parse_problem(_io.StringIO(text), fmt="csv")
    assert matrix.criteria[0].direction is Direction.BENEFIT
    assert matrix.criteria[1].direction is Direction.COST


def test_parse_csv_ragged_row():
    text = "c,g1,g2\n,max,min\na,1,2\nb,3\n"
    with pytest.raises(ProblemFormatError, match=r"row 4: expected 2 values, got 1"):
        parse_problem(_io.StringIO(text), fmt="csv")


def test_parse_csv_bad_direction_token():
    text = "c,g1,g2\n,max,upward\na,1,2\n"
    with pytest.raises(ProblemFormatError, match="direction"):
        parse_problem(_io.StringIO(text), fmt="csv")


def test_parse_csv_non_numeric_cell_coordinates():
    text = "c,g1,g2\n,max,min\na,1,2\nb,oops,4\n"
    with pytest.raises(ProblemFormatError, match=r"row 4, column 2"):
        parse_problem(_io.StringIO(text), fmt="csv")


def test_parse_json_round_trip(tmp_path):
    doc = {
        "criteria": [
            {"id": "g1", "direction": "max", "label": "speed"},
            ["g2", "min"],
        ],
        "alternatives": ["x", "y"],
        "values": [[1.0, 2.0], [3.0, 4.0]],
        "custom_sets": [[0.5, 0.5]],
        "iterations": 77,
        "seed": 5,
    }
    p = tmp_path / "problem.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    matrix, cfg = parse_problem(p)
    assert matrix.criteria[0].label == "speed"
    assert matrix.criteria[1].direction is Direction.COST
    assert cfg.iterations == 77 and cfg.seed == 5
    assert cfg.custom_sets == ((0.5, 0.5),)


def test_parse_json_error_coordinates():
    bad_row = {"criteria": [["g1", "max"]], "alternatives": ["x"], "values": [[1, 2]]}
    with pytest.raises(ProblemFormatError, match=r"values\[0\]"):
        parse_problem(_io.StringIO(json.dumps(bad_row)), fmt="json")
    bad_cell = {"criteria": [["g1", "max"]], "alternatives": ["x"], "values": [["zz"]]}
    with pytest.raises(ProblemFormatError, match=r"values\[0\]\[0\]"):
        parse_problem(_io.StringIO(json.dumps(bad_cell)), fmt="json")


def test_unknown_format_rejected():
    with pytest.raises(ProblemFormatError):
        parse_problem("problem.txt")


# ----------------------------------------------------------------- emission

@pytest.fixture(scope="module")
def social_report(social_matrix):
    return run_pipeline(
        social_matrix, RunConfig(iterations=400, custom_sets=((0.05,) * 12,))
    )


def test_emit_writes_expected_files(social_report, tmp_path):
    paths = emit_tables(social_report, tmp_path)
    for key in ("weights", "weights_display", "rwm", "rwm_display", "ranks", "summary"):
        assert paths[key].exists()


def test_weights_csv_band_rows_match_reference(social_report, tmp_path):
    paths = emit_tables(social_report, tmp_path)
    lines = paths["weights_display"].read_text().splitlines()
    rows = {line.split(",")[0]: [float(v) for v in line.split(",")[1:]] for line in lines[1:]}
    assert rows["lower"] == pytest.approx(REF_LOWER, abs=0.0005)
    assert rows["upper"] == pytest.approx(REF_UPPER, abs=0.0005)


def test_ranks_csv_row_count_matches_iterations(social_matrix, tmp_path):
    report = run_pipeline(social_matrix, RunConfig(iterations=2, custom_sets=((0.05,) * 12,)))
    paths = emit_tables(report, tmp_path)
    lines = paths["ranks"].read_text().splitlines()
    assert len(lines) == 3  # header + 2 iterations
    for line in lines[1:]:
        ranks = sorted(int(v) for v in line.split(",")[1:])
        assert ranks == list(range(1, 7))


def test_summary_round_trips_final_ranking(social_report, tmp_path):
    paths = emit_tables(social_report, tmp_path)
    summary = load_summary(paths["summary"])
    rebuilt = final_ranking_from_summary(summary)
    fin = social_report.final
    assert np.array_equal(rebuilt.positions, fin.positions)
    assert np.array_equal(rebuilt.modal_scores, fin.modal_scores)
    assert np.array_equal(rebuilt.score_histograms, fin.score_histograms)
    assert np.array_equal(rebuilt.mean_scores, fin.mean_scores)
    assert np.array_equal(rebuilt.mean_closeness, fin.mean_closeness)


def test_load_summary_accepts_directory(social_report, tmp_path):
    emit_tables(social_report, tmp_path)
    assert load_summary(tmp_path) == load_summary(tmp_path / "summary.json")


def test_emission_is_byte_deterministic(social_report, tmp_path):
    a = emit_tables(social_report, tmp_path / "one")
    b = emit_tables(social_report, tmp_path / "two")
    for key in a:
        assert a[key].read_bytes() == b[key].read_bytes(), key


def test_full_precision_columns_round_trip(social_report, tmp_path):
    paths = emit_tables(social_report, tmp_path)
    lines = paths["rwm"].read_text().splitlines()[1:]
    parsed = np.array([[float(v) for v in line.split(",")[1:]] for line in lines])
    assert np.array_equal(parsed, social_report.rwm.rows)


def test_summary_config_echo(social_report, tmp_path):
    paths = emit_tables(social_report, tmp_path)
    summary = load_summary(paths["summary"])
    assert summary["config"]["iterations"] == 400
    assert summary["config"]["seed"] == social_report.config.seed
    assert summary["config"]["custom_sets"] == [[0.05] * 12]
    assert summary["final"]["order"][0] == "a1"
    assert summary["final"]["order"][-1] == "a3"
