"""Problem ingestion (CSV/JSON) and machine-readable result emission.

Every malformed input is reported with row/column (or JSON field)
coordinates. Emitted files are byte-deterministic for a fixed report:
floats are written with shortest round-trip repr, display variants with 3
decimals, and all newlines are '\\n'.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import IO, Iterable

import numpy as np

from .model import (
    CriterionSpec,
    DecisionMatrix,
    Direction,
    FinalRanking,
    RunConfig,
)
from .pipeline import RunReport


class ProblemFormatError(ValueError):
    """Malformed problem file; message carries the offending location."""


# ------------------------------------------------------------------ parsing

def _open_source(source, mode="r"):
    if hasattr(source, "read"):
        return source, False
    return open(source, mode, encoding="utf-8", newline=""), True


def _infer_format(source, fmt: str | None) -> str:
    if fmt:
        f = fmt.lower()
        if f not in ("csv", "json"):
            raise ProblemFormatError(f"unknown format {fmt!r} (expected csv or json)")
        return f
    suffix = Path(str(source)).suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix == ".json":
        return "json"
    raise ProblemFormatError(
        f"cannot infer format of {source!r}; pass format explicitly"
    )


def parse_problem(source, fmt: str | None = None) -> tuple[DecisionMatrix, RunConfig]:
    """Read a problem file.

    CSV layout: a header row of criterion ids (optionally preceded by a
    corner cell), a direction row of max/min tokens (same optional corner
    cell), then one row per alternative: label followed by n values.

    JSON layout: one object with "criteria" (id/direction/label objects),
    "alternatives", "values", and optional "custom_sets", "iterations",
    "seed".
    """
    fmt = _infer_format(source, fmt)
    f, should_close = _open_source(source)
    try:
        if fmt == "csv":
            return _parse_csv(f)
        return _parse_json(f)
    finally:
        if should_close:
            f.close()


def _parse_direction(token: str, where: str) -> Direction:
    try:
        return Direction.parse(token)
    except ValueError:
        raise ProblemFormatError(f"{where}: unknown direction token {token!r}") from None


def _parse_csv(f: IO[str]) -> tuple[DecisionMatrix, RunConfig]:
    rows = [[c.strip() for c in row] for row in csv.reader(f)]
    rows = [r for r in rows if any(c != "" for c in r)]
    if len(rows) < 3:
        raise ProblemFormatError(
            "CSV needs a header row, a direction row and at least one data row"
        )
    header, dir_row = rows[0], rows[1]

    def is_dir(tok: str) -> bool:
        try:
            Direction.parse(tok)
            return True
        except ValueError:
            return False

    if all(is_dir(t) for t in dir_row):
        n = len(dir_row)
        directions = [Direction.parse(t) for t in dir_row]
    elif len(dir_row) > 1 and all(is_dir(t) for t in dir_row[1:]):
        n = len(dir_row) - 1
        directions = [Direction.parse(t) for t in dir_row[1:]]
    else:
        bad = next(
            (k for k, t in enumerate(dir_row[1:], start=2) if not is_dir(t)),
            1,
        )
        raise ProblemFormatError(
            f"row 2, column {bad}: unknown direction token {dir_row[bad - 1]!r}"
        )

    if len(header) == n:
        ids = header
    elif len(header) == n + 1:
        ids = header[1:]
    else:
        raise ProblemFormatError(
            f"row 1: expected {n} criterion ids (plus optional corner cell), got {len(header)} cells"
        )

    alternatives: list[str] = []
    values: list[list[float]] = []
    for r, row in enumerate(rows[2:], start=3):
        if len(row) != n + 1:
            raise ProblemFormatError(f"row {r}: expected {n} values, got {len(row) - 1}")
        alternatives.append(row[0])
        parsed = []
        for c, cell in enumerate(row[1:], start=2):
            try:
                parsed.append(float(cell))
            except ValueError:
                raise ProblemFormatError(
                    f"row {r}, column {c}: cannot parse {cell!r} as a number"
                ) from None
        values.append(parsed)

    criteria = tuple(
        CriterionSpec(id=i, direction=d, label=i) for i, d in zip(ids, directions)
    )
    return DecisionMatrix(tuple(alternatives), criteria, np.array(values)), RunConfig()


def _parse_json(f: IO[str]) -> tuple[DecisionMatrix, RunConfig]:
    try:
        doc = json.load(f)
    except json.JSONDecodeError as e:
        raise ProblemFormatError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ProblemFormatError("top-level JSON value must be an object")

    for key in ("criteria", "alternatives", "values"):
        if key not in doc:
            raise ProblemFormatError(f"missing required key {key!r}")

    criteria = []
    for k, entry in enumerate(doc["criteria"]):
        where = f"criteria[{k}]"
        if isinstance(entry, dict):
            if "id" not in entry or "direction" not in entry:
                raise ProblemFormatError(f"{where}: need 'id' and 'direction'")
            d = _parse_direction(str(entry["direction"]), f"{where}.direction")
            criteria.append(
                CriterionSpec(
                    id=str(entry["id"]),
                    direction=d,
                    label=str(entry.get("label", entry["id"])),
                )
            )
        elif isinstance(entry, (list, tuple)) and len(entry) == 2:
            d = _parse_direction(str(entry[1]), f"{where}[1]")
            criteria.append(CriterionSpec(id=str(entry[0]), direction=d, label=str(entry[0])))
        else:
            raise ProblemFormatError(f"{where}: expected an object or [id, direction] pair")

    alternatives = [str(a) for a in doc["alternatives"]]
    n = len(criteria)
    values = []
    raw_values = doc["values"]
    if not isinstance(raw_values, list):
        raise ProblemFormatError("'values' must be a list of rows")
    for r, row in enumerate(raw_values):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ProblemFormatError(f"values[{r}]: expected {n} numbers, got {got}")
        parsed = []
        for c, cell in enumerate(row):
            if not isinstance(cell, (int, float)) or isinstance(cell, bool):
                raise ProblemFormatError(
                    f"values[{r}][{c}]: cannot use {cell!r} as a number"
                )
            parsed.append(float(cell))
        values.append(parsed)

    kwargs = {}
    if "iterations" in doc:
        kwargs["iterations"] = int(doc["iterations"])
    if "seed" in doc:
        kwargs["seed"] = int(doc["seed"])
    if "custom_sets" in doc:
        cs = doc["custom_sets"]
        if not isinstance(cs, list) or not all(isinstance(s, list) for s in cs):
            raise ProblemFormatError("'custom_sets' must be a list of weight lists")
        kwargs["custom_sets"] = tuple(tuple(float(v) for v in s) for s in cs)

    matrix = DecisionMatrix(tuple(alternatives), tuple(criteria), np.array(values))
    return matrix, RunConfig(**kwargs)


# ----------------------------------------------------------------- emission

def _fmt_full(x: float) -> str:
    return repr(float(x))


def _fmt_display(x: float) -> str:
    return f"{float(x):.3f}"


def _write_csv(path: Path, header: list[str], rows: Iterable[list[str]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def five_number(values: np.ndarray) -> dict[str, float]:
    """min / q1 / median / q3 / max with linear-interpolation quartiles."""
    q = np.percentile(np.asarray(values, dtype=float), [0, 25, 50, 75, 100])
    return {
        "min": float(q[0]),
        "q1": float(q[1]),
        "median": float(q[2]),
        "q3": float(q[3]),
        "max": float(q[4]),
    }


def build_summary(report: RunReport) -> dict:
    """Plain-data view of a run, sufficient to reconstruct the final
    ranking exactly and to redraw every chart."""
    matrix, final = report.matrix, report.final
    m = matrix.m
    return {
        "config": {
            "iterations": report.config.iterations,
            "seed": report.config.seed,
            "include_entropy": report.config.include_entropy,
            "include_critic": report.config.include_critic,
            "custom_sets": [list(s) for s in report.config.custom_sets],
        },
        "alternatives": list(matrix.alternatives),
        "criteria": [
            {"id": c.id, "label": c.label, "direction": c.direction.value}
            for c in matrix.criteria
        ],
        "weights": [
            {"name": name, "values": [float(v) for v in vec]}
            for name, vec in report.weight_table()
        ],
        "rwm_summary": {
            c.id: five_number(report.rwm.rows[:, j])
            for j, c in enumerate(matrix.criteria)
        },
        "closeness_summary": {
            a: five_number(report.closeness[:, j])
            for j, a in enumerate(matrix.alternatives)
        },
        "final": {
            "positions": [int(p) for p in final.positions],
            "modal_scores": [int(s) for s in final.modal_scores],
            "score_histograms": [
                [int(c) for c in final.score_histograms[j, 1:]] for j in range(m)
            ],
            "mean_scores": [float(v) for v in final.mean_scores],
            "mean_closeness": [float(v) for v in final.mean_closeness],
            "order": [matrix.alternatives[j] for j in final.order],
        },
    }


def final_ranking_from_summary(summary: dict) -> FinalRanking:
    """Rebuild the FinalRanking recorded in a summary document."""
    fin = summary["final"]
    hists = np.array(fin["score_histograms"], dtype=np.int64)
    m = hists.shape[0]
    padded = np.zeros((m, m + 1), dtype=np.int64)
    padded[:, 1:] = hists
    return FinalRanking(
        np.array(fin["positions"], dtype=np.int64),
        np.array(fin["modal_scores"], dtype=np.int64),
        padded,
        np.array(fin["mean_scores"], dtype=float),
        np.array(fin["mean_closeness"], dtype=float),
    )


def load_summary(path) -> dict:
    p = Path(path)
    if p.is_dir():
        p = p / "summary.json"
    with open(p, encoding="utf-8") as f:
        return json.load(f)


def emit_tables(report: RunReport, out_dir) -> dict[str, Path]:
    """Write weights/rwm/ranks tables (full precision plus 3-decimal
    display variants) and summary.json under out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    matrix = report.matrix
    ids = matrix.criterion_ids()
    paths: dict[str, Path] = {}

    table = report.weight_table()
    for suffix, fmt in (("", _fmt_full), ("_display", _fmt_display)):
        p = out / f"weights{suffix}.csv"
        _write_csv(p, ["set"] + ids, [[name] + [fmt(v) for v in vec] for name, vec in table])
        paths[f"weights{suffix}"] = p

    for suffix, fmt in (("", _fmt_full), ("_display", _fmt_display)):
        p = out / f"rwm{suffix}.csv"
        _write_csv(
            p,
            ["iteration"] + ids,
            (
                [str(i + 1)] + [fmt(v) for v in row]
                for i, row in enumerate(report.rwm.rows)
            ),
        )
        paths[f"rwm{suffix}"] = p

    p = out / "ranks.csv"
    _write_csv(
        p,
        ["iteration"] + list(matrix.alternatives),
        (
            [str(i + 1)] + [str(int(v)) for v in row]
            for i, row in enumerate(report.rank_matrix.ranks)
        ),
    )
    paths["ranks"] = p

    p = out / "summary.json"
    with open(p, "w", encoding="utf-8", newline="") as f:
        json.dump(build_summary(report), f, indent=2)
        f.write("\n")
    paths["summary"] = p
    return paths
