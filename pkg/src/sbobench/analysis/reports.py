"""Report emission: curve/grid CSV files, rules JSON, log conversion.

Floats are serialised with ``repr``, which round-trips exactly in
Python 3, so a grid written with :func:`write_grid_csv` and re-read
with :func:`read_grid_csv` compares equal to the original.
"""

import csv
import json
from pathlib import Path

from ..core import (
    PHASE_MODEL,
    PHASE_RANDOM,
    CATEGORICAL,
    CONTINUOUS,
    EvaluationRecord,
    RunLog,
    space_from_jsonable,
    write_run_log,
)
from .curves import NormalisedCurve
from .offline import OfflineEvalResult
from .replay import ReplayCell, ReplayGrid
from .rules import RulesTree

_MEAN_PREFIX = "mean_"


def write_curves_csv(curves: dict, path) -> Path:
    """One row per (solver, iteration) with mean/std and scale metadata."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["solver", "iteration", "mean", "std", "r0", "r1", "n_runs"])
        for solver in sorted(curves):
            curve = curves[solver]
            for it, mean, std in zip(curve.iterations, curve.mean, curve.std):
                writer.writerow(
                    [solver, it, repr(mean), repr(std), repr(curve.r0), repr(curve.r1), curve.n_runs]
                )
    return path


def read_curves_csv(path) -> dict:
    groups: dict = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            groups.setdefault(row["solver"], []).append(row)
    curves = {}
    for solver, rows in groups.items():
        curves[solver] = NormalisedCurve(
            solver_id=solver,
            iterations=tuple(int(r["iteration"]) for r in rows),
            mean=tuple(float(r["mean"]) for r in rows),
            std=tuple(float(r["std"]) for r in rows),
            r0=float(rows[0]["r0"]),
            r1=float(rows[0]["r1"]),
            n_runs=int(rows[0]["n_runs"]),
        )
    return curves


def write_grid_csv(grid: ReplayGrid, path) -> Path:
    """One row per grid cell; undefined cells leave winner/means empty."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["budget", "eval_time", "defined", "winner"]
            + [_MEAN_PREFIX + s for s in grid.solvers]
        )
        for cell in grid.cells:
            row = [repr(cell.budget), repr(cell.eval_time)]
            if cell.defined:
                row += ["true", cell.winner]
                row += [repr(cell.means[s]) for s in grid.solvers]
            else:
                row += ["false", ""] + [""] * len(grid.solvers)
            writer.writerow(row)
    return path


def read_grid_csv(path) -> ReplayGrid:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        solvers = tuple(
            name[len(_MEAN_PREFIX):] for name in header[4:]
        )
        budgets: list = []
        eval_times: list = []
        cells = []
        for row in reader:
            budget, eval_time = float(row[0]), float(row[1])
            if budget not in budgets:
                budgets.append(budget)
            if eval_time not in eval_times:
                eval_times.append(eval_time)
            if row[2] == "true":
                means = {s: float(v) for s, v in zip(solvers, row[4:])}
                cells.append(ReplayCell(budget, eval_time, True, means, row[3]))
            else:
                cells.append(ReplayCell(budget, eval_time, False))
    return ReplayGrid(tuple(budgets), tuple(eval_times), solvers, tuple(cells))


def write_rules_json(tree: RulesTree, train_accuracy: float, test_accuracy: float, path) -> Path:
    """Nested if/else structure plus one textual rule per leaf."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "feature_names": list(tree.feature_names),
        "labels": list(tree.labels),
        "n_leaves": tree.n_leaves,
        "depth": tree.depth(),
        "train_accuracy": train_accuracy,
        "test_accuracy": test_accuracy,
        "tree": tree.to_jsonable(),
        "rules": list(tree.text_rules()),
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return path


def write_offline_json(result: OfflineEvalResult, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "family": result.family,
        "train_mae": {"mean": result.train_mae_mean, "std": result.train_mae_std},
        "test_mae": {"mean": result.test_mae_mean, "std": result.test_mae_std},
        "n_runs": result.n_runs,
        "test_size": result.test_size,
        "truncated": result.truncated,
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return path


def emit_report(result, path) -> Path:
    """Write any analysis product to disk, dispatching on its type.

    Accepts a curves mapping, a ReplayGrid, a (tree, train_acc,
    test_acc) triple from ``fit_rules_tree`` or an OfflineEvalResult.
    """
    if isinstance(result, ReplayGrid):
        return write_grid_csv(result, path)
    if isinstance(result, OfflineEvalResult):
        return write_offline_json(result, path)
    if isinstance(result, tuple) and len(result) == 3 and isinstance(result[0], RulesTree):
        tree, train_acc, test_acc = result
        return write_rules_json(tree, train_acc, test_acc, path)
    if isinstance(result, dict) and all(
        isinstance(v, NormalisedCurve) for v in result.values()
    ):
        return write_curves_csv(result, path)
    raise TypeError(f"no report writer for {type(result).__name__}")


def convert_external_csv(src_csv, mapping_path, out_csv) -> Path:
    """Convert a foreign evaluation CSV into the native log format.

    The mapping file is JSON with three keys: ``space`` (the variable
    specs of the problem, in jsonable form), ``header`` (problem_id,
    solver_id, seed, rand_init) and ``columns``, which names the source
    columns for ``objective``, ``eval_time``, ``solver_time``,
    optionally ``iteration``, and maps each variable to its column
    under ``columns.variables`` (variables not listed default to a
    column of the same name).
    """
    with open(mapping_path) as fh:
        mapping = json.load(fh)
    space = space_from_jsonable(mapping["space"])
    header = mapping["header"]
    columns = mapping["columns"]
    var_columns = columns.get("variables", {})
    rand_init = int(header["rand_init"])

    records = []
    with open(src_csv, newline="") as fh:
        for i, row in enumerate(csv.DictReader(fh)):
            values = {}
            for v in space.variables:
                raw = row[var_columns.get(v.name, v.name)]
                if v.kind == CONTINUOUS:
                    values[v.name] = float(raw)
                elif v.kind == CATEGORICAL:
                    values[v.name] = raw
                else:
                    values[v.name] = int(float(raw))
            point = space.make_point(values)
            iteration = (
                int(row[columns["iteration"]]) if "iteration" in columns else i + 1
            )
            records.append(
                EvaluationRecord(
                    iteration=iteration,
                    point=point,
                    objective=float(row[columns["objective"]]),
                    eval_time=float(row[columns["eval_time"]]),
                    solver_time=float(row[columns["solver_time"]]),
                    phase=PHASE_RANDOM if iteration <= rand_init else PHASE_MODEL,
                )
            )

    log = RunLog(
        problem_id=header["problem_id"],
        solver_id=header["solver_id"],
        seed=int(header["seed"]),
        rand_init=rand_init,
        records=tuple(records),
    )
    return write_run_log(log, space, out_csv)
