"""Offline surrogate accuracy on recorded evaluations.

A model family is trained on the first ``train_len`` evaluations of
each data-gathering run (random search by default) and scored on a
fixed test set: the ``test_keep`` best evaluations found by *any*
solver on the problem.  Testing on the best region is deliberately
adversarial — it measures how well a surrogate extrapolates into the
part of the space optimisation actually cares about.
"""

from dataclasses import dataclass

import numpy as np

from ..surrogates import fit_boosted, fit_forest, fit_gp, fit_least_squares, mae
from ..surrogates.least_squares import FAMILIES as _LS_FAMILIES

DEFAULT_GATHERING_SOLVER = "randomsearch"
DEFAULT_TRAIN_LEN = 500
DEFAULT_TEST_KEEP = 1000


@dataclass(frozen=True)
class OfflineEvalResult:
    """Mean/std of train and test MAE across gathering runs."""

    family: str
    train_mae_mean: float
    train_mae_std: float
    test_mae_mean: float
    test_mae_std: float
    n_runs: int
    test_size: int
    truncated: bool


def _fit_family(space, data, family: str, fit_params: dict):
    if family in _LS_FAMILIES:
        return fit_least_squares(space, data, family=family, **fit_params)
    if family == "gp":
        return fit_gp(space, data, **fit_params)
    if family == "forest":
        return fit_forest(space, data, **fit_params)
    if family == "boosted":
        return fit_boosted(space, data, **fit_params)
    raise ValueError(f"unknown model family {family!r}")


def offline_eval(
    log_pairs,
    family: str,
    gathering_solver: str = DEFAULT_GATHERING_SOLVER,
    train_len: int = DEFAULT_TRAIN_LEN,
    test_keep: int = DEFAULT_TEST_KEEP,
    **fit_params,
) -> OfflineEvalResult:
    """Train-on-random, test-on-best offline accuracy for one family.

    :param log_pairs: (RunLog, SearchSpace) pairs as returned by
        ``load_run_logs``; all logs must share one problem.
    :param fit_params: forwarded to the family's fit function
        (e.g. ``n_basis``, ``ridge``, ``seed``).
    """
    log_pairs = list(log_pairs)
    if not log_pairs:
        raise ValueError("no run logs supplied")
    problems = {log.problem_id for log, _ in log_pairs}
    if len(problems) > 1:
        raise ValueError(f"logs mix problems: {sorted(problems)}")
    space = log_pairs[0][1]

    gathering = [log for log, _ in log_pairs if log.solver_id == gathering_solver]
    if not gathering:
        raise ValueError(f"no runs of gathering solver {gathering_solver!r}")
    for log in gathering:
        if len(log.records) < train_len:
            raise ValueError(
                f"a {gathering_solver} run has {len(log.records)} records; "
                f"need at least train_len={train_len}"
            )

    pool = [
        (rec.point, rec.objective)
        for log, _ in log_pairs
        for rec in log.records
    ]
    pool.sort(key=lambda pair: pair[1])
    truncated = len(pool) < test_keep
    test_data = pool[:test_keep]

    train_maes = []
    test_maes = []
    for log in gathering:
        train_data = [
            (rec.point, rec.objective) for rec in log.records[:train_len]
        ]
        model = _fit_family(space, train_data, family, fit_params)
        train_maes.append(mae(model, train_data))
        test_maes.append(mae(model, test_data))

    return OfflineEvalResult(
        family=family,
        train_mae_mean=float(np.mean(train_maes)),
        train_mae_std=float(np.std(train_maes)),
        test_mae_mean=float(np.mean(test_maes)),
        test_mae_std=float(np.std(test_maes)),
        n_runs=len(gathering),
        test_size=len(test_data),
        truncated=truncated,
    )
