"""Acquisition scoring (maximisation orientation)."""

import numpy as np

DEFAULT_BETA = 2.576


def ucb_score(mean, variance, beta=DEFAULT_BETA):
    """Confidence-bound score for minimisation: -mean + beta * sqrt(var).

    The suggested point is the score *maximiser*: low predicted mean and
    high predictive uncertainty both raise the score.
    """
    mean = np.asarray(mean, dtype=float)
    variance = np.asarray(variance, dtype=float)
    if np.any(variance < 0):
        raise ValueError("variance must be non-negative")
    score = -mean + beta * np.sqrt(variance)
    if score.ndim == 0:
        return float(score)
    return score
