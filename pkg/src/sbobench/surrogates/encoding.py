"""Ordinal encoding of points into real vectors, and the way back.

Surrogate models and acquisition routines operate on fixed-length
float vectors: continuous values pass through, integers become floats,
and categorical values are replaced by their category index.  Activity
flags are not encoded -- inactive variables contribute their carried
value, which keeps the encoding total and invertible.
"""

from typing import Sequence

import numpy as np

from sbobench.core.space import CATEGORICAL, CONTINUOUS, Point, SearchSpace


def encode(space: SearchSpace, point: Point) -> np.ndarray:
    """Encode one point as a float vector (categoricals by index)."""
    out = np.empty(space.dimension, dtype=float)
    for i, v in enumerate(space.variables):
        if v.kind == CATEGORICAL:
            out[i] = v.categories.index(point.values[i])
        else:
            out[i] = float(point.values[i])
    return out


def encode_points(space: SearchSpace, points: Sequence[Point]) -> np.ndarray:
    """Encode a sequence of points as an (n, d) matrix."""
    return np.array([encode(space, p) for p in points], dtype=float).reshape(
        len(points), space.dimension
    )


def encoded_bounds(space: SearchSpace) -> tuple[np.ndarray, np.ndarray]:
    """Box bounds of the encoded space (categoricals span 0..k-1)."""
    lower = np.empty(space.dimension)
    upper = np.empty(space.dimension)
    for i, v in enumerate(space.variables):
        if v.kind == CATEGORICAL:
            lower[i], upper[i] = 0.0, float(len(v.categories) - 1)
        else:
            lower[i], upper[i] = v.lower, v.upper
    return lower, upper


def nearest_point(space: SearchSpace, vector: Sequence[float]) -> Point:
    """Map an arbitrary encoded vector to the nearest valid point.

    Each coordinate is clamped to its encoded range first, then integer
    and categorical coordinates are rounded to the nearest valid value
    or index (ties to even, IEEE ``rint``).
    """
    values = []
    for i, v in enumerate(space.variables):
        x = float(vector[i])
        if v.kind == CONTINUOUS:
            values.append(min(max(x, v.lower), v.upper))
        elif v.kind == CATEGORICAL:
            idx = int(np.rint(min(max(x, 0.0), float(len(v.categories) - 1))))
            values.append(v.categories[idx])
        else:
            values.append(int(np.rint(min(max(x, v.lower), v.upper))))
    vals = tuple(values)
    return Point(values=vals, active=space.activity(vals))
