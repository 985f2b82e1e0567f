"""Axis-aligned regression trees used by the forest and boosting models.

Splits minimise the summed squared error of the two children; candidate
thresholds are midpoints between consecutive distinct sorted feature
values.  Ties are broken deterministically by (feature index, threshold)
so a tree is a pure function of its inputs.  Trees are stored as flat
node arrays to keep serialisation trivial.
"""

import numpy as np

_LEAF = -1


class RegressionTree:
    """Flat-array binary tree: leaves hold the mean target of their node."""

    def __init__(self, feature, threshold, left, right, value):
        self.feature = np.asarray(feature, dtype=int)
        self.threshold = np.asarray(threshold, dtype=float)
        self.left = np.asarray(left, dtype=int)
        self.right = np.asarray(right, dtype=int)
        self.value = np.asarray(value, dtype=float)

    @property
    def n_nodes(self) -> int:
        return self.feature.size

    def depth(self) -> int:
        """Length of the longest root-to-leaf path (0 for a bare leaf)."""
        depths = np.zeros(self.n_nodes, dtype=int)
        for node in range(self.n_nodes):  # parents precede children
            if self.feature[node] != _LEAF:
                depths[self.left[node]] = depths[node] + 1
                depths[self.right[node]] = depths[node] + 1
        return int(depths.max())

    def predict(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        idx = np.zeros(X.shape[0], dtype=int)
        active = self.feature[idx] != _LEAF
        while active.any():
            rows = np.where(active)[0]
            nodes = idx[rows]
            go_left = X[rows, self.feature[nodes]] <= self.threshold[nodes]
            idx[rows] = np.where(go_left, self.left[nodes], self.right[nodes])
            active = self.feature[idx] != _LEAF
        return self.value[idx]

    def to_jsonable(self) -> dict:
        return {
            "feature": self.feature.tolist(),
            "threshold": self.threshold.tolist(),
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "value": self.value.tolist(),
        }

    @classmethod
    def from_jsonable(cls, payload: dict) -> "RegressionTree":
        return cls(
            payload["feature"],
            payload["threshold"],
            payload["left"],
            payload["right"],
            payload["value"],
        )


def _best_split(X, y, min_leaf):
    """Best (sse, feature, threshold) over all axis splits, or None."""
    n, d = X.shape
    best = None
    for f in range(d):
        order = np.argsort(X[:, f], kind="stable")
        xs = X[order, f]
        ys = y[order]
        csum = np.cumsum(ys)
        csum2 = np.cumsum(ys * ys)
        total, total2 = csum[-1], csum2[-1]
        # Split after position i (1-based count on the left).
        counts = np.arange(1, n)
        left_sum = csum[:-1]
        left_sse = csum2[:-1] - left_sum**2 / counts
        right_sum = total - left_sum
        right_sse = (total2 - csum2[:-1]) - right_sum**2 / (n - counts)
        sse = left_sse + right_sse
        valid = (xs[:-1] != xs[1:]) & (counts >= min_leaf) & ((n - counts) >= min_leaf)
        if not valid.any():
            continue
        sse = np.where(valid, sse, np.inf)
        i = int(np.argmin(sse))  # first minimum -> lowest threshold
        cand = (float(sse[i]), f, float((xs[i] + xs[i + 1]) / 2.0))
        if best is None or cand[0] < best[0]:
            best = cand
    return best


def build_regression_tree(
    X: np.ndarray,
    y: np.ndarray,
    min_leaf: int = 1,
    max_depth: int | None = None,
) -> RegressionTree:
    """Grow a deterministic squared-error tree to purity or the caps."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or X.shape[0] != y.size or X.shape[0] == 0:
        raise ValueError("X must be (n, d) with matching targets")
    if min_leaf < 1:
        raise ValueError("min_leaf must be at least 1")

    feature, threshold, left, right, value = [], [], [], [], []

    def new_node():
        feature.append(_LEAF)
        threshold.append(0.0)
        left.append(_LEAF)
        right.append(_LEAF)
        value.append(0.0)
        return len(feature) - 1

    stack = [(new_node(), np.arange(X.shape[0]), 0)]
    while stack:
        node, rows, depth = stack.pop()
        ys = y[rows]
        value[node] = float(ys.mean())
        if (
            rows.size < 2 * min_leaf
            or np.all(ys == ys[0])
            or (max_depth is not None and depth >= max_depth)
        ):
            continue
        split = _best_split(X[rows], ys, min_leaf)
        if split is None:
            continue
        _, f, thr = split
        mask = X[rows, f] <= thr
        feature[node] = f
        threshold[node] = thr
        l_id, r_id = new_node(), new_node()
        left[node], right[node] = l_id, r_id
        stack.append((r_id, rows[~mask], depth + 1))
        stack.append((l_id, rows[mask], depth + 1))

    return RegressionTree(feature, threshold, left, right, value)
