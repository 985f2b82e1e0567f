"""Decision rules extracted from replay grids via a small CART classifier.

The classifier uses Gini impurity with axis-aligned midpoint splits and
grows best-first (largest weighted impurity decrease first) under hard
caps on leaf count and depth.  Zero-gain splits of impure nodes are
allowed, so XOR-style label patterns can still be separated.
"""

import heapq
from dataclasses import dataclass

import numpy as np

from ..core import make_rng
from .replay import ReplayGrid

FEATURE_NAMES = (
    "log10_budget",
    "log10_eval_time",
    "is_10d_continuous",
    "uses_cfd",
)

MAX_LEAVES = 6
MAX_DEPTH = 5

_LEAF = -1


@dataclass(frozen=True)
class RulesTree:
    """Flat-array decision tree over numeric features with string labels.

    ``feature[k] == -1`` marks node k as a leaf; internal nodes route
    x[feature] <= threshold to ``left`` and the rest to ``right``.
    ``label_index`` holds the majority label of every node, so each
    node can act as a leaf for rendering purposes.
    """

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    label_index: np.ndarray
    labels: tuple
    feature_names: tuple = FEATURE_NAMES

    @property
    def n_nodes(self) -> int:
        return self.feature.size

    @property
    def n_leaves(self) -> int:
        return int(np.count_nonzero(self.feature == _LEAF))

    def depth(self) -> int:
        depths = np.zeros(self.n_nodes, dtype=int)
        for node in range(self.n_nodes):  # parents precede children
            if self.feature[node] != _LEAF:
                depths[self.left[node]] = depths[node] + 1
                depths[self.right[node]] = depths[node] + 1
        return int(depths.max())

    def predict_one(self, x) -> str:
        x = np.asarray(x, dtype=float)
        node = 0
        while self.feature[node] != _LEAF:
            if x[self.feature[node]] <= self.threshold[node]:
                node = self.left[node]
            else:
                node = self.right[node]
        return self.labels[self.label_index[node]]

    def predict(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        return np.array([self.predict_one(row) for row in X], dtype=object)

    def accuracy(self, X, y) -> float:
        y = np.asarray(y, dtype=object)
        return float(np.mean(self.predict(X) == y))

    def to_jsonable(self, node: int = 0) -> dict:
        if self.feature[node] == _LEAF:
            return {"label": self.labels[self.label_index[node]]}
        return {
            "feature": self.feature_names[self.feature[node]],
            "threshold": float(self.threshold[node]),
            "left": self.to_jsonable(self.left[node]),
            "right": self.to_jsonable(self.right[node]),
        }

    def text_rules(self) -> tuple:
        """One human-readable rule per leaf, in left-to-right order."""
        rules = []

        def walk(node, conditions):
            if self.feature[node] == _LEAF:
                label = self.labels[self.label_index[node]]
                if conditions:
                    rules.append(f"if {' and '.join(conditions)} then use {label}")
                else:
                    rules.append(f"always use {label}")
                return
            name = self.feature_names[self.feature[node]]
            value = self.threshold[node]
            walk(self.left[node], conditions + [f"{name} <= {value:g}"])
            walk(self.right[node], conditions + [f"{name} > {value:g}"])

        walk(0, [])
        return tuple(rules)


def _gini(counts: np.ndarray) -> float:
    n = counts.sum()
    if n == 0:
        return 0.0
    p = counts / n
    return float(1.0 - np.sum(p * p))


def _best_split(X, y_idx, indices, n_labels):
    """Largest weighted-impurity-decrease split of one node, or None.

    Returns (gain, feature, threshold) with ties broken towards the
    lowest feature index, then the lowest threshold.
    """
    n = indices.size
    parent_counts = np.bincount(y_idx[indices], minlength=n_labels)
    parent_term = n * _gini(parent_counts)
    best = None
    for j in range(X.shape[1]):
        values = X[indices, j]
        order = np.argsort(values, kind="stable")
        sorted_values = values[order]
        sorted_labels = y_idx[indices][order]
        left_counts = np.zeros(n_labels)
        for i in range(n - 1):
            left_counts[sorted_labels[i]] += 1
            if sorted_values[i] == sorted_values[i + 1]:
                continue
            right_counts = parent_counts - left_counts
            gain = (
                parent_term
                - (i + 1) * _gini(left_counts)
                - (n - i - 1) * _gini(right_counts)
            )
            threshold = 0.5 * (sorted_values[i] + sorted_values[i + 1])
            key = (-gain, j, threshold)
            if best is None or key < best[0]:
                best = (key, gain, j, threshold)
    if best is None:
        return None
    return best[1], best[2], best[3]


def grow_tree(X, y, max_leaves: int = MAX_LEAVES, max_depth: int = MAX_DEPTH) -> RulesTree:
    """Best-first CART classification tree with leaf and depth caps."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=object)
    if X.ndim != 2 or X.shape[0] != y.size:
        raise ValueError("features must be (n, f) with one label per row")
    if y.size == 0:
        raise ValueError("no labelled rows supplied")
    labels = tuple(sorted(set(y.tolist())))
    label_of = {label: i for i, label in enumerate(labels)}
    y_idx = np.array([label_of[v] for v in y], dtype=int)

    feature = [_LEAF]
    threshold = [0.0]
    left = [_LEAF]
    right = [_LEAF]
    label_index = [int(np.bincount(y_idx).argmax())]
    depth_of = [0]
    n_leaves = 1

    heap = []
    counter = 0

    def consider(node, indices):
        nonlocal counter
        if depth_of[node] >= max_depth:
            return
        counts = np.bincount(y_idx[indices], minlength=len(labels))
        if _gini(counts) == 0.0:
            return
        split = _best_split(X, y_idx, indices, len(labels))
        if split is None:
            return
        gain, feat, thr = split
        heapq.heappush(heap, (-gain, counter, node, feat, thr, indices))
        counter += 1

    all_indices = np.arange(y.size)
    consider(0, all_indices)
    while heap and n_leaves < max_leaves:
        _, _, node, feat, thr, indices = heapq.heappop(heap)
        mask = X[indices, feat] <= thr
        for child_indices in (indices[mask], indices[~mask]):
            counts = np.bincount(y_idx[child_indices], minlength=len(labels))
            feature.append(_LEAF)
            threshold.append(0.0)
            left.append(_LEAF)
            right.append(_LEAF)
            label_index.append(int(counts.argmax()))
            depth_of.append(depth_of[node] + 1)
        left_child, right_child = len(feature) - 2, len(feature) - 1
        feature[node] = feat
        threshold[node] = thr
        left[node] = left_child
        right[node] = right_child
        n_leaves += 1
        consider(left_child, indices[mask])
        consider(right_child, indices[~mask])

    return RulesTree(
        feature=np.array(feature, dtype=int),
        threshold=np.array(threshold, dtype=float),
        left=np.array(left, dtype=int),
        right=np.array(right, dtype=int),
        label_index=np.array(label_index, dtype=int),
        labels=labels,
    )


def rule_dataset(grids: dict, traits: dict):
    """Feature matrix and winner labels from defined replay-grid cells.

    ``grids`` maps problem_id -> ReplayGrid and ``traits`` maps
    problem_id -> (is_10d_continuous, uses_cfd).  Features are
    log10(budget), log10(eval_time) and the two binary traits.
    """
    rows = []
    labels = []
    for problem_id, grid in grids.items():
        if not isinstance(grid, ReplayGrid):
            raise TypeError(f"expected ReplayGrid for {problem_id!r}")
        is_10d, uses_cfd = traits[problem_id]
        for cell in grid.cells:
            if not cell.defined:
                continue
            rows.append(
                [
                    np.log10(cell.budget),
                    np.log10(cell.eval_time),
                    float(bool(is_10d)),
                    float(bool(uses_cfd)),
                ]
            )
            labels.append(cell.winner)
    if not rows:
        raise ValueError("no defined cells to learn from")
    return np.array(rows, dtype=float), np.array(labels, dtype=object)


def fit_rules_tree(
    features,
    labels,
    split_seed: int = 0,
    n_splits: int = 10,
    max_leaves: int = MAX_LEAVES,
    max_depth: int = MAX_DEPTH,
):
    """Fit rule trees on repeated 80/20 splits and keep the best tester.

    Runs ``n_splits`` random splits seeded from ``split_seed``, fits a
    tree on each training part and keeps the one with the highest
    held-out accuracy (first such split on ties).  Returns
    (tree, train_accuracy, test_accuracy).  A single-label dataset
    short-circuits to a depth-0 tree with both accuracies 1.0.
    """
    X = np.asarray(features, dtype=float)
    y = np.asarray(labels, dtype=object)
    if X.ndim != 2 or X.shape[0] != y.size:
        raise ValueError("features must be (n, f) with one label per row")
    if y.size == 0:
        raise ValueError("no labelled rows supplied")
    if len(set(y.tolist())) == 1:
        tree = grow_tree(X[:1], y[:1], max_leaves=max_leaves, max_depth=max_depth)
        return tree, 1.0, 1.0

    rng = make_rng(split_seed)
    n = y.size
    n_train = min(max(int(round(0.8 * n)), 1), n - 1)
    best = None
    for _ in range(n_splits):
        perm = rng.permutation(n)
        train_idx, test_idx = perm[:n_train], perm[n_train:]
        tree = grow_tree(X[train_idx], y[train_idx], max_leaves=max_leaves, max_depth=max_depth)
        train_acc = tree.accuracy(X[train_idx], y[train_idx])
        test_acc = tree.accuracy(X[test_idx], y[test_idx])
        if best is None or test_acc > best[2]:
            best = (tree, train_acc, test_acc)
    return best
