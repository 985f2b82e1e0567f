"""Bagged regression forest with across-tree predictive variance."""

from typing import Sequence

import numpy as np

from sbobench.core.rng import make_rng
from sbobench.core.space import Point, SearchSpace
from sbobench.surrogates.base import SurrogateModel, register_family
from sbobench.surrogates.encoding import encode_points
from sbobench.surrogates.trees import RegressionTree, build_regression_tree


class RandomForestModel(SurrogateModel):
    """Mean of the trees as prediction, spread across trees as variance."""

    family = "random_forest"

    def __init__(self, space, trees: list[RegressionTree], min_leaf: int, seed: int):
        super().__init__(space)
        self.trees = trees
        self.min_leaf = min_leaf
        self.seed = seed

    def _tree_matrix(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return np.stack([t.predict(X) for t in self.trees], axis=0)

    def predict_encoded(self, X: np.ndarray) -> np.ndarray:
        return self._tree_matrix(X).mean(axis=0)

    def predict_variance_encoded(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        preds = self._tree_matrix(X)
        return preds.mean(axis=0), preds.var(axis=0)

    def to_jsonable(self) -> dict:
        return {
            "min_leaf": self.min_leaf,
            "seed": self.seed,
            "trees": [t.to_jsonable() for t in self.trees],
        }


register_family(
    "random_forest",
    lambda space, payload: RandomForestModel(
        space,
        [RegressionTree.from_jsonable(t) for t in payload["trees"]],
        payload["min_leaf"],
        payload["seed"],
    ),
)


def fit_forest(
    space: SearchSpace,
    data: Sequence[tuple[Point, float]],
    n_trees: int = 24,
    min_leaf: int = 1,
    seed: int = 0,
) -> RandomForestModel:
    """Fit a bagged forest of axis-aligned squared-error trees.

    The first tree is grown on the full sample (so a one-tree forest
    with ``min_leaf=1`` memorises its training data exactly); the
    remaining trees each see a bootstrap resample drawn from the seeded
    stream, which is what gives the ensemble its predictive spread.
    """
    if n_trees < 1:
        raise ValueError("n_trees must be at least 1")
    if len(data) < min_leaf:
        raise ValueError("not enough data for the requested min_leaf")
    X = encode_points(space, [p for p, _ in data])
    y = np.array([t for _, t in data], dtype=float)
    rng = make_rng(seed)
    trees = [build_regression_tree(X, y, min_leaf=min_leaf)]
    n = X.shape[0]
    for _ in range(n_trees - 1):
        rows = rng.integers(0, n, size=n)
        trees.append(build_regression_tree(X[rows], y[rows], min_leaf=min_leaf))
    return RandomForestModel(space, trees, min_leaf, seed)
