"""Ridge-regularised least-squares surrogates over fixed basis expansions.

Four basis families share one fitting path.  ``linear`` and
``quadratic`` use the monomials you would expect; ``piecewise_linear``
uses rectified hinges ``max(0, w.x + b)`` with weights drawn uniformly
from {-1, 0, 1}^d and normalised, each hinge passing through a uniform
point of the encoded box; ``random_fourier`` uses ``cos(w.x + b)`` with
Gaussian frequencies scaled by half the box widths and uniform phases.
Every family gets a constant column.

The coefficients minimise ``sum((g(x) - y)^2) + ridge * ||c||^2``; the
normal equations are solved exactly with a Cholesky factorisation plus
one step of iterative refinement.
"""

from typing import Sequence

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from sbobench.core.rng import make_rng
from sbobench.core.space import Point, SearchSpace
from sbobench.surrogates.base import FitError, SurrogateModel, register_family
from sbobench.surrogates.encoding import encode_points, encoded_bounds

FAMILIES = ("linear", "quadratic", "piecewise_linear", "random_fourier")


def _quadratic_features(X: np.ndarray) -> np.ndarray:
    n, d = X.shape
    cols = [np.ones((n, 1)), X]
    for i in range(d):
        for j in range(i, d):
            cols.append((X[:, i] * X[:, j])[:, None])
    return np.hstack(cols)


def _draw_hinge_basis(space: SearchSpace, n_basis: int, rng) -> tuple[np.ndarray, np.ndarray]:
    """Hinge directions from {-1,0,1}^d (normalised) and box offsets."""
    lower, upper = encoded_bounds(space)
    d = space.dimension
    W = np.empty((n_basis, d))
    b = np.empty(n_basis)
    for k in range(n_basis):
        w = rng.integers(-1, 2, size=d).astype(float)
        while not w.any():
            w = rng.integers(-1, 2, size=d).astype(float)
        w /= np.linalg.norm(w)
        anchor = rng.uniform(lower, upper)
        W[k] = w
        b[k] = -float(w @ anchor)
    return W, b


def _draw_fourier_basis(space: SearchSpace, n_basis: int, rng) -> tuple[np.ndarray, np.ndarray]:
    lower, upper = encoded_bounds(space)
    scale = np.maximum((upper - lower) / 2.0, 1e-12)
    W = rng.normal(size=(n_basis, space.dimension)) / scale
    b = rng.uniform(0.0, 2.0 * np.pi, size=n_basis)
    return W, b


class LeastSquaresModel(SurrogateModel):
    """Fitted basis expansion; ``coefficients[0]`` is the constant term."""

    def __init__(self, space, family, coefficients, W=None, b=None, ridge=0.0):
        super().__init__(space)
        self.family = family
        self.coefficients = np.asarray(coefficients, dtype=float)
        self.W = None if W is None else np.asarray(W, dtype=float)
        self.b = None if b is None else np.asarray(b, dtype=float)
        self.ridge = float(ridge)

    @property
    def n_basis(self) -> int:
        return 0 if self.W is None else self.W.shape[0]

    def features(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if self.family == "linear":
            return np.hstack([np.ones((X.shape[0], 1)), X])
        if self.family == "quadratic":
            return _quadratic_features(X)
        A = X @ self.W.T + self.b
        if self.family == "piecewise_linear":
            basis = np.maximum(A, 0.0)
        else:
            basis = np.cos(A)
        return np.hstack([np.ones((X.shape[0], 1)), basis])

    def predict_encoded(self, X: np.ndarray) -> np.ndarray:
        return self.features(X) @ self.coefficients

    def gradient_encoded(self, x: np.ndarray) -> np.ndarray:
        """Gradient of the prediction at one encoded vector."""
        x = np.asarray(x, dtype=float)
        if self.family == "linear":
            return self.coefficients[1 : 1 + x.size].copy()
        if self.family == "quadratic":
            d = x.size
            grad = self.coefficients[1 : 1 + d].copy()
            k = 1 + d
            for i in range(d):
                for j in range(i, d):
                    c = self.coefficients[k]
                    if i == j:
                        grad[i] += 2.0 * c * x[i]
                    else:
                        grad[i] += c * x[j]
                        grad[j] += c * x[i]
                    k += 1
            return grad
        a = self.W @ x + self.b
        c = self.coefficients[1:]
        if self.family == "piecewise_linear":
            return (c * (a > 0.0)) @ self.W
        return -(c * np.sin(a)) @ self.W

    def to_jsonable(self) -> dict:
        out = {
            "coefficients": self.coefficients.tolist(),
            "ridge": self.ridge,
        }
        if self.W is not None:
            out["W"] = self.W.tolist()
            out["b"] = self.b.tolist()
        return out


def _load_least_squares(family):
    def load(space, payload):
        return LeastSquaresModel(
            space,
            family,
            payload["coefficients"],
            W=payload.get("W"),
            b=payload.get("b"),
            ridge=payload.get("ridge", 0.0),
        )

    return load


for _family in FAMILIES:
    register_family(_family, _load_least_squares(_family))


def fit_least_squares(
    space: SearchSpace,
    data: Sequence[tuple[Point, float]],
    family: str = "linear",
    ridge: float = 1e-6,
    n_basis: int = 200,
    seed: int = 0,
) -> LeastSquaresModel:
    """Fit one of the four basis families on (point, objective) pairs.

    :param ridge: coefficient penalty weight; with ``ridge <= 0`` the fit
        only succeeds for full-rank designs.
    :param n_basis: number of random basis functions (hinge / Fourier
        families only; the monomial families ignore it).
    :param seed: seed for the random basis draw, so refits on growing
        data reuse the same basis.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown least-squares family {family!r}")
    if not data:
        raise ValueError("fit needs at least one pair")
    X = encode_points(space, [p for p, _ in data])
    y = np.array([t for _, t in data], dtype=float)

    W = b = None
    if family in ("piecewise_linear", "random_fourier"):
        if n_basis < 1:
            raise ValueError("n_basis must be positive")
        rng = make_rng(seed)
        draw = _draw_hinge_basis if family == "piecewise_linear" else _draw_fourier_basis
        W, b = draw(space, n_basis, rng)

    model = LeastSquaresModel(space, family, np.zeros(1), W=W, b=b, ridge=ridge)
    phi = model.features(X)
    gram = phi.T @ phi
    if ridge > 0:
        gram = gram + ridge * np.eye(gram.shape[0])
    rhs = phi.T @ y
    try:
        factor = cho_factor(gram, lower=True, check_finite=False)
    except np.linalg.LinAlgError as err:
        if ridge <= 0:
            raise FitError("regularisation required: design is rank-deficient") from err
        raise FitError(f"normal equations could not be factorised (ridge={ridge})") from err
    coeff = cho_solve(factor, rhs, check_finite=False)
    # One round of iterative refinement keeps the optimality residual
    # ||phi'(phi c - y) + ridge c|| at the rounding level even for
    # ill-conditioned random bases.
    residual = rhs - gram @ coeff
    coeff = coeff + cho_solve(factor, residual, check_finite=False)
    model.coefficients = coeff
    return model
