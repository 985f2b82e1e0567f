"""Least-squares surrogate families: exactness, optimality, determinism."""

import numpy as np
import pytest

from sbobench.core import SearchSpace, VariableSpec, make_rng, sample_uniform
from sbobench.surrogates import FitError, fit_least_squares, load_model, mae
from sbobench.surrogates.encoding import encode_points


def _line_data(space, slope=2.0, intercept=1.0, xs=(0.0, 0.5, 1.0, 2.0, 4.0)):
    return [(space.make_point({"x": x}), slope * x + intercept) for x in xs]


@pytest.fixture
def line_space():
    return SearchSpace((VariableSpec("x", "continuous", lower=0.0, upper=5.0),))


class TestLinear:
    def test_recovers_affine_target(self, line_space):
        model = fit_least_squares(line_space, _line_data(line_space), family="linear", ridge=1e-12)
        pred = model.predict([line_space.make_point({"x": 3.0})])
        assert abs(pred[0] - 7.0) <= 1e-9

    def test_duplicated_dataset_gives_identical_coefficients(self, line_space):
        # With no penalty the optimum is invariant to duplicating every
        # observation (the normal equations just scale by two).
        data = _line_data(line_space)
        a = fit_least_squares(line_space, data, family="linear", ridge=0.0)
        b = fit_least_squares(line_space, data + data, family="linear", ridge=0.0)
        np.testing.assert_allclose(a.coefficients, b.coefficients, rtol=0, atol=1e-10)

    def test_rank_deficient_without_ridge_raises(self, line_space):
        data = [(line_space.make_point({"x": 1.0}), 2.0)] * 3  # single distinct input
        with pytest.raises(FitError, match="regularisation required"):
            fit_least_squares(line_space, data, family="linear", ridge=0.0)
        # The same design fits fine once regularised.
        fit_least_squares(line_space, data, family="linear", ridge=1e-6)


class TestQuadratic:
    def test_recovers_quadratic_exactly(self, box_space):
        rng = make_rng(3)
        pts = [sample_uniform(box_space, rng) for _ in range(30)]
        X = encode_points(box_space, pts)
        y = 1.5 - 2.0 * X[:, 0] + 0.5 * X[:, 1] + 3.0 * X[:, 0] ** 2 - X[:, 0] * X[:, 1]
        data = list(zip(pts, y))
        model = fit_least_squares(box_space, data, family="quadratic", ridge=1e-12)
        assert mae(model, data) < 1e-8


class TestPiecewiseLinear:
    def test_interpolates_with_enough_bases(self, box_space):
        rng = make_rng(11)
        pts = [sample_uniform(box_space, rng) for _ in range(50)]
        X = encode_points(box_space, pts)
        y = np.sin(3 * X[:, 0]) + 0.5 * np.abs(X[:, 1])
        data = list(zip(pts, y))
        model = fit_least_squares(
            box_space, data, family="piecewise_linear", ridge=1e-8, n_basis=120, seed=5
        )
        assert mae(model, data) < 1e-3

    def test_hinge_weights_come_from_signed_grid(self, box_space):
        model = fit_least_squares(
            box_space,
            _line_data_2d(box_space),
            family="piecewise_linear",
            ridge=1e-6,
            n_basis=64,
            seed=9,
        )
        # Every hinge direction is a normalised {-1,0,1} pattern.
        W = model.W
        assert W.shape == (64, 2)
        for w in W:
            scaled = w * np.linalg.norm(w) ** 0  # unit norm already
            assert abs(np.linalg.norm(w) - 1.0) < 1e-12
            pattern = np.round(w / np.abs(w[np.abs(w) > 1e-12]).min())
            assert set(np.unique(pattern)).issubset({-1.0, 0.0, 1.0})


def _line_data_2d(space, n=20, seed=1):
    rng = make_rng(seed)
    pts = [sample_uniform(space, rng) for _ in range(n)]
    X = encode_points(space, pts)
    return list(zip(pts, (X @ [1.0, -2.0] + 0.5).tolist()))


class TestRandomFourier:
    def test_fits_smooth_target_well(self, box_space):
        rng = make_rng(21)
        pts = [sample_uniform(box_space, rng) for _ in range(80)]
        X = encode_points(box_space, pts)
        y = np.cos(2.0 * X[:, 0]) * np.sin(X[:, 1])
        data = list(zip(pts, y))
        model = fit_least_squares(
            box_space, data, family="random_fourier", ridge=1e-8, n_basis=200, seed=2
        )
        assert mae(model, data) < 1e-3

    def test_same_seed_same_basis(self, box_space):
        data = _line_data_2d(box_space)
        m1 = fit_least_squares(box_space, data, family="random_fourier", n_basis=32, seed=7)
        m2 = fit_least_squares(box_space, data, family="random_fourier", n_basis=32, seed=7)
        np.testing.assert_array_equal(m1.W, m2.W)
        np.testing.assert_array_equal(m1.coefficients, m2.coefficients)


class TestOptimality:
    @pytest.mark.parametrize("family", ["linear", "quadratic", "piecewise_linear", "random_fourier"])
    def test_normal_equation_residual_is_tiny(self, box_space, family):
        # First-order optimality of the regularised objective:
        # phi'(phi c - y) + ridge c = 0 up to rounding.
        for seed in range(10):
            rng = make_rng(100 + seed)
            pts = [sample_uniform(box_space, rng) for _ in range(40)]
            y = np.asarray(rng.normal(size=40))
            data = list(zip(pts, y))
            ridge = 1e-6
            model = fit_least_squares(
                box_space, data, family=family, ridge=ridge, n_basis=60, seed=seed
            )
            phi = model.features(encode_points(box_space, pts))
            residual = phi.T @ (phi @ model.coefficients - y) + ridge * model.coefficients
            assert np.max(np.abs(residual)) <= 1e-6


class TestGradients:
    @pytest.mark.parametrize("family", ["linear", "quadratic", "random_fourier"])
    def test_gradient_matches_finite_differences(self, box_space, family):
        data = _line_data_2d(box_space, n=25, seed=3)
        model = fit_least_squares(box_space, data, family=family, n_basis=40, seed=3, ridge=1e-8)
        x = np.array([0.3, 0.7])
        grad = model.gradient_encoded(x)
        eps = 1e-6
        for i in range(2):
            step = np.zeros(2)
            step[i] = eps
            fd = (model.predict_encoded((x + step)[None]) - model.predict_encoded((x - step)[None])) / (2 * eps)
            assert abs(grad[i] - fd[0]) < 1e-5


def test_round_trip_serialisation(box_space, tmp_path):
    data = _line_data_2d(box_space)
    for family in ("linear", "quadratic", "piecewise_linear", "random_fourier"):
        model = fit_least_squares(box_space, data, family=family, n_basis=16, seed=1)
        path = tmp_path / f"{family}.json"
        model.save(path)
        back = load_model(path)
        queries = encode_points(box_space, [p for p, _ in data])
        np.testing.assert_array_equal(model.predict_encoded(queries), back.predict_encoded(queries))


def test_unknown_family_rejected(box_space):
    with pytest.raises(ValueError, match="family"):
        fit_least_squares(box_space, _line_data_2d(box_space), family="spline")
