import math
import numpy as np
import pytest
from levelfrac.core.exceptions.exceptions import ShapeMismatch, DivideByZero, IncompatibleLevels, DegenerateFit
from levelfrac.core.grid.grid import ScalarGrid
from levelfrac.core.metrics.metrics import total_volume, aggregate_fine_to_coarse, error_norms, convergence_order


def test_total_volume():
    grid = ScalarGrid(np.zeros((3, 3)))
    assert total_volume(grid, np.full((2, 2), 0.5)) == pytest.approx(0.5)
    with pytest.raises(ShapeMismatch):
        total_volume(grid, np.zeros((3, 3)))


def test_aggregate_means_blocks():
    fine = np.arange(16, dtype=float).reshape(4, 4)
    coarse = aggregate_fine_to_coarse(fine, 1)
    assert coarse.shape == (2, 2)
    assert coarse[0, 0] == pytest.approx(np.mean([0, 1, 4, 5]))
    assert aggregate_fine_to_coarse(fine, 2)[0, 0] == pytest.approx(7.5)
    assert np.array_equal(aggregate_fine_to_coarse(fine, 0), fine)


def test_aggregate_3d():
    fine = np.ones((4, 4, 4))
    fine[:2, :2, :2] = 0.0
    assert aggregate_fine_to_coarse(fine, 1)[0, 0, 0] == 0.0
    assert aggregate_fine_to_coarse(fine, 2)[0, 0, 0] == pytest.approx(7.0 / 8.0)


def test_aggregate_incompatible():
    with pytest.raises(IncompatibleLevels):
        aggregate_fine_to_coarse(np.zeros((6, 6)), 2)


def test_error_norms():
    coarse = np.array([[0.5, 1.0], [0.0, 0.25]])
    fine = np.array([[0.75, 1.0], [0.0, 0.25]])
    norms = error_norms(coarse, fine)
    assert norms.l1 == pytest.approx(0.25 / 2.0)
    assert norms.l2 == pytest.approx(math.sqrt(0.0625 / 2.0))
    assert norms.linf == pytest.approx(0.25)


def test_error_norms_errors():
    with pytest.raises(ShapeMismatch):
        error_norms(np.zeros((2, 2)), np.zeros((2, 3)))
    with pytest.raises(DivideByZero):
        error_norms(np.zeros((2, 2)), np.zeros((2, 2)))


def test_convergence_order_of_power_law():
    h = [1 / 16, 1 / 32, 1 / 64, 1 / 128]
    report = convergence_order(h, [3.0 * x ** 2 for x in h])
    assert report.fitted_order == pytest.approx(2.0)
    assert report.resolutions == tuple(h)


@pytest.mark.parametrize("h, err", [
    ([0.1], [0.01]),
    ([0.1, 0.05], [0.01]),
    ([0.1, 0.05], [0.01, 0.0]),
    ([0.05, 0.1], [0.01, 0.02]),
])
def test_convergence_order_degenerate(h, err):
    with pytest.raises(DegenerateFit):
        convergence_order(h, err)


@pytest.mark.parametrize("errors, order", [((1e-2, 2.5e-3), 2.0), ((1e-2, 5e-3), 1.0)])
def test_convergence_order_of_two_points(errors, order):
    assert convergence_order([0.1, 0.05], errors).fitted_order == pytest.approx(order)


def test_error_norms_of_identical_fields():
    field = np.random.default_rng(1).uniform(0, 1, (3, 3))
    norms = error_norms(field, field)
    assert (norms.l1, norms.l2, norms.linf) == (0.0, 0.0, 0.0)
