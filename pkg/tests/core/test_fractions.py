import numpy as np
import pytest
from levelfrac.core.analytic.analytic2d import cell_area_2d
from levelfrac.core.fractions.fractions import compute_fractions, cell_fraction
from levelfrac.core.grid.grid import ScalarGrid, refine
from levelfrac.core.grid.shapes import Circle, Sphere, generate, make_spec, exact_measure
from tests import GOLDEN_CELL, GOLDEN_ALPHA
import levelfrac.core.interp.interp as interp

rng = np.random.default_rng(13)


def test_cell_fraction_dispatch():
    assert cell_fraction(interp.CellCorners2D(*GOLDEN_CELL)).alpha == pytest.approx(GOLDEN_ALPHA, abs=1e-12)
    assert cell_fraction(np.ones((2, 2, 2))).alpha == 1.0


def test_uncut_cells_are_set_directly():
    field = compute_fractions(ScalarGrid(np.array([[1.0, 1.0, -1.0], [1.0, 2.0, -3.0]])), threads=1)
    assert field.alpha.shape == (1, 2)
    assert field.alpha[0, 0] == 1.0
    assert 0.0 < field.alpha[0, 1] < 1.0
    assert field.unresolved == []


def test_cells_match_cellwise_evaluation():
    grid = ScalarGrid(rng.uniform(-1, 1, (5, 4)))
    field = compute_fractions(grid, threads=2)
    for index in np.ndindex(*grid.cell_shape):
        assert field.alpha[index] == cell_area_2d(grid.corners(index)).alpha


def test_thread_count_does_not_change_results():
    grid = ScalarGrid(rng.uniform(-1, 1, (4, 4, 4)))
    assert np.array_equal(compute_fractions(grid, threads=1).alpha, compute_fractions(grid, threads=4).alpha)


def test_oracle_method_brackets_analytic():
    grid = generate(Circle((0.5, 0.5), 0.3), 9)
    oracle = compute_fractions(grid, "oracle", oracle_depth=8)
    exact = compute_fractions(grid).alpha
    assert (oracle.lo <= exact + 1e-12).all()
    assert (exact <= oracle.hi + 1e-12).all()
    assert np.allclose(oracle.alpha, 0.5 * (oracle.lo + oracle.hi))


def test_unknown_method():
    with pytest.raises(ValueError):
        compute_fractions(ScalarGrid(np.zeros((2, 2))), "spline")


def test_circle_area_converges():
    spec = Circle((0.5, 0.5), 0.25)
    grid = generate(spec, 33)
    total = compute_fractions(grid).alpha.sum() * grid.h ** 2
    assert total == pytest.approx(spec.measure(), abs=3e-3)


def test_refinement_is_consistent():
    # the refined interpolant is the same function, so aggregated fractions agree to round-off
    grid = ScalarGrid(rng.uniform(-1, 1, (3, 3)))
    coarse = compute_fractions(grid).alpha
    fine = compute_fractions(refine(grid, 1)).alpha
    assert np.allclose(fine.reshape(2, 2, 2, 2).mean(axis=(1, 3)), coarse, atol=1e-9)


def test_linear_method_on_sphere():
    spec = Sphere((0.5, 0.5, 0.5), 0.3)
    grid = generate(spec, 9)
    total = compute_fractions(grid, "linear").alpha.sum() * grid.h ** 3
    assert total == pytest.approx(spec.measure(), rel=0.1)


@pytest.mark.slow
def test_zalesak_area_within_oracle_bounds():
    grid = generate(make_spec("zalesak"), 257)
    cell = grid.h ** 2
    oracle = compute_fractions(grid, "oracle", oracle_depth=8)
    lo, hi = oracle.lo.sum() * cell, oracle.hi.sum() * cell
    analytic = compute_fractions(grid).alpha.sum() * cell
    assert lo - 1e-12 <= analytic <= hi + 1e-12
    # the interpolant's area differs from the disk's by O(h^2)
    exact = exact_measure(make_spec("zalesak"))
    assert lo - 1e-4 <= exact <= hi + 1e-4
    assert analytic == pytest.approx(exact, abs=1e-4)
