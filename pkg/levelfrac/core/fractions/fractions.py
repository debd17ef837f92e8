"""
Grid-wide volume fractions.
"""
import os
import numpy as np
from concurrent.futures import ThreadPoolExecutor
from levelfrac.core.analytic.analytic2d import VolumeFraction, cell_area_2d
from levelfrac.core.decompose.decompose import cell_volume_3d
from levelfrac.core.oracle.oracle import certified_bounds, linear_baseline
from levelfrac.core.grid.grid import ScalarGrid
from levelfrac.core.exceptions.exceptions import Unresolved
import levelfrac.core.interp.interp as interp

METHODS = ("analytic", "linear", "oracle")


class FractionField:
    """Per-cell fractions of a grid, plus oracle bounds and unresolved cells when present"""

    def __init__(self, alpha: np.ndarray, uncertainty: np.ndarray, lo: np.ndarray = None, hi: np.ndarray = None):
        self.alpha = alpha
        self.uncertainty = uncertainty
        self.lo = lo
        self.hi = hi

    @property
    def unresolved(self) -> list:
        """Cells whose fraction carries a nonzero uncertainty"""
        return [tuple(int(i) for i in idx) for idx in np.argwhere(self.uncertainty > 0.0)]


def cell_fraction(cell, max_depth: int = 6) -> VolumeFraction:
    """
    Exact volume fraction of a 2D or 3D cell.

    :param cell: corners object or array
    :param int max_depth: subdivision depth for ambiguous 3D cells
    :return VolumeFraction: alpha
    """
    arr = interp.corner_array(cell)
    if arr.ndim == 2:
        return cell_area_2d(arr)
    return cell_volume_3d(arr, max_depth)


def _worker_count(threads: int) -> int:
    return threads if threads and threads > 0 else (os.cpu_count() or 1)


def compute_fractions(grid: ScalarGrid, method: str = "analytic", threads: int = 0,
                      subdivision_depth: int = 6, oracle_depth: int = 12) -> FractionField:
    """
    Volume fraction of every cell of a grid. Cells without a sign change are set
    directly; cut cells are mapped in parallel and collected in cell order.

    :param ScalarGrid grid: grid
    :param str method: analytic, linear or oracle
    :param int threads: worker threads, 0 for one per CPU
    :param int subdivision_depth: subdivision depth for ambiguous 3D cells
    :param int oracle_depth: subdivision depth of the oracle method
    :return FractionField: fractions
    """
    if method not in METHODS:
        raise ValueError("unknown method '{}', expected one of {}".format(method, ", ".join(METHODS)))

    corners = grid.cell_corners()
    axes = tuple(range(grid.dim, 2 * grid.dim))
    full = (corners >= 0.0).all(axis=axes)
    cut = np.argwhere((corners >= 0.0).any(axis=axes) & ~full)

    alpha = full.astype(float)
    uncertainty = np.zeros(grid.cell_shape)
    lo = hi = None
    if method == "oracle":
        lo, hi = alpha.copy(), alpha.copy()

    def evaluate(index):
        cell = corners[tuple(index)]
        if method == "analytic":
            try:
                return cell_fraction(cell, subdivision_depth)
            except Unresolved:
                low, high = certified_bounds(cell, oracle_depth)
                return VolumeFraction(0.5 * (low + high), high - low)
        if method == "linear":
            return linear_baseline(cell)
        return certified_bounds(cell, oracle_depth)

    with ThreadPoolExecutor(max_workers=_worker_count(threads)) as pool:
        results = list(pool.map(evaluate, cut))

    for index, result in zip(cut, results):
        index = tuple(index)
        if method == "oracle":
            lo[index], hi[index] = result
            alpha[index] = 0.5 * (result[0] + result[1])
            uncertainty[index] = result[1] - result[0]
        else:
            alpha[index] = result.alpha
            uncertainty[index] = result.uncertainty

    return FractionField(alpha, uncertainty, lo, hi)
