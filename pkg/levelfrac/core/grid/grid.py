import numpy as np
from levelfrac.core.exceptions.exceptions import NotDivisible, DimensionMismatch


class ScalarGrid:
    """
    Node values of a level-set field on the uniform grid of [0, 1]^dim, indexed [i, j(, k)].

    Grids are immutable after construction.
    """

    def __init__(self, values, h: float = None):
        """
        Initialize grid.

        :param values: node values indexed [i, j(, k)]
        :param float h: node spacing, defaults to 1 / (n_x - 1)
        """
        values = np.array(values, dtype=float)
        if values.ndim not in (2, 3):
            raise DimensionMismatch("grids are 2D or 3D, got {} axes".format(values.ndim))
        if min(values.shape) < 2:
            raise DimensionMismatch("every axis needs at least 2 nodes, got {}".format(values.shape))
        if not np.isfinite(values).all():
            raise ValueError("grid values must be finite")

        self.h = float(h) if h is not None else 1.0 / (values.shape[0] - 1)
        if self.h <= 0.0:
            raise ValueError("grid spacing must be positive, got {}".format(self.h))
        values.flags.writeable = False
        self.values = values

    def __repr__(self) -> str:
        return "ScalarGrid(extents={}, h={})".format(self.extents, self.h)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarGrid):
            return NotImplemented
        return self.h == other.h and self.values.shape == other.values.shape \
            and bool(np.array_equal(self.values, other.values))

    @property
    def dim(self) -> int:
        return self.values.ndim

    @property
    def extents(self) -> tuple:
        return self.values.shape

    @property
    def cell_shape(self) -> tuple:
        """Number of cells per axis"""
        return tuple(n - 1 for n in self.values.shape)

    def corners(self, index: tuple) -> np.ndarray:
        """
        Corner values of one cell.

        :param tuple index: cell index (i, j(, k))
        :return np.ndarray: 2x2(x2) array indexed [i_x, i_y(, i_z)]
        """
        return self.values[tuple(slice(i, i + 2) for i in index)]

    def cell_corners(self) -> np.ndarray:
        """
        Corner values of every cell.

        :return np.ndarray: shape cell_shape + (2,) * dim
        """
        windows = np.lib.stride_tricks.sliding_window_view(self.values, (2,) * self.dim)
        return windows


def _refine_axis(values: np.ndarray, axis: int) -> np.ndarray:
    moved = np.moveaxis(values, axis, 0)
    out = np.empty((2 * moved.shape[0] - 1,) + moved.shape[1:])
    out[0::2] = moved
    out[1::2] = 0.5 * (moved[:-1] + moved[1:])
    return np.moveaxis(out, 0, axis)


def refine_values(values: np.ndarray, levels: int = 1) -> np.ndarray:
    """
    Insert the multilinear interpolant at the midpoints of every node interval.

    Sequential midpoint insertion along each axis reproduces the tensor-product
    interpolant, so existing nodes are carried over exactly.

    :param np.ndarray values: node values
    :param int levels: refinement levels
    :return np.ndarray: refined node values
    """
    out = np.asarray(values, dtype=float)
    for _ in range(levels):
        for axis in range(out.ndim):
            out = _refine_axis(out, axis)
    return out


def refine(grid: ScalarGrid, levels: int = 1) -> ScalarGrid:
    """
    Refine a grid: each level halves the spacing.

    :param ScalarGrid grid: grid
    :param int levels: refinement levels (0 returns a copy)
    :return ScalarGrid: refined grid
    """
    if levels < 0:
        raise ValueError("levels must be >= 0, got {}".format(levels))
    return ScalarGrid(refine_values(grid.values, levels), grid.h / 2 ** levels)


def coarsen(grid: ScalarGrid, levels: int = 1) -> ScalarGrid:
    """
    Coarsen a grid by keeping every 2^levels-th node.

    :param ScalarGrid grid: grid
    :param int levels: coarsening levels
    :return ScalarGrid: coarse grid
    """
    if levels < 0:
        raise ValueError("levels must be >= 0, got {}".format(levels))
    step = 2 ** levels
    for n in grid.extents:
        if (n - 1) % step:
            raise NotDivisible("{} node intervals are not divisible by {}".format(n - 1, step))
    return ScalarGrid(grid.values[(slice(None, None, step),) * grid.dim], grid.h * step)
