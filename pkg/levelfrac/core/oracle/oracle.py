import itertools
import numpy as np
from scipy.spatial import ConvexHull, QhullError
from levelfrac.core.analytic.analytic2d import VolumeFraction, clamp_unit
import levelfrac.core.interp.interp as interp

# Cells classified per vectorized step
CHUNK = 1 << 16

# Kuhn triangulation of the unit cube: one tetrahedron per axis order
KUHN_TETRAHEDRA = tuple(
    tuple(tuple(int(ax in order[:k]) for ax in range(3)) for k in range(4))
    for order in itertools.permutations(range(3)))

# Counter-clockwise walk around the unit square
SQUARE_WALK = ((0, 0), (1, 0), (1, 1), (0, 1))


def _split_cells(cells: np.ndarray) -> np.ndarray:
    """
    Exact restriction of each cell's multilinear interpolant to its 2^d children.

    :param np.ndarray cells: shape (m, 2, ..., 2)
    :return np.ndarray: shape (m * 2^d, 2, ..., 2)
    """
    dim = cells.ndim - 1
    nodes = cells
    for axis in range(1, dim + 1):
        lo, hi = nodes.take(0, axis=axis), nodes.take(1, axis=axis)
        nodes = np.stack([lo, 0.5 * (lo + hi), hi], axis=axis)

    children = [nodes[(slice(None),) + tuple(slice(o, o + 2) for o in offset)]
                for offset in itertools.product((0, 1), repeat=dim)]
    return np.concatenate(children, axis=0)


def certified_bounds(cell, max_depth: int) -> tuple:
    """
    Rigorous bounds on the fraction of a cell where the multilinear interpolant is >= 0.

    A multilinear interpolant takes its extrema on a (sub)cell at the corners, so
    subcells with all corners >= 0 are certainly inside and those with all corners
    <= 0 are certainly outside. Mixed subcells are split until max_depth, where they
    only count toward the upper bound.

    :param cell: corners object or array (2D or 3D)
    :param int max_depth: number of subdivision levels
    :return tuple: (lo, hi)
    """
    arr = interp.corner_array(cell)
    dim = arr.ndim
    reduce_axes = tuple(range(1, dim + 1))
    lo = hi = 0.0

    stack = [(arr[np.newaxis], 0)]
    while stack:
        cells, depth = stack.pop()
        volume = 0.5 ** (dim * depth)
        full = (cells >= 0.0).all(axis=reduce_axes)
        empty = (cells <= 0.0).all(axis=reduce_axes) & ~full
        mixed = cells[~(full | empty)]

        lo += volume * np.count_nonzero(full)
        hi += volume * np.count_nonzero(full)
        if not len(mixed):
            continue
        if depth >= max_depth:
            hi += volume * len(mixed)
            continue

        children = _split_cells(mixed)
        for start in range(0, len(children), CHUNK):
            stack.append((children[start:start + CHUNK], depth + 1))

    return lo, hi


def _edge_root(p_a, p_b, phi_a: float, phi_b: float) -> np.ndarray:
    t = phi_a / (phi_a - phi_b)
    return np.asarray(p_a, dtype=float) + t * (np.asarray(p_b, dtype=float) - np.asarray(p_a, dtype=float))


def _shoelace(points: list) -> float:
    if len(points) < 3:
        return 0.0
    x, y = np.array(points).T
    return 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def _linear_area_2d(arr: np.ndarray) -> float:
    polygon, crossings = [], 0
    for n, corner in enumerate(SQUARE_WALK):
        nxt = SQUARE_WALK[(n + 1) % 4]
        if interp.is_positive(arr[corner]):
            polygon.append(corner)
        if interp.is_positive(arr[corner]) != interp.is_positive(arr[nxt]):
            polygon.append(tuple(_edge_root(corner, nxt, arr[corner], arr[nxt])))
            crossings += 1

    if crossings == 4 and arr.mean() < 0.0:
        # saddle with the positive phase split in two triangles
        area = 0.0
        for n, corner in enumerate(SQUARE_WALK):
            if not interp.is_positive(arr[corner]):
                continue
            prev, nxt = SQUARE_WALK[n - 1], SQUARE_WALK[(n + 1) % 4]
            area += _shoelace([corner,
                               tuple(_edge_root(corner, nxt, arr[corner], arr[nxt])),
                               tuple(_edge_root(corner, prev, arr[corner], arr[prev]))])
        return area
    return _shoelace(polygon)


def _single_vertex_fraction(phi: np.ndarray, apex: int) -> float:
    """Fraction of a tetrahedron cut off at one vertex by the linear interpolant"""
    others = [phi[j] for j in range(4) if j != apex]
    return phi[apex] ** 3 / np.prod([phi[apex] - v for v in others])


def _linear_tetra_volume(points: np.ndarray, phi: np.ndarray) -> float:
    positive = phi >= 0.0
    count = int(positive.sum())
    if count == 0:
        return 0.0
    if count == 4:
        return 1.0 / 6.0
    if count == 1:
        return _single_vertex_fraction(phi, int(np.argmax(positive))) / 6.0
    if count == 3:
        return (1.0 - _single_vertex_fraction(-phi, int(np.argmin(positive)))) / 6.0

    hull_points = [points[j] for j in range(4) if positive[j]]
    for j, k in itertools.product(range(4), repeat=2):
        if positive[j] and not positive[k]:
            hull_points.append(_edge_root(points[j], points[k], phi[j], phi[k]))
    try:
        return ConvexHull(np.array(hull_points)).volume
    except QhullError:
        return 0.0


def linear_baseline(cell) -> VolumeFraction:
    """
    First-order volume fraction from the piecewise-linear interpolant: marching
    squares polygon in 2D, six Kuhn tetrahedra clipped by their linear interpolant in 3D.

    :param cell: corners object or array (2D or 3D)
    :return VolumeFraction: alpha
    """
    arr = interp.corner_array(cell)
    if not interp.has_sign_change(arr):
        return VolumeFraction(1.0 if interp.is_positive(arr.flat[0]) else 0.0)

    if arr.ndim == 2:
        return VolumeFraction(clamp_unit(_linear_area_2d(arr)))

    total = 0.0
    for tet in KUHN_TETRAHEDRA:
        points = np.array(tet, dtype=float)
        total += _linear_tetra_volume(points, np.array([arr[v] for v in tet]))
    return VolumeFraction(clamp_unit(total))
