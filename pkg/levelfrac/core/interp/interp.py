import itertools
import numpy as np
from dataclasses import dataclass, astuple
from levelfrac.core.exceptions.exceptions import NoInterface, DegenerateEdge

# Lengths are clamped to [LENGTH_EPS, 1]
LENGTH_EPS = 1e-14
# Relative size of the nudge applied to corners that are exactly zero
ZERO_NUDGE = 1e-14


# DOMAIN TYPES
@dataclass(frozen=True)
class CellCorners2D:
    """Level-set values at the corners (i_x, i_y) of the unit square"""
    phi00: float
    phi10: float
    phi01: float
    phi11: float

    @classmethod
    def from_array(cls, arr) -> "CellCorners2D":
        """
        Build corners from an array indexed [i_x, i_y].

        :param arr: 2x2 array-like
        :return CellCorners2D: corners
        """
        a = np.asarray(arr, dtype=float)
        return cls(float(a[0, 0]), float(a[1, 0]), float(a[0, 1]), float(a[1, 1]))

    def as_array(self) -> np.ndarray:
        """
        Return corners as a 2x2 array indexed [i_x, i_y].

        :return np.ndarray: corner array
        """
        return np.array([[self.phi00, self.phi01], [self.phi10, self.phi11]], dtype=float)

    def __neg__(self) -> "CellCorners2D":
        return CellCorners2D(*(-v for v in astuple(self)))


@dataclass(frozen=True)
class CellCorners3D:
    """Level-set values at the corners (i_x, i_y, i_z) of the unit cube"""
    phi000: float
    phi100: float
    phi010: float
    phi110: float
    phi001: float
    phi101: float
    phi011: float
    phi111: float

    @classmethod
    def from_array(cls, arr) -> "CellCorners3D":
        """
        Build corners from an array indexed [i_x, i_y, i_z].

        :param arr: 2x2x2 array-like
        :return CellCorners3D: corners
        """
        a = np.asarray(arr, dtype=float)
        return cls(*(float(a[ix, iy, iz]) for iz, iy, ix in itertools.product((0, 1), repeat=3)))

    def as_array(self) -> np.ndarray:
        """
        Return corners as a 2x2x2 array indexed [i_x, i_y, i_z].

        :return np.ndarray: corner array
        """
        a = np.empty((2, 2, 2))
        for v, (iz, iy, ix) in zip(astuple(self), itertools.product((0, 1), repeat=3)):
            a[ix, iy, iz] = v
        return a

    def __neg__(self) -> "CellCorners3D":
        return CellCorners3D(*(-v for v in astuple(self)))


@dataclass(frozen=True)
class BilinearCoeffs:
    """phi(x, y) = beta0 + beta1 x + beta2 y + beta3 xy"""
    beta0: float
    beta1: float
    beta2: float
    beta3: float


@dataclass(frozen=True)
class TrilinearCoeffs:
    """phi = beta0 + beta1 x + beta2 y + beta3 z + beta4 xy + beta5 yz + beta6 xz + beta7 xyz"""
    beta0: float
    beta1: float
    beta2: float
    beta3: float
    beta4: float
    beta5: float
    beta6: float
    beta7: float


@dataclass(frozen=True)
class LocalFrame:
    """
    Origin corner, axis permutation and edge-intersection lengths of a cell.

    axis_perm lists the original axis index (0=x, 1=y, 2=z) assigned to each local
    axis: (eta, zeta) in 2D, (xi, eta, zeta) in 3D.
    """
    origin: tuple
    axis_perm: tuple
    lengths: tuple

    def local_origin(self) -> tuple:
        """
        Origin coordinates expressed along the local axes.

        :return tuple: origin index per local axis
        """
        return tuple(self.origin[ax] for ax in self.axis_perm)


@dataclass(frozen=True)
class RationalCoeffs2D:
    """zeta(eta) = (-a eta - b) / (c eta + d)"""
    a: float
    b: float
    c: float
    d: float

    def zeta(self, eta: float) -> float:
        return (-self.a * eta - self.b) / (self.c * eta + self.d)


@dataclass(frozen=True)
class RationalCoeffs3D:
    """zeta(xi, eta) = (-xi (a eta + b) - c eta - d) / (xi (e eta + f) + g eta + h)"""
    a: float
    b: float
    c: float
    d: float
    e: float
    f: float
    g: float
    h: float

    def zeta(self, xi: float, eta: float) -> float:
        num = -xi * (self.a * eta + self.b) - self.c * eta - self.d
        den = xi * (self.e * eta + self.f) + self.g * eta + self.h
        return num / den

    def slice(self, xi: float) -> RationalCoeffs2D:
        """
        Restrict to the plane of constant xi.

        :param float xi: slice position
        :return RationalCoeffs2D: rational interface of the slice
        """
        return RationalCoeffs2D(self.a * xi + self.c, self.b * xi + self.d,
                                self.e * xi + self.g, self.f * xi + self.h)


# HELPERS
def is_positive(value: float) -> bool:
    """
    Sign test used everywhere: zero counts as positive.

    :param float value: level-set value
    :return bool: True if value >= 0
    """
    return value >= 0.0


def corner_array(cell) -> np.ndarray:
    """
    Return the corner array of a CellCorners2D/3D or pass an array through.

    :param cell: corners object or array
    :return np.ndarray: array indexed [i_x, i_y(, i_z)]
    """
    if isinstance(cell, (CellCorners2D, CellCorners3D)):
        return cell.as_array()
    arr = np.asarray(cell, dtype=float)
    if arr.shape not in ((2, 2), (2, 2, 2)):
        raise ValueError("cell corners must have shape (2, 2) or (2, 2, 2), got {}".format(arr.shape))
    return arr


def nudge_zero_corners(arr: np.ndarray) -> np.ndarray:
    """
    Return a copy where corners equal to zero are moved to a tiny positive value.

    :param np.ndarray arr: corner array
    :return np.ndarray: corner array without exact zeros
    """
    arr = np.array(arr, dtype=float)
    zeros = arr == 0.0
    if zeros.any():
        scale = np.abs(arr).max()
        arr[zeros] = ZERO_NUDGE * (scale if scale > 0 else 1.0)
    return arr


def has_sign_change(arr: np.ndarray) -> bool:
    """
    True if corners are not all of the same sign.

    :param np.ndarray arr: corner array
    :return bool: sign change flag
    """
    pos = arr >= 0.0
    return bool(pos.any() and not pos.all())


# OPERATIONS
def bilinear_coeffs(cell) -> BilinearCoeffs:
    """
    Coefficients of the bilinear interpolant of a 2D cell.

    :param cell: CellCorners2D or 2x2 array
    :return BilinearCoeffs: beta0..beta3
    """
    p = corner_array(cell)
    p00, p10, p01, p11 = p[0, 0], p[1, 0], p[0, 1], p[1, 1]
    return BilinearCoeffs(float(p00), float(p10 - p00), float(p01 - p00), float(p00 + p11 - p01 - p10))


def trilinear_coeffs(cell) -> TrilinearCoeffs:
    """
    Coefficients of the trilinear interpolant of a 3D cell.

    :param cell: CellCorners3D or 2x2x2 array
    :return TrilinearCoeffs: beta0..beta7
    """
    p = corner_array(cell)
    p000, p100, p010, p001 = p[0, 0, 0], p[1, 0, 0], p[0, 1, 0], p[0, 0, 1]
    p110, p011, p101, p111 = p[1, 1, 0], p[0, 1, 1], p[1, 0, 1], p[1, 1, 1]
    return TrilinearCoeffs(
        float(p000),
        float(p100 - p000),
        float(p010 - p000),
        float(p001 - p000),
        float(p110 - p100 - p010 + p000),
        float(p011 - p010 - p001 + p000),
        float(p101 - p100 - p001 + p000),
        float(p111 - p110 - p101 + p100 - p011 + p010 + p001 - p000))


def evaluate(coeffs, point) -> float:
    """
    Evaluate a bilinear or trilinear interpolant.

    :param coeffs: BilinearCoeffs or TrilinearCoeffs
    :param point: (x, y) or (x, y, z) in the unit cell
    :return float: level-set value
    """
    if isinstance(coeffs, BilinearCoeffs):
        x, y = point
        return coeffs.beta0 + coeffs.beta1 * x + coeffs.beta2 * y + coeffs.beta3 * x * y
    x, y, z = point
    c = coeffs
    return (c.beta0 + c.beta1 * x + c.beta2 * y + c.beta3 * z
            + c.beta4 * x * y + c.beta5 * y * z + c.beta6 * x * z + c.beta7 * x * y * z)


def select_origin(cell) -> tuple:
    """
    Corner with the largest number of edge neighbours of opposite sign.
    Ties go to the lexicographically smallest corner index.

    :param cell: corners object or array
    :return tuple: origin corner index
    """
    arr = corner_array(cell)
    dim = arr.ndim
    best, best_count = None, 0
    for corner in itertools.product((0, 1), repeat=dim):
        sign = is_positive(arr[corner])
        count = 0
        for axis in range(dim):
            other = list(corner)
            other[axis] = 1 - other[axis]
            if is_positive(arr[tuple(other)]) != sign:
                count += 1
        if count > best_count:
            best, best_count = corner, count

    if best is None:
        raise NoInterface("no edge of the cell changes sign")
    return best


def _edge_length(phi_origin: float, phi_other: float, num: float, den: float, i_axis: int) -> float:
    """
    Distance from the origin to the root of the linear edge restriction num + den * t.

    :return float: length in [LENGTH_EPS, 1]
    """
    if phi_origin == 0.0 and phi_other == 0.0:
        raise DegenerateEdge("edge restriction is identically zero")
    if is_positive(phi_origin) == is_positive(phi_other) or den == 0.0:
        return 1.0
    root = -num / den
    return min(max(abs(root - i_axis), LENGTH_EPS), 1.0)


def edge_lengths_2d(coeffs: BilinearCoeffs, origin: tuple) -> tuple:
    """
    Intersection lengths along the x and y edges leaving the origin corner.

    :param BilinearCoeffs coeffs: interpolant
    :param tuple origin: (i_x, i_y)
    :return tuple: (l_x, l_y)
    """
    ix, iy = origin
    b = coeffs
    phi_o = evaluate(b, (ix, iy))
    l_x = _edge_length(phi_o, evaluate(b, (1 - ix, iy)), b.beta2 * iy + b.beta0, b.beta3 * iy + b.beta1, ix)
    l_y = _edge_length(phi_o, evaluate(b, (ix, 1 - iy)), b.beta1 * ix + b.beta0, b.beta3 * ix + b.beta2, iy)
    return l_x, l_y


def edge_lengths_3d(coeffs: TrilinearCoeffs, origin: tuple) -> tuple:
    """
    Intersection lengths along the x, y and z edges leaving the origin corner.

    :param TrilinearCoeffs coeffs: interpolant
    :param tuple origin: (i_x, i_y, i_z)
    :return tuple: (l_x, l_y, l_z)
    """
    ix, iy, iz = origin
    b = coeffs
    phi_o = evaluate(b, (ix, iy, iz))
    l_x = _edge_length(phi_o, evaluate(b, (1 - ix, iy, iz)),
                       (b.beta5 * iy + b.beta3) * iz + b.beta2 * iy + b.beta0,
                       (b.beta7 * iy + b.beta6) * iz + b.beta4 * iy + b.beta1, ix)
    l_y = _edge_length(phi_o, evaluate(b, (ix, 1 - iy, iz)),
                       (b.beta6 * ix + b.beta3) * iz + b.beta1 * ix + b.beta0,
                       (b.beta7 * ix + b.beta5) * iz + b.beta4 * ix + b.beta2, iy)
    l_z = _edge_length(phi_o, evaluate(b, (ix, iy, 1 - iz)),
                       (b.beta4 * ix + b.beta2) * iy + b.beta1 * ix + b.beta0,
                       (b.beta7 * ix + b.beta5) * iy + b.beta6 * ix + b.beta3, iz)
    return l_x, l_y, l_z


def rational_coeffs(arr: np.ndarray, axis_perm: tuple):
    """
    Rational form of the interface in the local axes given by axis_perm.

    :param np.ndarray arr: corner array indexed by the original axes
    :param tuple axis_perm: original axis of each local axis
    :return RationalCoeffs2D|RationalCoeffs3D: interface coefficients
    """
    local = np.transpose(arr, axis_perm)
    if local.ndim == 2:
        b = bilinear_coeffs(local)
        return RationalCoeffs2D(b.beta1, b.beta0, b.beta3, b.beta2)
    b = trilinear_coeffs(local)
    return RationalCoeffs3D(b.beta4, b.beta1, b.beta2, b.beta0, b.beta7, b.beta6, b.beta5, b.beta3)


def axes_by_length(lengths: tuple) -> tuple:
    """
    Axis indices sorted by descending length, ties kept in x, y, z order.

    :param tuple lengths: per-axis lengths
    :return tuple: axis permutation
    """
    return tuple(sorted(range(len(lengths)), key=lambda ax: -lengths[ax]))


def build_frame(cell) -> tuple:
    """
    Local frame and rational interface coefficients of a cut cell.

    :param cell: corners object or array
    :return tuple: (LocalFrame, RationalCoeffs2D|RationalCoeffs3D)
    """
    arr = corner_array(cell)
    origin = select_origin(arr)
    if arr.ndim == 2:
        lengths = edge_lengths_2d(bilinear_coeffs(arr), origin)
    else:
        lengths = edge_lengths_3d(trilinear_coeffs(arr), origin)
    axis_perm = axes_by_length(lengths)
    frame = LocalFrame(origin=tuple(int(i) for i in origin), axis_perm=axis_perm, lengths=tuple(lengths))
    return frame, rational_coeffs(arr, axis_perm)
