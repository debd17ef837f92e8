from dataclasses import dataclass
from levelfrac.core.exceptions.exceptions import PoleInRange, Unresolved, DegenerateEdge
from levelfrac.core.special.special import log1p_remainder
import levelfrac.core.interp.interp as interp

# Relative saddle value below which a saddle cell is treated as two crossing lines
SADDLE_EPS = 1e-14


@dataclass(frozen=True)
class VolumeFraction:
    """Fraction of a unit cell where the interpolant is >= 0"""
    alpha: float
    uncertainty: float = 0.0

    def __float__(self) -> float:
        return self.alpha


def clamp_unit(value: float) -> float:
    return min(max(value, 0.0), 1.0)


def integrate_rational_2d(rc: interp.RationalCoeffs2D, eta0: float, eta1: float, i_zeta: int) -> float:
    """
    Area between the line zeta = i_zeta and the curve zeta(eta) = (-a eta - b)/(c eta + d)
    over [eta0, eta1].

    The closed form (ad - bc) log|c eta + d| / c^2 - a eta / c is evaluated as
    -dEta (a eta0 + b) / D0 + (bc - ad) dEta^2 / D0^2 * r(x), r(x) = (x - log1p x) / x^2,
    x = c dEta / D0, which stays accurate as c -> 0 (r(0) = 1/2 is the polynomial limit).

    :param RationalCoeffs2D rc: interface coefficients
    :param float eta0: lower bound
    :param float eta1: upper bound
    :param int i_zeta: zeta coordinate of the origin corner (0 or 1)
    :return float: partial area
    """
    delta = eta1 - eta0
    if delta == 0.0:
        return 0.0

    den0 = rc.c * eta0 + rc.d
    den1 = rc.c * eta1 + rc.d
    if den0 == 0.0 or den1 == 0.0 or (den0 > 0.0) != (den1 > 0.0):
        raise PoleInRange("denominator of zeta(eta) vanishes in [{}, {}]".format(eta0, eta1))

    x = rc.c * delta / den0
    integral = -delta * (rc.a * eta0 + rc.b) / den0 \
        + (rc.b * rc.c - rc.a * rc.d) * (delta / den0) ** 2 * log1p_remainder(x)

    return (1 - 2 * i_zeta) * integral + i_zeta * delta


def corner_region_area(rc: interp.RationalCoeffs2D, frame: interp.LocalFrame) -> float:
    """
    Area of the region bounded by the interface and the origin corner's zeta edge,
    over the eta range between the origin and the eta-edge intersection.

    :param RationalCoeffs2D rc: interface in the frame's axes
    :param LocalFrame frame: local frame
    :return float: area of the origin's side
    """
    i_eta, i_zeta = frame.local_origin()
    l_eta = frame.lengths[frame.axis_perm[0]]
    root = i_eta + (1 - 2 * i_eta) * l_eta
    return integrate_rational_2d(rc, min(i_eta, root), max(i_eta, root), i_zeta)


def crossing_edge_count_2d(arr) -> int:
    """
    Number of the 4 cell edges whose end values change sign.

    :param arr: 2x2 corner array
    :return int: crossing edge count
    """
    edges = (((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 0), (0, 1)), ((1, 0), (1, 1)))
    return sum(1 for p, q in edges if interp.is_positive(arr[p]) != interp.is_positive(arr[q]))


def _lobe_area(arr, coeffs: interp.BilinearCoeffs, corner: tuple) -> float:
    lengths = interp.edge_lengths_2d(coeffs, corner)
    axis_perm = interp.axes_by_length(lengths)
    frame = interp.LocalFrame(origin=corner, axis_perm=axis_perm, lengths=lengths)
    return corner_region_area(interp.rational_coeffs(arr, axis_perm), frame)


def saddle_area_2d(arr) -> float:
    """
    Fraction >= 0 of a cell whose four edges all change sign.

    The two hyperbola branches cut off one lobe at each corner of the phase the saddle
    point does not belong to; those lobes are integrated separately.

    :param arr: 2x2 corner array without exact zeros
    :return float: alpha
    """
    b = interp.bilinear_coeffs(arr)
    x_s, y_s = -b.beta2 / b.beta3, -b.beta1 / b.beta3
    saddle_value = b.beta0 - b.beta1 * b.beta2 / b.beta3
    corners = ((0, 0), (1, 0), (0, 1), (1, 1))

    if abs(saddle_value) <= SADDLE_EPS * abs(arr).max():
        # Two straight lines through the saddle point
        return sum(abs(x_s - c[0]) * abs(y_s - c[1]) for c in corners if interp.is_positive(arr[c]))

    if interp.is_positive(saddle_value):
        lobes = [c for c in corners if not interp.is_positive(arr[c])]
        return 1.0 - sum(_lobe_area(arr, b, c) for c in lobes)

    lobes = [c for c in corners if interp.is_positive(arr[c])]
    return sum(_lobe_area(arr, b, c) for c in lobes)


def cell_area_2d(cell) -> VolumeFraction:
    """
    Exact fraction of a 2D cell where the bilinear interpolant is >= 0.

    :param cell: CellCorners2D or 2x2 array
    :return VolumeFraction: alpha
    """
    arr = interp.nudge_zero_corners(interp.corner_array(cell))
    if not interp.has_sign_change(arr):
        return VolumeFraction(1.0 if interp.is_positive(arr[0, 0]) else 0.0)

    try:
        if crossing_edge_count_2d(arr) == 4:
            return VolumeFraction(clamp_unit(saddle_area_2d(arr)))

        frame, rc = interp.build_frame(arr)
        area = corner_region_area(rc, frame)
        if not interp.is_positive(arr[frame.origin]):
            area = 1.0 - area
        return VolumeFraction(clamp_unit(area))

    except (DegenerateEdge, PoleInRange) as e:
        raise Unresolved("2D cell {} could not be resolved: {}".format(arr.tolist(), e.msg))
