"""
Topology classification and elementary splitting of 3D cut cells.

A cut cell is sliced along its xi axis at every root of the four xi-parallel edges and
at every xi where the bilinear slice changes saddle sign. Inside each slab the
2D topology of the slice is fixed, so the slab is one or two elementary pieces
(corner pieces bounded by the curve eta = q(xi), or strips spanning eta).
"""
import itertools
import numpy as np
from dataclasses import dataclass, field
from numpy.polynomial import polynomial as poly
from numpy.polynomial.legendre import leggauss
from scipy import integrate
from levelfrac.core.exceptions.exceptions import NotSplittable, DegenerateEdge, PoleInRange, DegenerateDenominator, \
    NoInterface, Unresolved
from levelfrac.core.analytic.analytic2d import VolumeFraction, crossing_edge_count_2d, clamp_unit, cell_area_2d
from levelfrac.core.analytic.analytic3d import IntegrationDomain, elementary_volume_3d
from levelfrac.core.oracle.oracle import certified_bounds
import levelfrac.core.interp.interp as interp

EMPTY = "Empty"
FULL = "Full"
TYPE_I = "TypeI"
TYPE_II = "TypeII"
TYPE_III = "TypeIII"
COMPOSITE = "Composite"
AMBIGUOUS = "Ambiguous"

# Relative saddle value (scaled by the squared corner range) treated as zero
AMBIGUITY_EPS = 1e-12
# Slabs thinner than this take their width times the exact area of the middle slice
MIN_SLAB = 1e-10
# Oracle depth used for leaves that are still ambiguous at the subdivision floor
FLOOR_ORACLE_DEPTH = 8
# Gauss-Legendre rule of the per-slab cross-check, and the accepted gap per unit width
CHECK_RULE = leggauss(8)
CHECK_TOL = 1e-6

CORNERS_3D = tuple(itertools.product((0, 1), repeat=3))
EDGES_3D = tuple((c, tuple(c[a] if a != ax else 1 for a in range(3)))
                 for ax in range(3) for c in CORNERS_3D if c[ax] == 0)


@dataclass(frozen=True)
class CellTopology:
    """Interface topology of a 3D cell"""
    kind: str
    sign_pattern: tuple
    crossing_edges: tuple
    xi_axis: int = 0


@dataclass(frozen=True)
class Piece:
    """
    Contribution offset + sign * volume(domain) of one piece. Pieces without a domain
    are slabs the interface does not cross.
    """
    offset: float
    sign: int = 0
    domain: IntegrationDomain = None
    rc: interp.RationalCoeffs3D = None

    def contribution(self) -> float:
        if self.domain is None:
            return self.offset
        return self.offset + self.sign * elementary_volume_3d(self.rc, self.domain)


@dataclass
class Slab:
    """
    Pieces of one xi-range. Their sum is cross-checked against a Gauss-Legendre
    estimate of the exact 2D area of the cell's slices, and replaced by adaptive
    quadrature of those areas when the two disagree.
    """
    xi0: float
    xi1: float
    pieces: list
    local: np.ndarray = field(default=None, repr=False)

    def section(self, xi: float) -> float:
        return _section_area(self.local, xi)

    def volume(self) -> float:
        if self.local is None or all(p.domain is None for p in self.pieces):
            return sum(p.contribution() for p in self.pieces)
        try:
            closed = sum(p.contribution() for p in self.pieces)
        except (PoleInRange, DegenerateDenominator):
            closed = float("nan")

        width = self.xi1 - self.xi0
        nodes, weights = CHECK_RULE
        estimate = 0.5 * width * sum(w * self.section(self.xi0 + 0.5 * width * (x + 1.0))
                                     for x, w in zip(nodes, weights))
        if abs(closed - estimate) <= CHECK_TOL * width:
            return closed
        result = integrate.quad(self.section, self.xi0, self.xi1, epsabs=1e-14, epsrel=1e-12, limit=200,
                                full_output=1)
        return result[0]


@dataclass
class PieceList:
    """Ordered slabs whose pieces' contributions sum to the cell's volume fraction"""
    xi_axis: int
    slabs: list = field(default_factory=list)

    @property
    def pieces(self) -> list:
        return [p for slab in self.slabs for p in slab.pieces]

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def total(self) -> float:
        return sum(slab.volume() for slab in self.slabs)


# HELPERS
def _local_array(arr: np.ndarray, xi_axis: int) -> tuple:
    """Corner array with xi first and the other two axes in x, y, z order"""
    others = tuple(ax for ax in range(3) if ax != xi_axis)
    return np.transpose(arr, (xi_axis,) + others), others


def _slice_at(local: np.ndarray, xi: float) -> np.ndarray:
    return (1.0 - xi) * local[0] + xi * local[1]


def _section_area(local: np.ndarray, xi: float) -> float:
    """Exact fraction >= 0 of the slice at xi"""
    section = _slice_at(local, xi)
    try:
        return cell_area_2d(section).alpha
    except Unresolved:
        lo, hi = certified_bounds(section, FLOOR_ORACLE_DEPTH)
        return 0.5 * (lo + hi)


def _saddle_poly(local: np.ndarray) -> np.ndarray:
    """
    Coefficients (ascending) of beta0 beta3 - beta1 beta2 of the slice at xi, a
    quadratic in xi whose roots are where the slice's saddle value changes sign.
    """
    b_lo = interp.bilinear_coeffs(local[0])
    b_hi = interp.bilinear_coeffs(local[1])
    lin = [np.array([lo, hi - lo]) for lo, hi in zip(
        (b_lo.beta0, b_lo.beta1, b_lo.beta2, b_lo.beta3), (b_hi.beta0, b_hi.beta1, b_hi.beta2, b_hi.beta3))]
    return poly.polysub(poly.polymul(lin[0], lin[3]), poly.polymul(lin[1], lin[2]))


def _face_is_ambiguous(face: np.ndarray) -> bool:
    if crossing_edge_count_2d(face) != 4:
        return False
    b = interp.bilinear_coeffs(face)
    scale = np.abs(face).max() ** 2
    return abs(b.beta0 * b.beta3 - b.beta1 * b.beta2) <= AMBIGUITY_EPS * scale


def _interior_is_ambiguous(local: np.ndarray) -> bool:
    """
    True when the slice saddle value vanishes identically, or touches zero without
    changing sign, on a slab whose slices have four crossings.
    """
    coeffs = _saddle_poly(local)
    scale = np.abs(local).max() ** 2
    if np.all(np.abs(coeffs) <= AMBIGUITY_EPS * scale):
        return any(crossing_edge_count_2d(_slice_at(local, xi)) == 4 for xi in (0.25, 0.5, 0.75))

    deriv = poly.polyder(coeffs)
    for root in poly.polyroots(poly.polytrim(coeffs, AMBIGUITY_EPS * scale)):
        if abs(root.imag) > 1e-9 or not 0.0 < root.real < 1.0:
            continue
        if crossing_edge_count_2d(_slice_at(local, root.real)) == 4 \
                and abs(poly.polyval(root.real, deriv)) <= 1e-8 * scale:
            return True
    return False


def choose_xi_axis(arr: np.ndarray) -> int:
    """
    Axis with the most sign-changing parallel edges, ties to x, y, z.

    :param np.ndarray arr: 2x2x2 corner array
    :return int: axis index
    """
    counts = [0, 0, 0]
    for p, q in EDGES_3D:
        if interp.is_positive(arr[p]) != interp.is_positive(arr[q]):
            counts[[a for a in range(3) if p[a] != q[a]][0]] += 1
    return max(range(3), key=lambda ax: (counts[ax], -ax))


def _minority_label(signs: np.ndarray) -> str:
    """Label of the sign pattern by its minority phase"""
    positive = [c for c in CORNERS_3D if signs[c]]
    negative = [c for c in CORNERS_3D if not signs[c]]
    minority = positive if len(positive) <= len(negative) else negative
    if len(minority) == 1:
        return TYPE_I
    if len(minority) == 2 and sum(a != b for a, b in zip(*minority)) == 1:
        return TYPE_II
    if len(minority) == 4 and any(len({c[ax] for c in minority}) == 1 for ax in range(3)):
        return TYPE_III
    return COMPOSITE


# OPERATIONS
def classify(cell) -> CellTopology:
    """
    Classify the interface topology of a 3D cell.

    :param cell: CellCorners3D or 2x2x2 array
    :return CellTopology: topology
    """
    arr = interp.nudge_zero_corners(interp.corner_array(cell))
    signs = arr >= 0.0
    crossing = tuple((p, q) for p, q in EDGES_3D if signs[p] != signs[q])
    pattern = tuple(bool(signs[c]) for c in CORNERS_3D)

    if not crossing:
        return CellTopology(FULL if signs.all() else EMPTY, pattern, crossing)

    xi_axis = choose_xi_axis(arr)
    faces = [arr.take(i, axis=ax) for ax in range(3) for i in (0, 1)]
    local, _ = _local_array(arr, xi_axis)
    if any(_face_is_ambiguous(f) for f in faces) or _interior_is_ambiguous(local):
        return CellTopology(AMBIGUOUS, pattern, crossing, xi_axis)

    return CellTopology(_minority_label(signs), pattern, crossing, xi_axis)


def _breakpoints(local: np.ndarray) -> list:
    points = {0.0, 1.0}
    for j, k in itertools.product((0, 1), repeat=2):
        lo, hi = local[0, j, k], local[1, j, k]
        if interp.is_positive(lo) != interp.is_positive(hi):
            points.add(float(lo / (lo - hi)))

    coeffs = poly.polytrim(_saddle_poly(local), AMBIGUITY_EPS * np.abs(local).max() ** 2)
    if len(coeffs) > 1:
        for root in poly.polyroots(coeffs):
            if abs(root.imag) <= 1e-12 and 0.0 < root.real < 1.0:
                points.add(float(root.real))
    return sorted(points)


def _corner_piece(arr, xi_axis, others, corner, lengths, xi0, xi1, sign, offset) -> Piece:
    """Corner (or strip) piece anchored at a slice corner with the slice's lengths"""
    perm2 = interp.axes_by_length(lengths)
    perm3 = (xi_axis, others[perm2[0]], others[perm2[1]])
    i_eta, i_zeta = corner[perm2[0]], corner[perm2[1]]
    rc = interp.rational_coeffs(arr, perm3)
    return Piece(offset, sign, IntegrationDomain(xi0, xi1, i_eta, i_zeta, curve=True), rc)


def _slab_pieces(arr, xi_axis, others, s2, xi0, xi1) -> list:
    width = xi1 - xi0
    if not interp.has_sign_change(s2):
        return [Piece(width if interp.is_positive(s2[0, 0]) else 0.0)]

    b = interp.bilinear_coeffs(s2)
    if crossing_edge_count_2d(s2) == 2:
        origin = interp.select_origin(s2)
        lengths = interp.edge_lengths_2d(b, origin)
        positive = interp.is_positive(s2[origin])
        piece = _corner_piece(arr, xi_axis, others, origin, lengths, xi0, xi1,
                              1 if positive else -1, 0.0 if positive else width)
        eta_axis = interp.axes_by_length(lengths)[0]
        flipped = list(origin)
        flipped[eta_axis] = 1 - flipped[eta_axis]
        if interp.is_positive(s2[tuple(flipped)]) == positive:
            # interface never meets the origin's eta edge: the piece spans eta
            dom = piece.domain
            piece = Piece(piece.offset, piece.sign,
                          IntegrationDomain(dom.xi0, dom.xi1, dom.i_eta, dom.i_zeta, curve=False), piece.rc)
        return [piece]

    saddle = b.beta0 * b.beta3 - b.beta1 * b.beta2
    if abs(saddle) <= AMBIGUITY_EPS * np.abs(s2).max() ** 2:
        raise NotSplittable("slice saddle value vanishes on [{}, {}]".format(xi0, xi1))
    # sign of the saddle point value is sign(saddle) / sign(beta3)
    saddle_positive = interp.is_positive(saddle / b.beta3)
    lobes = [c for c in itertools.product((0, 1), repeat=2) if interp.is_positive(s2[c]) != saddle_positive]
    sign = -1 if saddle_positive else 1
    pieces = []
    for n, corner in enumerate(lobes):
        offset = width if (saddle_positive and n == 0) else 0.0
        pieces.append(_corner_piece(arr, xi_axis, others, corner, interp.edge_lengths_2d(b, corner),
                                    xi0, xi1, sign, offset))
    return pieces


def split(cell, topo: CellTopology) -> PieceList:
    """
    Split a cut cell into elementary pieces along its xi axis.

    :param cell: CellCorners3D or 2x2x2 array
    :param CellTopology topo: topology from classify
    :return PieceList: pieces
    """
    if topo.kind in (EMPTY, FULL, AMBIGUOUS):
        raise NotSplittable("cell of kind {} cannot be split".format(topo.kind))

    arr = interp.nudge_zero_corners(interp.corner_array(cell))
    local, others = _local_array(arr, topo.xi_axis)
    points = _breakpoints(local)

    pieces = PieceList(topo.xi_axis)
    for xi0, xi1 in zip(points[:-1], points[1:]):
        mid = 0.5 * (xi0 + xi1)
        if xi1 - xi0 <= MIN_SLAB:
            # error at most the sliver width
            pieces.slabs.append(Slab(xi0, xi1, [Piece((xi1 - xi0) * _section_area(local, mid))]))
            continue
        s2 = interp.nudge_zero_corners(_slice_at(local, mid))
        try:
            slab = _slab_pieces(arr, topo.xi_axis, others, s2, xi0, xi1)
        except (DegenerateEdge, NoInterface) as e:
            raise NotSplittable(e.msg)
        pieces.slabs.append(Slab(xi0, xi1, slab, local))
    return pieces


def subdivide(cell) -> list:
    """
    Exact restriction of the multilinear interpolant to the 2^d half-size children.

    :param cell: corner array (2D or 3D)
    :return list: (child offset, child corner array) pairs
    """
    arr = interp.corner_array(cell)
    dim = arr.ndim
    coeffs = interp.bilinear_coeffs(arr) if dim == 2 else interp.trilinear_coeffs(arr)
    children = []
    for offset in itertools.product((0, 1), repeat=dim):
        child = np.empty((2,) * dim)
        for corner in itertools.product((0, 1), repeat=dim):
            point = tuple(0.5 * (o + c) for o, c in zip(offset, corner))
            child[corner] = interp.evaluate(coeffs, point)
        children.append((offset, child))
    return children


def resolve_by_subdivision(cell, max_depth: int = 6, oracle_depth: int = FLOOR_ORACLE_DEPTH) -> VolumeFraction:
    """
    Volume fraction of an ambiguous cell by recursive subdivision. Leaves still
    ambiguous at max_depth use the oracle midpoint, and their uncertain volume is
    reported as uncertainty.

    :param cell: CellCorners3D or 2x2x2 array
    :param int max_depth: subdivision levels
    :param int oracle_depth: oracle depth at the floor
    :return VolumeFraction: alpha and uncertainty
    """
    arr = interp.nudge_zero_corners(interp.corner_array(cell))
    topo = classify(arr)
    if topo.kind != AMBIGUOUS:
        try:
            return _direct_volume(arr, topo)
        except NotSplittable:
            pass

    if max_depth <= 0:
        lo, hi = certified_bounds(arr, oracle_depth)
        return VolumeFraction(0.5 * (lo + hi), hi - lo)

    results = [resolve_by_subdivision(child, max_depth - 1, oracle_depth) for _, child in subdivide(arr)]
    return VolumeFraction(clamp_unit(sum(r.alpha for r in results) / 8.0),
                          sum(r.uncertainty for r in results) / 8.0)


def _direct_volume(arr: np.ndarray, topo: CellTopology) -> VolumeFraction:
    if topo.kind == FULL:
        return VolumeFraction(1.0)
    if topo.kind == EMPTY:
        return VolumeFraction(0.0)
    try:
        return VolumeFraction(clamp_unit(split(arr, topo).total()))
    except (PoleInRange, DegenerateDenominator) as e:
        raise NotSplittable(e.msg)


def cell_volume_3d(cell, max_depth: int = 6) -> VolumeFraction:
    """
    Exact fraction of a 3D cell where the trilinear interpolant is >= 0.

    :param cell: CellCorners3D or 2x2x2 array
    :param int max_depth: subdivision depth for ambiguous cells
    :return VolumeFraction: alpha, with nonzero uncertainty only for unresolved leaves
    """
    arr = interp.nudge_zero_corners(interp.corner_array(cell))
    topo = classify(arr)
    if topo.kind == AMBIGUOUS:
        return resolve_by_subdivision(arr, max_depth)
    try:
        return _direct_volume(arr, topo)
    except NotSplittable:
        return resolve_by_subdivision(arr, max_depth)
