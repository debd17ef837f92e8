"""
Closed-form volume of elementary 3D cut pieces.

A piece is the region between the plane zeta = i_zeta and the interface
zeta(xi, eta), for xi in [xi0, xi1] and eta between the origin's eta edge and either
the opposite face (strip pieces) or the curve where the interface meets the plane
zeta = i_zeta (corner pieces). With u = Xi0 = e xi + g the outer integrand reduces to
(t0 + t6/u + t3/u^2) log|P u + Q| / e^3 plus a rational term, whose antiderivatives
need only logarithms and the dilogarithm. When the root of Xi0 lies far from the
piece, e = 0 included, 1/Xi0 is expanded in powers of xi and the integrand becomes a
polynomial times log|polynomial|.
"""
import math
import numpy as np
from dataclasses import dataclass, replace
from numpy.polynomial import Polynomial
from scipy import integrate
from levelfrac.core.exceptions.exceptions import DegenerateDenominator, PoleInRange
from levelfrac.core.special.special import dilog, dilog_real_part, log_abs, x_log_abs, re_times_log
from levelfrac.core.analytic.analytic2d import integrate_rational_2d
import levelfrac.core.interp.interp as interp

# Relative size below which a coefficient is treated as zero
TAU_DEG = 1e-12
# Closed form is used only while max|Xi0| / |e| stays below this bound
MAX_CONDITION = 8.0
# Ratios of |Q| / (|P| max|u|) inside (TAU_DEG, NEAR_FACTOR) lose too many digits
NEAR_FACTOR = 1e-5
# Inward shrink of an endpoint where Xi0 nearly vanishes
ENDPOINT_SHRINK = 1e-10
# Root of Xi0 or of a log factor at least this many half-widths away is expanded in series
FAR_RATIO = 4.0
# Series are truncated once their terms drop below this
SERIES_TOL = 1e-17
MAX_SERIES_TERMS = 60
# Closed-form piece volumes outside [-PIECE_TOL, width + PIECE_TOL] are rejected
PIECE_TOL = 1e-10


@dataclass(frozen=True)
class AuxTerms:
    """Auxiliary quantities of the 3D antiderivatives at one xi"""
    t0: float
    t1: float
    t2: float
    t3: float
    t4: float
    t5: float
    t6: float
    Xi0: float
    Xi1: float
    Xi2: float
    Xi3: float
    Xi4: float
    s: float
    s1: float
    s2: float


@dataclass(frozen=True)
class IntegrationDomain:
    """
    One elementary piece: xi in [xi0, xi1]; eta from the origin's eta edge to the curve
    eta = q(xi) (curve=True) or across the whole cell (curve=False).
    """
    xi0: float
    xi1: float
    i_eta: int
    i_zeta: int
    curve: bool = True

    def eta_bounds(self, rc: interp.RationalCoeffs3D, xi: float) -> tuple:
        """
        eta range at a given xi.

        :param RationalCoeffs3D rc: interface coefficients
        :param float xi: slice position
        :return tuple: (eta0, eta1)
        """
        if not self.curve:
            return 0.0, 1.0
        q = min(max(curve_eta(rc, xi, self.i_zeta), 0.0), 1.0)
        return (q, 1.0) if self.i_eta == 1 else (0.0, q)


def aux_terms(rc: interp.RationalCoeffs3D, xi: float) -> AuxTerms:
    """
    Evaluate the auxiliary terms t0..t6, Xi0..Xi4 and s, s1, s2 at xi.

    :param RationalCoeffs3D rc: interface coefficients
    :param float xi: position
    :return AuxTerms: auxiliary terms
    """
    a, b, c, d, e, f, g, h = rc.a, rc.b, rc.c, rc.d, rc.e, rc.f, rc.g, rc.h
    t0 = a * f - b * e
    t1 = a * h - b * g + c * f - d * e
    t2 = c * h - d * g
    t3 = e * e * t2 - e * g * t1 + g * g * t0
    t4 = e * h - f * g
    t5 = c * e - a * g
    t6 = e * t1 - 2.0 * g * t0
    s = math.sqrt(abs(t1 * t1 - 4.0 * t0 * t2))
    return AuxTerms(t0, t1, t2, t3, t4, t5, t6,
                    Xi0=e * xi + g, Xi1=t2 + xi * t1 + xi * xi * t0, Xi2=t1 + 2.0 * xi * t0,
                    Xi3=f * xi + h, Xi4=a * xi + c, s=s, s1=t6 + e * s, s2=t6 - e * s)


def curve_eta(rc: interp.RationalCoeffs3D, xi: float, i_zeta: int) -> float:
    """
    eta where the interface meets the plane zeta = i_zeta.

    :return float: q(xi)
    """
    num = (rc.f * i_zeta + rc.b) * xi + rc.h * i_zeta + rc.d
    den = (rc.e * i_zeta + rc.a) * xi + rc.g * i_zeta + rc.c
    if den == 0.0:
        raise DegenerateDenominator("interface is parallel to the eta axis on zeta = {}".format(i_zeta))
    return -num / den

# LOG-WEIGHTED BUILDING BLOCKS, all in u = e xi + g
def _base(u: float, t0: float, t6: float, t3: float) -> float:
    """int (t0 + t6/u + t3/u^2) du"""
    return t0 * u + t6 * log_abs(u) - t3 / u


def _blocks_real(u: float, p: float, q: float, u_max: float) -> tuple:
    """
    (J0, J1, J2) = int log|pu+q| u^-k du for k = 0, 1, 2 with real p, q.
    """
    if abs(p) * u_max <= TAU_DEG * abs(q):
        lq = log_abs(q)
        return u * lq, lq * log_abs(u), -lq / u
    if abs(q) <= TAU_DEG * abs(p) * u_max:
        lu = log_abs(u)
        return u * log_abs(p * u) - u, log_abs(p) * lu + 0.5 * lu * lu, -(log_abs(p * u) + 1.0) / u
    ratio = abs(q) / (abs(p) * u_max)
    if ratio < NEAR_FACTOR or 1.0 / ratio < NEAR_FACTOR:
        raise DegenerateDenominator("log factor nearly shares a root with Xi0")

    lin = p * u + q
    j0 = x_log_abs(lin) / p - u
    j1 = log_abs(q) * log_abs(u) - dilog_real_part(-p * u / q)
    j2 = -x_log_abs(lin) / (u * q) + (p / q) * log_abs(u)
    return j0, j1, j2


def _blocks_pair(u: float, q: complex) -> tuple:
    """
    Same as _blocks_real for log|u+q| + log|u+conj(q)|, q not real.
    """
    lin = u + q
    j0 = 2.0 * re_times_log(lin, lin) - 2.0 * u
    j1 = 2.0 * (log_abs(q) * log_abs(u) - dilog(-u / q).real)
    j2 = 2.0 * (-log_abs(lin) / u + (1.0 / q).real * log_abs(u) - re_times_log(1.0 / q, lin))
    return j0, j1, j2


def _weighted(blocks: tuple, t0: float, t6: float, t3: float) -> float:
    j0, j1, j2 = blocks
    return t0 * j0 + t6 * j1 + t3 * j2


def _log_linear(u: float, at: AuxTerms, big_p: float, big_q: float, u_max: float) -> float:
    """int Xi1/Xi0^2 log|P u + Q| dxi, times e^3"""
    if big_p == 0.0 and big_q == 0.0:
        raise DegenerateDenominator("log argument is identically zero")
    return _weighted(_blocks_real(u, big_p, big_q, u_max), at.t0, at.t6, at.t3)


def _log_quadratic(u: float, at: AuxTerms, e: float, u_max: float) -> float:
    """int Xi1/Xi0^2 log|Xi1| dxi, times e^3"""
    t0, t6, t3 = at.t0, at.t6, at.t3
    scale = abs(t0) * u_max * u_max + abs(t6) * u_max + abs(t3)
    if scale == 0.0:
        raise DegenerateDenominator("Xi1 is identically zero")

    # e^2 Xi1 = t0 u^2 + t6 u + t3
    total = -2.0 * log_abs(e) * _base(u, t0, t6, t3)
    if abs(t0) * u_max * u_max <= TAU_DEG * scale:
        if abs(t6) * u_max <= TAU_DEG * scale:
            return total + log_abs(t3) * _base(u, t0, t6, t3)
        return total + _weighted(_blocks_real(u, t6, t3, u_max), t0, t6, t3)

    total += log_abs(t0) * _base(u, t0, t6, t3)
    if at.t1 * at.t1 - 4.0 * at.t0 * at.t2 >= 0.0:
        # roots -s1 / 2 t0 and -s2 / 2 t0, the larger one first
        big = at.s1 if abs(at.s1) >= abs(at.s2) else at.s2
        roots = [-big / (2.0 * t0), -2.0 * t3 / big] if big != 0.0 else [0.0, 0.0]
        for root in roots:
            total += _weighted(_blocks_real(u, 1.0, -root, u_max), t0, t6, t3)
        return total

    root = complex(-t6, abs(e) * at.s) / (2.0 * t0)
    return total + _weighted(_blocks_pair(u, -root), t0, t6, t3)


# POLYNOMIAL TIMES LOG, in t = xi - m
def _reciprocal_series(e: float, u_mid: float, half: float, power: int) -> Polynomial:
    """
    Power series of Xi0^-power, Xi0 = u_mid + e t, truncated once the terms drop
    below SERIES_TOL on |t| <= half. Needs |e| half < |u_mid|.
    """
    k = -e / u_mid
    ratio = abs(k) * half
    terms = 1 if ratio == 0.0 else min(MAX_SERIES_TERMS, int(math.ceil(math.log(SERIES_TOL) / math.log(ratio))) + 1)
    n = np.arange(terms)
    if power == 1:
        return Polynomial(np.power(k, n) / u_mid)
    return Polynomial((n + 1) * np.power(k, n) / (u_mid * u_mid))


def _log_root_integral(weight: Polynomial, z: complex, lo: float, hi: float) -> float:
    """int_lo^hi weight(t) log|t - z| dt for real or complex z"""
    reach = max(abs(lo), abs(hi))
    if abs(z) >= FAR_RATIO * reach:
        # log|t - z| = log|z| - Re sum (t/z)^n / n
        terms = 1 if reach == 0.0 else int(math.ceil(math.log(SERIES_TOL) / math.log(reach / abs(z)))) + 1
        n = np.arange(1, terms + 1)
        expansion = Polynomial(np.concatenate(([log_abs(z)], -np.real(np.power(1.0 / z, n)) / n)))
        primitive = (weight * expansion).integ()
        return float(primitive(hi) - primitive(lo))

    # (Q(t) - Q(z)) log(t - z) - int (Q(t) - Q(z)) / (t - z) dt, Q' = weight
    primitive = weight.integ()
    shifted = primitive - primitive(z)
    rest = (shifted // Polynomial([-z, 1.0])).integ()

    def antiderivative(t):
        gap = t - z
        head = 0.0 if gap == 0.0 else re_times_log(shifted(t), gap)
        return head - complex(rest(t)).real

    return antiderivative(hi) - antiderivative(lo)


def _log_factor_integral(weight: Polynomial, factor: Polynomial, lo: float, hi: float) -> float:
    """
    int_lo^hi weight(t) log|factor(t)| dt for a real factor of degree <= 2. Leading
    coefficients negligible on the range are dropped.
    """
    reach = max(abs(lo), abs(hi))
    c = np.zeros(3)
    c[:len(factor.coef)] = factor.coef[:3]
    sizes = np.abs(c) * np.power(reach, np.arange(3))
    if sizes.max() == 0.0:
        raise DegenerateDenominator("log argument is identically zero")
    degree = max(n for n in range(3) if sizes[n] > TAU_DEG * sizes.sum())

    primitive = weight.integ()
    total = log_abs(c[degree]) * float(primitive(hi) - primitive(lo))
    if degree == 1:
        return total + _log_root_integral(weight, -c[0] / c[1], lo, hi)
    if degree == 2:
        disc = c[1] * c[1] - 4.0 * c[2] * c[0]
        if disc < 0.0:
            pair = complex(-c[1], math.sqrt(-disc)) / (2.0 * c[2])
            return total + 2.0 * _log_root_integral(weight, pair, lo, hi)
        half = -0.5 * (c[1] + math.copysign(math.sqrt(disc), c[1]))
        roots = (half / c[2], c[0] / half) if half != 0.0 else (0.0, 0.0)
        for root in roots:
            total += _log_root_integral(weight, root, lo, hi)
    return total


def _rational_numerator(rc: interp.RationalCoeffs3D, i_zeta: int, i_eta: int, curve: bool) -> tuple:
    """(p, r) of the rational part (p xi + r) / Xi0 of the piece integrand"""
    a, b, c, d, e, f, g, h = rc.a, rc.b, rc.c, rc.d, rc.e, rc.f, rc.g, rc.h
    s = 1 - 2 * i_zeta
    if not curve:
        return i_zeta * e - s * a, i_zeta * g - s * c
    if i_eta == 0:
        return s * (b + i_zeta * f), s * (d + i_zeta * h)
    return -s * (a + i_zeta * e + b + i_zeta * f), -s * (c + i_zeta * g + d + i_zeta * h)


def _series_parts(rc: interp.RationalCoeffs3D, dom: IntegrationDomain, mid: float, lo: float, hi: float) -> tuple:
    """
    Rational and logarithmic parts of the piece integral over xi in [mid + lo, mid + hi],
    with 1/Xi0 expanded about mid. Exact when e = 0.

    :return tuple: (rational part, log part)
    """
    at = aux_terms(rc, mid)
    if at.Xi0 == 0.0:
        raise DegenerateDenominator("Xi0 vanishes at xi = {}".format(mid))
    reach = max(abs(lo), abs(hi))
    inv1 = _reciprocal_series(rc.e, at.Xi0, reach, 1)
    inv2 = _reciprocal_series(rc.e, at.Xi0, reach, 2)

    p, r = _rational_numerator(rc, dom.i_zeta, dom.i_eta, dom.curve)
    rational = (Polynomial([p * mid + r, p]) * inv1).integ()

    i_z = dom.i_zeta
    quadratic = Polynomial([at.Xi1, at.Xi2, at.t0])
    top = Polynomial([at.Xi0 + at.Xi3, rc.e + rc.f])
    bottom = Polynomial([at.Xi3, rc.f])
    on_curve = Polynomial([at.Xi4 + i_z * at.Xi0, rc.a + i_z * rc.e])
    if not dom.curve:
        factors = ((1, top), (-1, bottom))
    elif dom.i_eta == 0:
        factors = ((1, quadratic), (-1, on_curve), (-1, bottom))
    else:
        factors = ((1, top), (-1, quadratic), (1, on_curve))

    weight = quadratic * inv2
    logs = sum(sign * _log_factor_integral(weight, factor, lo, hi) for sign, factor in factors)
    return float(rational(hi) - rational(lo)), (1 - 2 * i_z) * logs


def _is_flat(rc: interp.RationalCoeffs3D) -> bool:
    scale = max(abs(v) for v in (rc.a, rc.b, rc.c, rc.d, rc.e, rc.f, rc.g, rc.h))
    return abs(rc.e) <= TAU_DEG * scale


def _pole_is_far(rc: interp.RationalCoeffs3D, xi0: float, xi1: float) -> bool:
    """True when the root of Xi0 is at least FAR_RATIO half-widths from the piece"""
    u_mid = rc.e * 0.5 * (xi0 + xi1) + rc.g
    return u_mid != 0.0 and abs(rc.e) * 0.5 * (xi1 - xi0) * FAR_RATIO <= abs(u_mid)


def _check_conditioning(rc: interp.RationalCoeffs3D, xi_lo: float, xi_hi: float) -> float:
    """
    Raise DegenerateDenominator when the dilogarithm form would lose accuracy.

    :return float: max |Xi0| over the range
    """
    if _is_flat(rc):
        raise DegenerateDenominator("e vanishes")
    u0, u1 = rc.e * xi_lo + rc.g, rc.e * xi_hi + rc.g
    u_max = max(abs(u0), abs(u1))
    if u0 * u1 <= 0.0 or min(abs(u0), abs(u1)) < ENDPOINT_SHRINK * u_max:
        raise DegenerateDenominator("Xi0 vanishes on the integration range")
    if u_max > MAX_CONDITION * abs(rc.e):
        raise DegenerateDenominator("Xi0 is nearly constant over the cell")
    return u_max


def antiderivative_G(xi: float, rc: interp.RationalCoeffs3D, i_zeta: int, i_eta: int, curve: bool = True) -> float:
    """
    Antiderivative of the rational part of the piece integrand, (p xi + r) / Xi0.

    The rational part is the eta-length of the piece times i_zeta - (1 - 2 i_zeta) Xi4 / Xi0.
    Its log coefficient r e - p g is a combination of t4, t5 and d e - b g. For e -> 0 the
    antiderivative is the polynomial (p xi^2 / 2 + r xi) / g.

    :param float xi: evaluation point
    :param RationalCoeffs3D rc: interface coefficients
    :param int i_zeta: zeta coordinate of the origin
    :param int i_eta: eta coordinate of the origin
    :param bool curve: corner piece (True) or strip piece (False)
    :return float: G(xi)
    """
    e, g = rc.e, rc.g
    p, r = _rational_numerator(rc, i_zeta, i_eta, curve)
    if _is_flat(rc):
        if g == 0.0:
            raise DegenerateDenominator("Xi0 vanishes identically")
        return (0.5 * p * xi + r) * xi / g

    at = aux_terms(rc, xi)
    s = 1 - 2 * i_zeta
    cross = rc.d * e - rc.b * g
    if not curve:
        log_coef = -s * at.t5
    elif i_eta == 0:
        log_coef = s * (cross + i_zeta * at.t4)
    else:
        log_coef = -s * (at.t5 + cross + i_zeta * at.t4)
    return (p / e) * xi + (log_coef / (e * e)) * log_abs(at.Xi0)


def antiderivative_F(xi: float, rc: interp.RationalCoeffs3D, dom: IntegrationDomain, u_max: float = None) -> float:
    """
    Antiderivative of the logarithmic part of the piece integrand,
    (1 - 2 i_zeta) Xi1 / Xi0^2 [log|Xi0 eta1 + Xi3| - log|Xi0 eta0 + Xi3|].

    On the curve, Xi0 q + Xi3 = Xi1 / (Xi4 + i_zeta Xi0). The linear log arguments are
    P u + Q with Q = t4 / e on the faces eta = 0, 1 and Q = t5 / e on the curve, so
    t4, t5 -> 0 and a, f -> 0 are the Q -> 0 and P -> 0 limits of the blocks. For
    e -> 0 the antiderivative is the exact polynomial-log integral from 0.

    :param float xi: evaluation point
    :param RationalCoeffs3D rc: interface coefficients
    :param IntegrationDomain dom: piece
    :param float u_max: max |Xi0| over the piece, defaults to |Xi0(xi)|
    :return float: F(xi)
    """
    if _is_flat(rc):
        return _series_parts(replace(rc, e=0.0), dom, 0.0, 0.0, xi)[1]

    e = rc.e
    u = e * xi + rc.g
    if u == 0.0:
        raise DegenerateDenominator("Xi0 vanishes at xi = {}".format(xi))
    u_max = u_max or abs(u)
    at = aux_terms(rc, xi)
    i_z = dom.i_zeta

    top = ((e + rc.f) / e, at.t4 / e)
    bottom = (rc.f / e, at.t4 / e)
    on_curve = ((rc.a + i_z * e) / e, at.t5 / e)

    def log_lin(coef):
        return _log_linear(u, at, coef[0], coef[1], u_max)

    if not dom.curve:
        total = log_lin(top) - log_lin(bottom)
    elif dom.i_eta == 0:
        total = _log_quadratic(u, at, e, u_max) - log_lin(on_curve) - log_lin(bottom)
    else:
        total = log_lin(top) - _log_quadratic(u, at, e, u_max) + log_lin(on_curve)

    return (1 - 2 * i_z) * total / e ** 3


def closed_form_volume(rc: interp.RationalCoeffs3D, dom: IntegrationDomain) -> float:
    """
    Piece volume in closed form. When the root of Xi0 is far from the piece (e -> 0
    included) 1/Xi0 is expanded in a power series and the integrand becomes polynomial
    times log|polynomial|; otherwise [F + G](xi1) - [F + G](xi0).

    :raise DegenerateDenominator: when the closed form is ill-conditioned on the piece
    :return float: signed piece volume
    """
    if _pole_is_far(rc, dom.xi0, dom.xi1):
        mid, half = 0.5 * (dom.xi0 + dom.xi1), 0.5 * (dom.xi1 - dom.xi0)
        value = sum(_series_parts(rc, dom, mid, -half, half))
    else:
        u_max = _check_conditioning(rc, dom.xi0, dom.xi1)

        def total(xi):
            return antiderivative_F(xi, rc, dom, u_max) + antiderivative_G(xi, rc, dom.i_zeta, dom.i_eta, dom.curve)

        value = total(dom.xi1) - total(dom.xi0)
    if not np.isfinite(value):
        raise DegenerateDenominator("closed form is not finite on [{}, {}]".format(dom.xi0, dom.xi1))
    return value


def slice_area(rc: interp.RationalCoeffs3D, dom: IntegrationDomain, xi: float) -> float:
    """
    Exact cross-section area of a piece at xi (closed-form inner eta integral).

    :return float: area in the (eta, zeta) plane
    """
    eta0, eta1 = dom.eta_bounds(rc, xi)
    try:
        return integrate_rational_2d(rc.slice(xi), eta0, eta1, dom.i_zeta)
    except PoleInRange:
        # only at isolated xi where the piece pinches to a line
        return 0.0 if dom.i_zeta == 0 else eta1 - eta0


def quadrature_volume(rc: interp.RationalCoeffs3D, dom: IntegrationDomain) -> float:
    """
    Piece volume by adaptive Gauss-Kronrod over xi of the exact slice area. Convergence
    messages are returned by quad, not warned.

    :return float: piece volume
    """
    if dom.xi1 <= dom.xi0:
        return 0.0
    result = integrate.quad(lambda xi: slice_area(rc, dom, xi), dom.xi0, dom.xi1,
                            epsabs=1e-14, epsrel=1e-13, limit=200, full_output=1)
    return result[0]


def elementary_volume_3d(rc: interp.RationalCoeffs3D, dom: IntegrationDomain) -> float:
    """
    Volume of one elementary piece: closed form when well conditioned and inside
    [0, xi1 - xi0], slice quadrature otherwise.

    :param RationalCoeffs3D rc: interface coefficients in the piece's local axes
    :param IntegrationDomain dom: piece
    :return float: piece volume (fraction of the unit cell)
    """
    width = dom.xi1 - dom.xi0
    if width <= 0.0:
        return 0.0
    try:
        value = closed_form_volume(rc, dom)
    except (DegenerateDenominator, ZeroDivisionError, ValueError, OverflowError):
        return quadrature_volume(rc, dom)
    if not -PIECE_TOL <= value <= width + PIECE_TOL:
        return quadrature_volume(rc, dom)
    return value
