import math
import numpy as np
import scipy.special as sp
from levelfrac.core.exceptions.exceptions import BothZero


def dilog(z: complex) -> complex:
    """
    Principal-branch dilogarithm Li2(z) = -int_0^z log(1 - t)/t dt, branch cut on [1, inf).

    scipy's spence(w) is int_1^w log(t)/(1 - t) dt, so Li2(z) = spence(1 - z).

    :param complex z: argument
    :return complex: Li2(z)
    """
    return complex(sp.spence(complex(1.0 - z)))


def dilog_real_part(x: float) -> float:
    """
    Re Li2(x) for real x. Continuous on the whole real line, including across the cut.

    :param float x: argument
    :return float: real part of Li2(x)
    """
    return dilog(complex(x, 0.0)).real


def atan2_stable(y: float, x: float) -> float:
    """
    Two-argument arctangent in (-pi, pi].

    :param float y: ordinate
    :param float x: abscissa
    :return float: angle
    """
    if x == 0.0 and y == 0.0:
        raise BothZero("atan2 of (0, 0) is undefined")
    angle = math.atan2(y, x)
    # -0.0 ordinate on the negative axis
    if angle == -math.pi:
        angle = math.pi
    return angle


def log_abs(x) -> float:
    """
    log|x| for real or complex x.

    :param x: argument
    :return float: natural log of the modulus
    """
    return math.log(abs(x))


def x_log_abs(x: float) -> float:
    """
    x log|x| with the continuous value 0 at x = 0.

    :param float x: argument
    :return float: x log|x|
    """
    return 0.0 if x == 0.0 else x * math.log(abs(x))


def re_times_log(w: complex, z: complex) -> float:
    """
    Re(w log z) with the principal logarithm, arg z from atan2_stable.

    :param complex w: factor
    :param complex z: argument, nonzero
    :return float: real part
    """
    w, z = complex(w), complex(z)
    return w.real * log_abs(z) - w.imag * atan2_stable(z.imag, z.real)


def log1p_remainder(x: float) -> float:
    """
    (x - log(1 + x)) / x**2, accurate for small |x|; equals 1/2 at x = 0.

    :param float x: argument, x > -1
    :return float: remainder ratio
    """
    if abs(x) < 0.1:
        # sum_{k>=2} (-1)^k x^(k-2) / k
        k = np.arange(2, 24)
        return float(np.sum((-1.0) ** k * x ** (k - 2) / k))
    return (x - math.log1p(x)) / (x * x)
