"""
Analytic level-set generators (signed distance, positive inside) and the exact
measures of the generated shapes.
"""
import math
import numpy as np
from dataclasses import dataclass, field
from scipy import integrate
from levelfrac.core.exceptions.exceptions import SpecOutOfDomain
from levelfrac.core.grid.grid import ScalarGrid

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator, reproducible across platforms"""

    def __init__(self, seed: int):
        self.state = seed & LCG_MASK

    def next(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & LCG_MASK
        return self.state

    def uniform(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits"""
        return (self.next() >> 11) / float(1 << 53)


def _check_ball(center: tuple, r: float) -> None:
    if r <= 0.0:
        raise SpecOutOfDomain("radius must be positive, got {}".format(r))
    for c in center:
        if c - r < 0.0 or c + r > 1.0:
            raise SpecOutOfDomain("ball of radius {} at {} leaves the unit domain".format(r, center))


def _distance(points: tuple, center: tuple) -> np.ndarray:
    return np.sqrt(sum((p - c) ** 2 for p, c in zip(points, center)))


@dataclass(frozen=True)
class Circle:
    center: tuple
    r: float
    dim = 2

    def validate(self) -> None:
        _check_ball(self.center, self.r)

    def sdf(self, points: tuple) -> np.ndarray:
        return self.r - _distance(points, self.center)

    def measure(self) -> float:
        return math.pi * self.r ** 2


@dataclass(frozen=True)
class Sphere:
    center: tuple
    r: float
    dim = 3

    def validate(self) -> None:
        _check_ball(self.center, self.r)

    def sdf(self, points: tuple) -> np.ndarray:
        return self.r - _distance(points, self.center)

    def measure(self) -> float:
        return 4.0 / 3.0 * math.pi * self.r ** 3


def lens_area(r1: float, r2: float, d: float) -> float:
    """
    Area of the intersection of two disks.

    :param float r1: first radius
    :param float r2: second radius
    :param float d: distance between centers
    :return float: lens area
    """
    if d >= r1 + r2:
        return 0.0
    if d <= abs(r1 - r2):
        return math.pi * min(r1, r2) ** 2
    part1 = r1 ** 2 * math.acos((d * d + r1 * r1 - r2 * r2) / (2 * d * r1))
    part2 = r2 ** 2 * math.acos((d * d + r2 * r2 - r1 * r1) / (2 * d * r2))
    part3 = 0.5 * math.sqrt((-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2))
    return part1 + part2 - part3


def lens_volume(r1: float, r2: float, d: float) -> float:
    """
    Volume of the intersection of two balls.

    :param float r1: first radius
    :param float r2: second radius
    :param float d: distance between centers
    :return float: lens volume
    """
    if d >= r1 + r2:
        return 0.0
    if d <= abs(r1 - r2):
        return 4.0 / 3.0 * math.pi * min(r1, r2) ** 3
    return math.pi * (r1 + r2 - d) ** 2 \
        * (d * d + 2 * d * r2 - 3 * r2 * r2 + 2 * d * r1 + 6 * r1 * r2 - 3 * r1 * r1) / (12 * d)


@dataclass(frozen=True)
class Union:
    members: tuple

    @property
    def dim(self) -> int:
        return self.members[0].dim

    def validate(self) -> None:
        if not self.members:
            raise SpecOutOfDomain("union needs at least one member")
        if len({m.dim for m in self.members}) != 1:
            raise SpecOutOfDomain("union members must share a dimension")
        for m in self.members:
            m.validate()

    def sdf(self, points: tuple) -> np.ndarray:
        return np.maximum.reduce([m.sdf(points) for m in self.members])

    def measure(self) -> float:
        if len(self.members) == 1:
            return self.members[0].measure()
        if len(self.members) != 2 or not all(isinstance(m, (Circle, Sphere)) for m in self.members):
            raise SpecOutOfDomain("closed-form measure is only known for the union of two balls")
        a, b = self.members
        d = math.dist(a.center, b.center)
        overlap = lens_area(a.r, b.r, d) if self.dim == 2 else lens_volume(a.r, b.r, d)
        return a.measure() + b.measure() - overlap


@dataclass(frozen=True)
class ZalesakDisk:
    """Disk with a rectangular notch cut from its bottom edge"""
    center: tuple
    r: float
    notch_w: float
    notch_h: float
    dim = 2

    def validate(self) -> None:
        _check_ball(self.center, self.r)
        if not 0.0 < self.notch_w < 2 * self.r or not 0.0 < self.notch_h < 2 * self.r:
            raise SpecOutOfDomain("notch {}x{} does not fit a disk of radius {}".format(
                self.notch_w, self.notch_h, self.r))

    def _notch_box(self) -> tuple:
        cx, cy = self.center
        bottom, top = cy - 2 * self.r, cy - self.r + self.notch_h
        return (cx, 0.5 * (bottom + top)), (0.5 * self.notch_w, 0.5 * (top - bottom))

    def sdf(self, points: tuple) -> np.ndarray:
        disk = self.r - _distance(points, self.center)
        (bx, by), (sx, sy) = self._notch_box()
        qx, qy = np.abs(points[0] - bx) - sx, np.abs(points[1] - by) - sy
        outside = np.hypot(np.maximum(qx, 0.0), np.maximum(qy, 0.0))
        box = outside + np.minimum(np.maximum(qx, qy), 0.0)
        return np.minimum(disk, box)

    def measure(self) -> float:
        r, half = self.r, 0.5 * self.notch_w
        top = self.notch_h - r
        if top <= math.sqrt(r * r - half * half):
            # notch top stays under the upper arc across the whole notch width
            notch = self.notch_w * top + half * math.sqrt(r * r - half * half) + r * r * math.asin(half / r)
        else:
            kink = math.sqrt(max(r * r - top * top, 0.0))
            notch = integrate.quad(
                lambda x: min(top, math.sqrt(r * r - x * x)) + math.sqrt(r * r - x * x), -half, half,
                points=sorted({-kink, kink}), epsabs=1e-15, epsrel=1e-13, full_output=1)[0]
        return math.pi * r * r - notch


@dataclass(frozen=True)
class RandomCircles:
    count: int
    seed: int
    r_range: tuple = (0.05, 0.15)
    circles: tuple = field(init=False, compare=False, repr=False)
    dim = 2

    def __post_init__(self):
        rng = Lcg(self.seed)
        lo, hi = self.r_range
        circles = []
        for _ in range(self.count):
            r = lo + (hi - lo) * rng.uniform()
            cx = r + (1.0 - 2.0 * r) * rng.uniform()
            cy = r + (1.0 - 2.0 * r) * rng.uniform()
            circles.append(Circle((cx, cy), r))
        object.__setattr__(self, "circles", tuple(circles))

    def validate(self) -> None:
        lo, hi = self.r_range
        if self.count < 1:
            raise SpecOutOfDomain("count must be >= 1, got {}".format(self.count))
        if not 0.0 < lo <= hi < 0.5:
            raise SpecOutOfDomain("radius range {} is invalid".format(self.r_range))

    def sdf(self, points: tuple) -> np.ndarray:
        return Union(self.circles).sdf(points)

    def measure(self) -> float:
        raise SpecOutOfDomain("random circles have no closed-form measure")


def node_coordinates(nodes_per_axis: int, dim: int) -> tuple:
    """
    Node coordinates of the uniform grid on [0, 1]^dim, indexed [i, j(, k)].

    :return tuple: coordinate arrays
    """
    axis = np.linspace(0.0, 1.0, nodes_per_axis)
    return np.meshgrid(*([axis] * dim), indexing="ij")


def generate(spec, nodes_per_axis: int) -> ScalarGrid:
    """
    Sample a shape's signed distance at the nodes of a uniform grid.

    :param spec: Circle, Sphere, Union, ZalesakDisk or RandomCircles
    :param int nodes_per_axis: node count per axis
    :return ScalarGrid: grid
    """
    if nodes_per_axis < 2:
        raise SpecOutOfDomain("nodes per axis must be >= 2, got {}".format(nodes_per_axis))
    spec.validate()
    return ScalarGrid(spec.sdf(node_coordinates(nodes_per_axis, spec.dim)), 1.0 / (nodes_per_axis - 1))


def exact_measure(spec) -> float:
    """
    Exact area (2D) or volume (3D) of a shape.

    :param spec: shape
    :return float: measure
    """
    return spec.measure()


SHAPE_KINDS = ("circle", "sphere", "double-circle", "double-sphere", "zalesak", "random-circles")


def make_spec(kind: str, center: tuple = None, center2: tuple = None, r: float = None,
              notch_w: float = 0.2, notch_h: float = 0.6, count: int = 15, seed: int = 7):
    """
    Build a shape from command-line style parameters; missing centers and radii take the
    benchmark defaults of each kind.

    :param str kind: one of SHAPE_KINDS
    :return: shape
    """
    if kind not in SHAPE_KINDS:
        raise SpecOutOfDomain("unknown shape kind '{}'".format(kind))
    dim = 3 if kind.endswith("sphere") else 2
    if center is not None and len(center) != dim:
        raise SpecOutOfDomain("{} needs a {}D center, got {}".format(kind, dim, center))
    if center2 is not None and len(center2) != dim:
        raise SpecOutOfDomain("{} needs a {}D second center, got {}".format(kind, dim, center2))

    if kind == "circle":
        return Circle(center or (0.5, 0.5), r or 0.25)
    if kind == "sphere":
        return Sphere(center or (0.5, 0.5, 0.5), r or 0.25)
    if kind == "double-circle":
        return Union((Circle(center or (0.3, 0.5), r or 0.25), Circle(center2 or (0.7, 0.5), r or 0.25)))
    if kind == "double-sphere":
        return Union((Sphere(center or (0.3, 0.5, 0.5), r or 0.2), Sphere(center2 or (0.7, 0.5, 0.5), r or 0.2)))
    if kind == "zalesak":
        return ZalesakDisk(center or (0.5, 0.5), r or 0.4, notch_w, notch_h)
    return RandomCircles(count, seed)
