import numpy as np
from dataclasses import dataclass
from levelfrac.core.exceptions.exceptions import ShapeMismatch, DivideByZero, IncompatibleLevels, DegenerateFit
from levelfrac.core.grid.grid import ScalarGrid


@dataclass(frozen=True)
class ErrorNorms:
    """Refinement-consistency error norms"""
    l1: float
    l2: float
    linf: float


@dataclass(frozen=True)
class ConvergenceReport:
    resolutions: tuple
    errors: tuple
    fitted_order: float


def total_volume(grid: ScalarGrid, fractions) -> float:
    """
    Measure of the positive phase: sum of alpha * h^dim.

    :param ScalarGrid grid: grid the fractions were computed on
    :param fractions: per-cell volume fractions
    :return float: total volume
    """
    fractions = np.asarray(fractions, dtype=float)
    if fractions.shape != grid.cell_shape:
        raise ShapeMismatch("fractions {} do not match cells {}".format(fractions.shape, grid.cell_shape))
    return float(fractions.sum() * grid.h ** grid.dim)


def aggregate_fine_to_coarse(fine_fractions, levels: int) -> np.ndarray:
    """
    Mean of the 2^(dim * levels) descendants of each coarse cell.

    :param fine_fractions: fractions on the refined grid
    :param int levels: refinement levels between the coarse and fine grids
    :return np.ndarray: coarse-cell values
    """
    fine = np.asarray(fine_fractions, dtype=float)
    if levels < 0:
        raise IncompatibleLevels("levels must be >= 0, got {}".format(levels))
    factor = 2 ** levels
    if any(n % factor for n in fine.shape):
        raise IncompatibleLevels("cell counts {} are not multiples of {}".format(fine.shape, factor))

    blocked = []
    for n in fine.shape:
        blocked += [n // factor, factor]
    return fine.reshape(blocked).mean(axis=tuple(range(1, 2 * fine.ndim, 2)))


def error_norms(coarse_fractions, aggregated) -> ErrorNorms:
    """
    L1 = sum|d| / sum(a), L2 = sqrt(sum|d|^2 / sum(a)), Linf = max|d| with d the cellwise
    difference and a the aggregated fine fractions.

    :param coarse_fractions: fractions on the coarse grid
    :param aggregated: aggregated fine fractions
    :return ErrorNorms: norms
    """
    coarse = np.asarray(coarse_fractions, dtype=float)
    fine = np.asarray(aggregated, dtype=float)
    if coarse.shape != fine.shape:
        raise ShapeMismatch("shapes {} and {} differ".format(coarse.shape, fine.shape))
    norm = fine.sum()
    if norm == 0.0:
        raise DivideByZero("aggregated fractions sum to zero")

    diff = np.abs(fine - coarse)
    return ErrorNorms(float(diff.sum() / norm), float(np.sqrt((diff ** 2).sum() / norm)), float(diff.max()))


def convergence_order(resolutions, errors) -> ConvergenceReport:
    """
    Least-squares slope of log(error) against log(h).

    :param resolutions: spacings, strictly decreasing
    :param errors: absolute errors, positive
    :return ConvergenceReport: report
    """
    h = np.asarray(resolutions, dtype=float)
    err = np.asarray(errors, dtype=float)
    if h.shape != err.shape or h.ndim != 1:
        raise DegenerateFit("resolutions and errors must be lists of equal length")
    if len(h) < 2:
        raise DegenerateFit("at least 2 resolutions are needed, got {}".format(len(h)))
    if (h <= 0.0).any() or (err <= 0.0).any():
        raise DegenerateFit("resolutions and errors must be positive")
    if (np.diff(h) >= 0.0).any():
        raise DegenerateFit("resolutions must be strictly decreasing")

    slope, _ = np.polyfit(np.log(h), np.log(err), 1)
    return ConvergenceReport(tuple(h.tolist()), tuple(err.tolist()), float(slope))
