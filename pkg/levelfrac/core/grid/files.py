"""
Grid files.

LSG: header `LSG <dim> <nx> <ny> [<nz>] <h>` then whitespace separated node values,
x fastest, written with the shortest round-trip representation.
CSV: header `i,j[,k],value` then one row per node.
"""
import csv
import math
import click
import numpy as np
from levelfrac.core.exceptions.exceptions import ParseError, DimensionMismatch
from levelfrac.core.grid.grid import ScalarGrid

LSG_MAGIC = "LSG"
CSV_AXES = ("i", "j", "k")


def _is_csv(path: str) -> bool:
    return str(path).lower().endswith(".csv")


def _parse_float(token: str, line: int, offset: int = None) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError("invalid number '{}'".format(token), line, offset)
    if not math.isfinite(value):
        raise ParseError("non-finite value '{}'".format(token), line, offset)
    return value


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError("invalid integer '{}'".format(token), line)


def parse_lsg(text: str) -> ScalarGrid:
    """
    Parse LSG text.

    :param str text: file content
    :return ScalarGrid: grid
    """
    lines = text.splitlines()
    if not lines or not lines[0].split() or lines[0].split()[0] != LSG_MAGIC:
        raise ParseError("missing '{}' header".format(LSG_MAGIC), 1)

    header = lines[0].split()
    if len(header) < 2:
        raise ParseError("truncated header", 1)
    dim = _parse_int(header[1], 1)
    if dim not in (2, 3):
        raise DimensionMismatch("dimension must be 2 or 3, got {}".format(dim))
    if len(header) != dim + 3:
        raise DimensionMismatch("header declares dimension {} but lists {} extents".format(dim, len(header) - 3))

    extents = tuple(_parse_int(tok, 1) for tok in header[2:2 + dim])
    if min(extents) < 2:
        raise DimensionMismatch("every axis needs at least 2 nodes, got {}".format(extents))
    h = _parse_float(header[-1], 1)
    if h <= 0.0:
        raise ParseError("spacing must be positive, got {}".format(h), 1)

    expected = int(np.prod(extents))
    values = []
    for number, line in enumerate(lines[1:], start=2):
        for token in line.split():
            if len(values) == expected:
                raise ParseError("more than {} values".format(expected), number, len(values))
            values.append(_parse_float(token, number, len(values)))
    if len(values) < expected:
        raise ParseError("expected {} values, found {}".format(expected, len(values)), len(lines), len(values))

    return ScalarGrid(np.array(values).reshape(extents, order="F"), h)


def format_lsg(grid: ScalarGrid) -> str:
    """
    Render a grid as LSG text, one line per run of n_x values.

    :param ScalarGrid grid: grid
    :return str: file content
    """
    header = " ".join([LSG_MAGIC, str(grid.dim)] + [str(n) for n in grid.extents] + [repr(grid.h)])
    flat = grid.values.ravel(order="F")
    n_x = grid.extents[0]
    rows = [" ".join(repr(float(v)) for v in flat[start:start + n_x]) for start in range(0, len(flat), n_x)]
    return "\n".join([header] + rows) + "\n"


def parse_csv(text: str) -> ScalarGrid:
    """
    Parse CSV node rows; spacing is taken as 1 / (n_x - 1).

    :param str text: file content
    :return ScalarGrid: grid
    """
    rows = list(csv.reader(text.splitlines()))
    if not rows:
        raise ParseError("empty file", 1)

    header = [c.strip() for c in rows[0]]
    dim = len(header) - 1
    if dim not in (2, 3) or tuple(header[:dim]) != CSV_AXES[:dim] or header[-1] != "value":
        raise ParseError("header must be i,j[,k],value", 1)

    nodes = {}
    for number, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != dim + 1:
            raise DimensionMismatch("line {} has {} columns, expected {}".format(number, len(row), dim + 1))
        index = tuple(_parse_int(tok.strip(), number) for tok in row[:dim])
        if min(index) < 0:
            raise ParseError("negative node index {}".format(index), number)
        nodes[index] = _parse_float(row[dim].strip(), number)

    if not nodes:
        raise ParseError("no node rows", len(rows))
    extents = tuple(max(idx[a] for idx in nodes) + 1 for a in range(dim))
    if len(nodes) != int(np.prod(extents)):
        raise ParseError("expected {} nodes, found {}".format(int(np.prod(extents)), len(nodes)), len(rows))

    values = np.empty(extents)
    for index, value in nodes.items():
        values[index] = value
    return ScalarGrid(values)


def format_csv(grid: ScalarGrid) -> str:
    """
    Render a grid as CSV node rows, x fastest.

    :param ScalarGrid grid: grid
    :return str: file content
    """
    lines = [",".join(CSV_AXES[:grid.dim] + ("value",))]
    for index in np.ndindex(*grid.extents[::-1]):
        index = index[::-1]
        lines.append(",".join([str(i) for i in index] + [repr(float(grid.values[index]))]))
    return "\n".join(lines) + "\n"


def read_grid(path: str) -> ScalarGrid:
    """
    Read a grid; the format is chosen by extension (.csv or LSG otherwise).

    :param str path: file path or '-' for stdin
    :return ScalarGrid: grid
    """
    with click.open_file(path, "r") as f:
        text = f.read()
    return parse_csv(text) if _is_csv(path) else parse_lsg(text)


def write_grid(grid: ScalarGrid, path: str) -> None:
    """
    Write a grid; the format is chosen by extension (.csv or LSG otherwise).

    :param ScalarGrid grid: grid
    :param str path: file path or '-' for stdout
    """
    text = format_csv(grid) if _is_csv(path) else format_lsg(grid)
    with click.open_file(path, "w") as f:
        f.write(text)
