import math
import numpy as np
import pytest
from levelfrac.core.exceptions.exceptions import NotDivisible, DimensionMismatch, ParseError, SpecOutOfDomain
from levelfrac.core.grid.grid import ScalarGrid, refine, refine_values, coarsen
from levelfrac.core.grid.files import parse_lsg, format_lsg, parse_csv, format_csv, read_grid, write_grid
from levelfrac.core.grid.shapes import Circle, Sphere, Union, ZalesakDisk, RandomCircles, Lcg, lens_area, \
    lens_volume, generate, exact_measure, make_spec, node_coordinates

rng = np.random.default_rng(3)


def test_grid_properties():
    grid = ScalarGrid(np.zeros((5, 3)))
    assert grid.dim == 2
    assert grid.extents == (5, 3)
    assert grid.cell_shape == (4, 2)
    assert grid.h == 0.25
    assert grid.cell_corners().shape == (4, 2, 2, 2)


def test_grid_is_immutable():
    grid = ScalarGrid(np.zeros((3, 3)))
    with pytest.raises(ValueError):
        grid.values[0, 0] = 1.0


def test_grid_rejects_bad_input():
    with pytest.raises(DimensionMismatch):
        ScalarGrid(np.zeros(4))
    with pytest.raises(DimensionMismatch):
        ScalarGrid(np.zeros((1, 3)))
    with pytest.raises(ValueError):
        ScalarGrid([[0.0, np.nan], [1.0, 1.0]])


def test_corners_match_cell_corners():
    grid = ScalarGrid(rng.uniform(-1, 1, (4, 5, 3)))
    assert np.array_equal(grid.corners((2, 1, 0)), grid.cell_corners()[2, 1, 0])


def test_refine_keeps_nodes():
    grid = ScalarGrid(rng.uniform(-1, 1, (3, 4)))
    fine = refine(grid, 2)
    assert fine.extents == (9, 13)
    assert fine.h == grid.h / 4
    assert np.array_equal(fine.values[::4, ::4], grid.values)


def test_refine_is_multilinear():
    values = rng.uniform(-1, 1, (2, 2, 2))
    fine = refine_values(values, 1)
    assert fine[1, 1, 1] == pytest.approx(values.mean())
    assert fine[1, 0, 0] == pytest.approx(0.5 * (values[0, 0, 0] + values[1, 0, 0]))


def test_refine_zero_levels_is_identity():
    grid = ScalarGrid(rng.uniform(-1, 1, (3, 3)))
    assert refine(grid, 0) == grid


def test_coarsen_undoes_refine():
    grid = ScalarGrid(rng.uniform(-1, 1, (5, 3, 3)))
    assert coarsen(refine(grid, 2), 2) == grid


def test_coarsen_not_divisible():
    with pytest.raises(NotDivisible):
        coarsen(ScalarGrid(np.zeros((4, 5))), 1)


def test_lsg_round_trip_is_exact():
    grid = ScalarGrid(rng.uniform(-1, 1, (3, 4, 2)), h=0.1)
    assert parse_lsg(format_lsg(grid)) == grid


def test_lsg_layout_is_x_fastest():
    grid = parse_lsg("LSG 2 3 2 0.5\n0 1 2\n3 4 5\n")
    assert grid.values[2, 0] == 2.0
    assert grid.values[0, 1] == 3.0
    assert grid.h == 0.5


@pytest.mark.parametrize("text, line", [
    ("GRID 2 2 2 1.0\n0 0 0 0\n", 1),
    ("LSG 2 2 2 1.0\n0 0 x 0\n", 2),
    ("LSG 2 2 2 1.0\n0 0 0\n", 2),
    ("LSG 2 2 2 1.0\n0 0\n0 0 7\n", 3),
    ("LSG 2 2 2 -1\n0 0 0 0\n", 1),
])
def test_lsg_parse_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse_lsg(text)
    assert e.value.line == line


def test_lsg_parse_error_offset():
    with pytest.raises(ParseError) as e:
        parse_lsg("LSG 2 2 2 1.0\n0 nan 0 0\n")
    assert e.value.offset == 1


def test_lsg_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        parse_lsg("LSG 3 2 2 1.0\n0 0 0 0\n")
    with pytest.raises(DimensionMismatch):
        parse_lsg("LSG 4 2 2 2 2 1.0\n")


def test_csv_round_trip():
    grid = ScalarGrid(rng.uniform(-1, 1, (3, 3)))
    assert parse_csv(format_csv(grid)) == grid


def test_csv_errors():
    with pytest.raises(ParseError):
        parse_csv("x,y,value\n0,0,1\n")
    with pytest.raises(ParseError):
        parse_csv("i,j,value\n0,0,1\n1,1,1\n")
    with pytest.raises(DimensionMismatch):
        parse_csv("i,j,value\n0,0,1,4\n")


def test_read_write_by_extension(tmp_path):
    grid = ScalarGrid(rng.uniform(-1, 1, (3, 3)))
    for name in ("grid.lsg", "grid.csv"):
        path = str(tmp_path / name)
        write_grid(grid, path)
        assert read_grid(path) == grid
    assert (tmp_path / "grid.csv").read_text().startswith("i,j,value")


def test_lcg_is_reproducible():
    a, b = Lcg(7), Lcg(7)
    assert [a.next() for _ in range(3)] == [b.next() for _ in range(3)]
    assert Lcg(0).next() == 1442695040888963407
    assert 0.0 <= Lcg(1).uniform() < 1.0


def test_node_coordinates():
    x, y = node_coordinates(3, 2)
    assert x[2, 0] == 1.0 and y[0, 2] == 1.0


def test_generate_circle():
    grid = generate(Circle((0.5, 0.5), 0.25), 5)
    assert grid.values[2, 2] == pytest.approx(0.25)
    assert grid.values[0, 0] == pytest.approx(0.25 - math.sqrt(0.5))


@pytest.mark.parametrize("spec", [Circle((0.9, 0.5), 0.25), Sphere((0.5, 0.5, 0.5), 0.0),
                                  ZalesakDisk((0.5, 0.5), 0.4, 0.9, 0.6), RandomCircles(0, 1)])
def test_spec_out_of_domain(spec):
    with pytest.raises(SpecOutOfDomain):
        generate(spec, 9)


def test_exact_measures():
    assert exact_measure(Circle((0.5, 0.5), 0.25)) == pytest.approx(math.pi / 16)
    assert exact_measure(Sphere((0.5, 0.5, 0.5), 0.25)) == pytest.approx(math.pi / 48)
    r, d = 0.25, 0.4
    lens = 2 * r * r * math.acos(d / (2 * r)) - 0.5 * d * math.sqrt(4 * r * r - d * d)
    assert lens_area(r, r, d) == pytest.approx(lens)
    assert exact_measure(make_spec("double-circle")) == pytest.approx(2 * math.pi * r * r - lens)


def test_lens_limits():
    assert lens_area(0.2, 0.1, 0.5) == 0.0
    assert lens_area(0.2, 0.1, 0.05) == pytest.approx(math.pi * 0.01)
    assert lens_volume(0.2, 0.2, 0.0) == pytest.approx(4.0 / 3.0 * math.pi * 0.008)
    # two equal caps of height r - d/2
    r, d = 0.2, 0.2
    cap = math.pi * (r - d / 2) ** 2 * (2 * r + d / 2) / 3
    assert lens_volume(r, r, d) == pytest.approx(2 * cap)


def test_zalesak_measure():
    disk = ZalesakDisk((0.5, 0.5), 0.4, 0.2, 0.6)
    # notch top sits 0.2 above the center, half width 0.1
    notch = 0.2 * 0.2 + 0.1 * math.sqrt(0.15) + 0.16 * math.asin(0.25)
    assert exact_measure(disk) == pytest.approx(math.pi * 0.16 - notch)


def test_zalesak_tall_notch_uses_quadrature():
    disk = ZalesakDisk((0.5, 0.5), 0.4, 0.4, 0.79)
    assert 0.0 < exact_measure(disk) < math.pi * 0.16


def test_random_circles_are_seeded():
    assert RandomCircles(5, 42).circles == RandomCircles(5, 42).circles
    assert RandomCircles(5, 42).circles != RandomCircles(5, 43).circles
    for circle in RandomCircles(20, 1).circles:
        circle.validate()
    with pytest.raises(SpecOutOfDomain):
        exact_measure(RandomCircles(3, 1))


def test_make_spec():
    assert make_spec("circle") == Circle((0.5, 0.5), 0.25)
    assert make_spec("sphere", r=0.1).r == 0.1
    assert isinstance(make_spec("double-sphere"), Union)
    with pytest.raises(SpecOutOfDomain):
        make_spec("torus")
    with pytest.raises(SpecOutOfDomain):
        make_spec("sphere", center=(0.5, 0.5))
