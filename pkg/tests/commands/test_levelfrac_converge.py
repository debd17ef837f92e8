import pytest
from click.testing import CliRunner
from levelfrac.levelfrac import levelfrac

runner = CliRunner()


def read_orders(path: str) -> tuple:
    with open(path) as f:
        lines = f.read().strip().splitlines()
    assert lines[0] == "h,error_analytic,error_linear,error_linear_cell"
    order = lines[-1].split(",")
    assert order[0] == "order"
    return lines[1:-1], float(order[1]), float(order[2]), float(order[3])


def test_levelfrac_converge_help():
    result = runner.invoke(levelfrac, ["converge", "--help"])
    assert result.exit_code == 0


def test_levelfrac_converge_small_suite():
    with runner.isolated_filesystem():
        result = runner.invoke(levelfrac, ["converge", "--levels", "9,17,33", "-o", "conv.csv"])
        assert result.exit_code == 0
        rows, _, _, _ = read_orders("conv.csv")
        assert len(rows) == 3
        assert float(rows[0].split(",")[0]) == 0.125
        # the linear fraction of some cut cell always differs from the exact one
        assert all(float(row.split(",")[3]) > 0.0 for row in rows)


def test_levelfrac_converge_single_level():
    result = runner.invoke(levelfrac, ["converge", "--levels", "9"])
    assert result.exit_code == 2


def test_levelfrac_converge_bad_levels():
    result = runner.invoke(levelfrac, ["converge", "--levels", "9,x"])
    assert result.exit_code != 0


@pytest.mark.slow
def test_levelfrac_converge_circle_orders():
    with runner.isolated_filesystem():
        result = runner.invoke(levelfrac, ["converge", "--kind", "circle", "--levels", "17,33,65,129,257",
                                           "-o", "conv.csv"])
        assert result.exit_code == 0
        _, analytic, linear, linear_cell = read_orders("conv.csv")
        assert 1.7 <= analytic <= 2.3
        # first order per cell, second order in the total
        assert 0.7 <= linear_cell <= 1.3
        assert linear > 1.5


@pytest.mark.slow
def test_levelfrac_converge_sphere_order():
    with runner.isolated_filesystem():
        result = runner.invoke(levelfrac, ["converge", "--kind", "sphere", "-o", "conv.csv"])
        assert result.exit_code == 0
        _, analytic, _, _ = read_orders("conv.csv")
        assert 1.7 <= analytic <= 2.3


@pytest.mark.slow
@pytest.mark.parametrize("kind", ["double-circle", "zalesak"])
def test_levelfrac_converge_benchmark_shapes(kind):
    with runner.isolated_filesystem():
        result = runner.invoke(levelfrac, ["converge", "--kind", kind, "-o", "conv.csv"])
        assert result.exit_code == 0
        _, analytic, _, _ = read_orders("conv.csv")
        assert analytic > 1.5
