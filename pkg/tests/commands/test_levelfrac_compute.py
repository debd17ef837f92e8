import json
import numpy as np
import pytest
from click.testing import CliRunner
from levelfrac.levelfrac import levelfrac
from levelfrac.core.grid.files import write_grid
from levelfrac.core.grid.grid import ScalarGrid
from tests import GOLDEN_CELL, GOLDEN_ALPHA

runner = CliRunner()


def golden_grid() -> ScalarGrid:
    phi00, phi10, phi01, phi11 = GOLDEN_CELL
    return ScalarGrid([[phi00, phi01], [phi10, phi11]], h=1.0)


def ambiguous_grid() -> ScalarGrid:
    # phi = (0.3 - x)(0.7 - y): the interior saddle stays ambiguous under subdivision
    face = [[(0.3 - i) * (0.7 - j) for j in (0, 1)] for i in (0, 1)]
    return ScalarGrid(np.stack([face, face], axis=2), h=1.0)


def read_rows(text: str) -> list:
    return [line.split(",") for line in text.strip().splitlines()]


def test_levelfrac_compute_help():
    result = runner.invoke(levelfrac, ["compute", "--help"])
    assert result.exit_code == 0


def test_levelfrac_compute_missing_input():
    result = runner.invoke(levelfrac, ["compute"])
    assert result.exit_code != 0


def test_levelfrac_compute_golden_cell():
    with runner.isolated_filesystem():
        write_grid(golden_grid(), "golden.lsg")
        result = runner.invoke(levelfrac, ["compute", "--in", "golden.lsg", "--out", "alpha.csv"])
        assert result.exit_code == 0
        with open("alpha.csv") as f:
            rows = read_rows(f.read())
        assert rows[0] == ["i", "j", "alpha"]
        assert rows[1][:2] == ["0", "0"]
        assert float(rows[1][2]) == pytest.approx(GOLDEN_ALPHA, abs=1e-12)
        assert rows[-1][0] == "total"


def test_levelfrac_compute_oracle_columns():
    with runner.isolated_filesystem():
        write_grid(golden_grid(), "golden.csv")
        result = runner.invoke(levelfrac, ["compute", "-i", "golden.csv", "-m", "oracle", "-o", "alpha.csv"])
        assert result.exit_code == 0
        with open("alpha.csv") as f:
            rows = read_rows(f.read())
        assert rows[0] == ["i", "j", "alpha", "lo", "hi"]
        assert float(rows[1][3]) <= GOLDEN_ALPHA <= float(rows[1][4])


def test_levelfrac_compute_parse_error():
    with runner.isolated_filesystem():
        with open("bad.lsg", "w") as f:
            f.write("LSG 2 2 2 1.0\n0 1 x 3\n")
        result = runner.invoke(levelfrac, ["compute", "--in", "bad.lsg"])
        assert result.exit_code == 3
        assert "line 2" in result.output


def test_levelfrac_compute_strict_unresolved(isolated_config):
    isolated_config.parent.mkdir(parents=True)
    isolated_config.write_text(json.dumps({"subdivision_depth": 1}))
    with runner.isolated_filesystem():
        write_grid(ambiguous_grid(), "saddle.lsg")
        result = runner.invoke(levelfrac, ["compute", "--in", "saddle.lsg", "--no-strict", "-o", "a.csv"])
        assert result.exit_code == 0
        result = runner.invoke(levelfrac, ["compute", "--in", "saddle.lsg", "--strict", "-o", "a.csv"])
        assert result.exit_code == 4


def test_levelfrac_compute_log_file():
    with runner.isolated_filesystem():
        write_grid(golden_grid(), "golden.lsg")
        result = runner.invoke(levelfrac, ["-v", "compute", "-i", "golden.lsg", "-o", "a.csv", "-l", "run.log"])
        assert result.exit_code == 0
        with open("run.log") as f:
            assert "| compute | INFO |" in f.read()
