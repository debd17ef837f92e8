from click.testing import CliRunner
from levelfrac.levelfrac import levelfrac
from levelfrac import __version__, __name_desc__
from tests import *

runner = CliRunner()


def test_levelfrac_help():
    result = runner.invoke(levelfrac, ["--help"])
    assert result.exit_code == 0
    for cmd in ("shape", "compute", "converge", "consistency", "refine"):
        assert cmd in result.output


def test_levelfrac_version():
    result = runner.invoke(levelfrac, ["--version"])
    assert result.exit_code == 0
    assert result.output == "{}, version {}\n".format(__name_desc__, __version__)


def test_levelfrac_version_with_command():
    result = runner.invoke(levelfrac, ["--version", "compute"])
    assert result.exit_code == 0
    assert result.output == "{}, version {}\n".format(__name_desc__, __version__)


def test_levelfrac_verbose_missing_command():
    result = runner.invoke(levelfrac, ["--verbose"])
    assert result.exit_code != 0
    assert MISSING_COMMAND_ERROR_TEMPLATE in result.output


def test_levelfrac_missing_command():
    # prints the help text
    result = runner.invoke(levelfrac)
    assert "Usage" in result.output


def test_levelfrac_wrong_option():
    fake_opt = "--fake-option"
    result = runner.invoke(levelfrac, [fake_opt])
    assert result.exit_code != 0
    # click 7 prints "no such option: --x", click 8 "No such option '--x'"
    assert NO_SUCH_OPTION_ERROR_TEMPLATE in result.output.lower()
    assert fake_opt in result.output


def test_levelfrac_wrong_command():
    result = runner.invoke(levelfrac, ["fake-command"])
    assert result.exit_code != 0
    assert NO_SUCH_COMMAND_ERROR_TEMPLATE in result.output.lower()
