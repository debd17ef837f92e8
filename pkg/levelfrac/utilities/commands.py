import click
import os
import sys
import levelfrac.core.messages.messages as msg
from srblib import abs_path
from levelfrac.core.config.config import Config
from levelfrac.core.exceptions.exceptions import LevelFracError


def get_configs_from_context(ctx: click.core.Context) -> Config:
    """
    Return configuration object from context

    :param click.core.Context ctx: click context
    :return Config: configuration
    """
    return ctx.obj["configurations"]


def get_verbose_from_context(ctx: click.core.Context) -> bool:
    """
    Return verbose flag from context

    :param click.core.Context ctx: click context
    :return bool: verbose flag
    """
    return ctx.obj["verbose"]


def validate_log_filename(filename: str, cmd_name: str) -> str:
    """
    Returns the absolute pathname of the log file if it exists and is writable
    OR
    if it doesn't exist but is created successfully. Log lines are appended.

    :param filename: log filename
    :param cmd_name: command name
    :return: absolute pathname, empty on failure
    """
    log_fname = ""

    if os.path.isfile(filename) and os.access(filename, os.W_OK):
        return abs_path(filename)
    # it exists but it's a directory or it's not writable
    elif os.path.exists(filename):
        msg.Prints.warning("file {} is not a writable file".format(filename), log_fname, cmd_name)
        return log_fname
    else:
        try:
            with open(filename, "w"):
                pass
        except PermissionError:
            msg.Prints.warning("not enough privileges to create {}".format(filename), log_fname, cmd_name)
            return log_fname
        except FileNotFoundError:
            msg.Prints.warning("please enter a valid pathname", log_fname, cmd_name)
            return log_fname
        log_fname = abs_path(filename)

    return log_fname


def open_log(log: str, cmd_name: str) -> str:
    """
    Validate the --log option, exiting with status 1 when the file cannot be used.

    :param str log: --log value, may be None
    :param str cmd_name: command name
    :return str: absolute log filename or empty string
    """
    if not log:
        return ""
    log_fname = validate_log_filename(log, cmd_name)
    if not log_fname:
        sys.exit(1)
    return log_fname


def output_path(out: str) -> str:
    """
    Absolute output pathname; '-' stays stdout.

    :param str out: --out value
    :return str: pathname
    """
    return out if out == "-" else abs_path(out)


def fail(err: LevelFracError, log_fname: str, cmd_name: str) -> None:
    """
    Report a levelfrac error and exit with its status code.

    :param LevelFracError err: error
    :param str log_fname: log filename
    :param str cmd_name: command name
    :return: None
    """
    msg.Prints.error("{}: {}".format(err.__class__.__name__, err.msg), log_fname, cmd_name)
    sys.exit(err.exit_code)


def parse_point(ctx: click.core.Context, param: click.core.Parameter, value: str) -> tuple:
    """
    Click callback turning 'x,y[,z]' into a tuple of floats.

    :return tuple: coordinates, None when the option is absent
    """
    if value is None:
        return None
    try:
        point = tuple(float(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter("expected comma separated numbers, got '{}'".format(value))
    if len(point) not in (2, 3):
        raise click.BadParameter("expected 2 or 3 coordinates, got {}".format(len(point)))
    return point


def parse_int_list(ctx: click.core.Context, param: click.core.Parameter, value: str) -> list:
    """
    Click callback turning 'n1,n2,...' into a list of integers.

    :return list: integers, None when the option is absent
    """
    if value is None:
        return None
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise click.BadParameter("expected comma separated integers, got '{}'".format(value))
