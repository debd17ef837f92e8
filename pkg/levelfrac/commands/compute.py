import click
import sys
import numpy as np
import levelfrac.utilities.commands as utl_cmds
import levelfrac.core.messages.messages as msg
from levelfrac.core.exceptions.exceptions import LevelFracError, Unresolved
from levelfrac.core.fractions.fractions import METHODS, compute_fractions
from levelfrac.core.grid.files import read_grid
from levelfrac.core.metrics.metrics import total_volume

CMD_NAME = "compute"


def format_fractions(grid, field, method: str) -> list:
    """
    CSV lines `i,j[,k],alpha[,lo,hi]` in cell order (x fastest), then `total,<value>`.

    :return list: lines
    """
    axes = ["i", "j", "k"][:grid.dim]
    header = axes + ["alpha"] + (["lo", "hi"] if method == "oracle" else [])
    lines = [",".join(header)]
    shape = grid.cell_shape
    for rev in np.ndindex(*shape[::-1]):
        index = rev[::-1]
        row = [str(i) for i in index] + [repr(float(field.alpha[index]))]
        if method == "oracle":
            row += [repr(float(field.lo[index])), repr(float(field.hi[index]))]
        lines.append(",".join(row))
    lines.append("total,{}".format(repr(total_volume(grid, field.alpha))))
    return lines


@click.command()
@click.option("-i", "--in", "infile", required=True,
              type=click.Path(exists=True, dir_okay=False, allow_dash=True),
              help="Input grid (.lsg or .csv).", metavar="<filename>")
@click.option("-o", "--out", default="-", show_default=True, help="Output CSV.", metavar="<filename>")
@click.option("-m", "--method", type=click.Choice(METHODS), help="Volume fraction method.")
@click.option("-t", "--threads", type=click.IntRange(min=0), help="Worker threads, 0 for one per CPU.")
@click.option("--strict/--no-strict", default=None, help="Exit with status 4 if any cell is unresolved.")
@click.option("-l", "--log", help="Log to file instead of printing to stderr.", metavar="<filename>")
@click.pass_context
def compute(ctx: click.core.Context, infile: str, out: str, method: str, threads: int, strict: bool,
            log: str) -> None:
    """
    Compute the volume fraction of every cell of a grid.
    \f

    :param click.core.Context ctx: click context
    :param str infile: input grid
    :param str out: output CSV
    :param str method: analytic, linear or oracle
    :param int threads: worker threads
    :param bool strict: fail on unresolved cells
    :param str log: log filename
    :return: None
    """
    log_fname = utl_cmds.open_log(log, CMD_NAME)
    vrb = utl_cmds.get_verbose_from_context(ctx)
    cfg = utl_cmds.get_configs_from_context(ctx)

    method = method or cfg["default_method"]
    strict = cfg["strict"] if strict is None else strict

    try:
        grid = read_grid(infile)
        msg.Prints.verbose("Read {}".format(grid), vrb, log_fname, CMD_NAME)
        field = compute_fractions(grid, method, cfg.get_int("threads", threads),
                                  subdivision_depth=cfg.get_int("subdivision_depth"),
                                  oracle_depth=cfg.get_int("oracle_depth"))

        unresolved = field.unresolved if method == "analytic" else []
        if unresolved:
            msg.Prints.warning("{} cells resolved only to oracle bounds, first {}".format(
                len(unresolved), unresolved[0]), log_fname, CMD_NAME)
            if strict:
                raise Unresolved("{} unresolved cells".format(len(unresolved)))

        with click.open_file(utl_cmds.output_path(out), "w") as f:
            f.write("\n".join(format_fractions(grid, field, method)) + "\n")
    except LevelFracError as e:
        utl_cmds.fail(e, log_fname, CMD_NAME)

    msg.Prints.verbose("Done", vrb, log_fname, CMD_NAME)
    sys.exit(0)
