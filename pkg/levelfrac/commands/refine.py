import click
import sys
import levelfrac.utilities.commands as utl_cmds
import levelfrac.core.messages.messages as msg
from levelfrac.core.exceptions.exceptions import LevelFracError
from levelfrac.core.grid.files import read_grid, write_grid
from levelfrac.core.grid.grid import refine as refine_grid, coarsen as coarsen_grid

CMD_NAME = "refine"


@click.command()
@click.option("-i", "--in", "infile", required=True,
              type=click.Path(exists=True, dir_okay=False, allow_dash=True),
              help="Input grid (.lsg or .csv).", metavar="<filename>")
@click.option("-o", "--out", default="-", show_default=True, help="Output grid (.lsg or .csv).",
              metavar="<filename>")
@click.option("--levels", type=click.IntRange(min=0), default=1, show_default=True, help="Number of levels.")
@click.option("-c", "--coarsen", is_flag=True, help="Coarsen instead of refining.")
@click.option("-l", "--log", help="Log to file instead of printing to stderr.", metavar="<filename>")
@click.pass_context
def refine(ctx: click.core.Context, infile: str, out: str, levels: int, coarsen: bool, log: str) -> None:
    """
    Refine a grid by multilinear interpolation, or coarsen it by subsampling.
    \f

    :param click.core.Context ctx: click context
    :param str infile: input grid
    :param str out: output grid
    :param int levels: number of levels
    :param bool coarsen: coarsen instead of refining
    :param str log: log filename
    :return: None
    """
    log_fname = utl_cmds.open_log(log, CMD_NAME)
    vrb = utl_cmds.get_verbose_from_context(ctx)

    try:
        grid = read_grid(infile)
        result = coarsen_grid(grid, levels) if coarsen else refine_grid(grid, levels)
        msg.Prints.verbose("{} -> {}".format(grid, result), vrb, log_fname, CMD_NAME)
        write_grid(result, utl_cmds.output_path(out))
    except LevelFracError as e:
        utl_cmds.fail(e, log_fname, CMD_NAME)

    sys.exit(0)
