import click
import sys
import levelfrac.utilities.commands as utl_cmds
import levelfrac.core.messages.messages as msg
from levelfrac.commands.shape import shape_options, spec_from_options
from levelfrac.core.exceptions.exceptions import LevelFracError
from levelfrac.core.fractions.fractions import compute_fractions
from levelfrac.core.grid.files import read_grid
from levelfrac.core.grid.grid import refine
from levelfrac.core.grid.shapes import generate
from levelfrac.core.metrics.metrics import ErrorNorms, aggregate_fine_to_coarse, error_norms

CMD_NAME = "consistency"
METHODS = ("analytic", "linear")


def consistency_norms(grid, method: str, max_level: int, threads: int, subdivision_depth: int) -> list:
    """
    Error norms between the coarse fractions and the aggregated fractions of each refinement.

    :return list: (level, ErrorNorms) pairs for levels 0..max_level
    """
    coarse = compute_fractions(grid, method, threads, subdivision_depth=subdivision_depth).alpha
    rows = [(0, ErrorNorms(0.0, 0.0, 0.0))]
    for level in range(1, max_level + 1):
        fine = compute_fractions(refine(grid, level), method, threads, subdivision_depth=subdivision_depth).alpha
        rows.append((level, error_norms(coarse, aggregate_fine_to_coarse(fine, level))))
    return rows


@click.command()
@click.option("-i", "--in", "infile", type=click.Path(exists=True, dir_okay=False, allow_dash=True),
              help="Input grid; a shape is generated when omitted.", metavar="<filename>")
@shape_options
@click.option("-n", "--n", "nodes", type=click.IntRange(min=2), default=21, show_default=True,
              help="Nodes per axis of a generated shape.")
@click.option("-L", "--max-level", type=click.IntRange(min=0), default=5, show_default=True,
              help="Finest refinement level.")
@click.option("-t", "--threads", type=click.IntRange(min=0), help="Worker threads, 0 for one per CPU.")
@click.option("-o", "--out", default="-", show_default=True, help="Output CSV.", metavar="<filename>")
@click.option("-l", "--log", help="Log to file instead of printing to stderr.", metavar="<filename>")
@click.pass_context
def consistency(ctx: click.core.Context, infile: str, kind: str, center: tuple, center2: tuple, radius: float,
                notch_w: float, notch_h: float, count: int, seed: int, nodes: int, max_level: int, threads: int,
                out: str, log: str) -> None:
    """
    Refinement consistency norms of the analytic and linear methods.
    \f

    :param click.core.Context ctx: click context
    :param str infile: input grid
    :param int nodes: nodes per axis of a generated shape
    :param int max_level: finest refinement level
    :param int threads: worker threads
    :param str out: output CSV
    :param str log: log filename
    :return: None
    """
    log_fname = utl_cmds.open_log(log, CMD_NAME)
    vrb = utl_cmds.get_verbose_from_context(ctx)
    cfg = utl_cmds.get_configs_from_context(ctx)

    try:
        if infile:
            grid = read_grid(infile)
        else:
            grid = generate(spec_from_options(kind, center, center2, radius, notch_w, notch_h, count, seed), nodes)
        msg.Prints.verbose("Consistency of {} up to level {}".format(grid, max_level), vrb, log_fname, CMD_NAME)

        lines = ["method,level,L1,L2,Linf"]
        for method in METHODS:
            for level, norms in consistency_norms(grid, method, max_level, cfg.get_int("threads", threads),
                                                  cfg.get_int("subdivision_depth")):
                lines.append("{},{},{},{},{}".format(method, level, repr(norms.l1), repr(norms.l2),
                                                     repr(norms.linf)))
        with click.open_file(utl_cmds.output_path(out), "w") as f:
            f.write("\n".join(lines) + "\n")
    except LevelFracError as e:
        utl_cmds.fail(e, log_fname, CMD_NAME)

    sys.exit(0)
