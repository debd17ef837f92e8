import click
import sys
import numpy as np
import levelfrac.utilities.commands as utl_cmds
import levelfrac.core.messages.messages as msg
from levelfrac.commands.shape import shape_options, spec_from_options
from levelfrac.core.exceptions.exceptions import LevelFracError
from levelfrac.core.fractions.fractions import compute_fractions
from levelfrac.core.grid.shapes import generate, exact_measure
from levelfrac.core.metrics.metrics import total_volume, convergence_order

CMD_NAME = "converge"

DEFAULT_LEVELS = {2: [17, 33, 65, 129, 257], 3: [9, 17, 33, 65]}


def measure_errors(spec, nodes: list, threads: int, subdivision_depth: int) -> list:
    """
    Absolute total-volume errors of the analytic and linear methods per resolution, and
    the largest per-cell gap between the linear and the analytic fraction.

    :return list: (h, error_analytic, error_linear, error_linear_cell) rows
    """
    exact = exact_measure(spec)
    rows = []
    for n in nodes:
        grid = generate(spec, n)
        fields = [compute_fractions(grid, method, threads, subdivision_depth=subdivision_depth).alpha
                  for method in ("analytic", "linear")]
        errors = [abs(total_volume(grid, alpha) - exact) for alpha in fields]
        rows.append((grid.h, errors[0], errors[1], float(np.abs(fields[1] - fields[0]).max())))
    return rows


@click.command()
@shape_options
@click.option("--levels", callback=utl_cmds.parse_int_list, metavar="<n1,n2,...>",
              help="Nodes per axis of each resolution, increasing.")
@click.option("-t", "--threads", type=click.IntRange(min=0), help="Worker threads, 0 for one per CPU.")
@click.option("-o", "--out", default="-", show_default=True, help="Output CSV.", metavar="<filename>")
@click.option("-l", "--log", help="Log to file instead of printing to stderr.", metavar="<filename>")
@click.pass_context
def converge(ctx: click.core.Context, kind: str, center: tuple, center2: tuple, radius: float, notch_w: float,
             notch_h: float, count: int, seed: int, levels: list, threads: int, out: str, log: str) -> None:
    """
    Total-volume convergence of the analytic and linear methods against the exact measure.
    \f

    :param click.core.Context ctx: click context
    :param list levels: nodes per axis per resolution
    :param int threads: worker threads
    :param str out: output CSV
    :param str log: log filename
    :return: None
    """
    log_fname = utl_cmds.open_log(log, CMD_NAME)
    vrb = utl_cmds.get_verbose_from_context(ctx)
    cfg = utl_cmds.get_configs_from_context(ctx)

    try:
        spec = spec_from_options(kind, center, center2, radius, notch_w, notch_h, count, seed)
        nodes = levels or DEFAULT_LEVELS[spec.dim]
        msg.Prints.verbose("Convergence of {} over {}".format(spec, nodes), vrb, log_fname, CMD_NAME)

        rows = measure_errors(spec, nodes, cfg.get_int("threads", threads), cfg.get_int("subdivision_depth"))
        h = [r[0] for r in rows]
        analytic = convergence_order(h, [r[1] for r in rows])
        linear = convergence_order(h, [r[2] for r in rows])
        linear_cell = convergence_order(h, [r[3] for r in rows])

        lines = ["h,error_analytic,error_linear,error_linear_cell"]
        lines += [",".join(repr(float(v)) for v in row) for row in rows]
        lines.append("order,{},{},{}".format(repr(analytic.fitted_order), repr(linear.fitted_order),
                                             repr(linear_cell.fitted_order)))
        with click.open_file(utl_cmds.output_path(out), "w") as f:
            f.write("\n".join(lines) + "\n")
    except LevelFracError as e:
        utl_cmds.fail(e, log_fname, CMD_NAME)

    msg.Prints.verbose("Orders: analytic {:.3f}, linear {:.3f}, linear per cell {:.3f}".format(
        analytic.fitted_order, linear.fitted_order, linear_cell.fitted_order), vrb, log_fname, CMD_NAME)
    sys.exit(0)
