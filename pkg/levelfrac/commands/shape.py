import click
import sys
import levelfrac.utilities.commands as utl_cmds
import levelfrac.core.messages.messages as msg
from levelfrac.core.exceptions.exceptions import LevelFracError
from levelfrac.core.grid.shapes import SHAPE_KINDS, make_spec, generate
from levelfrac.core.grid.files import write_grid

CMD_NAME = "shape"


def shape_options(func):
    """Options describing an analytic shape, shared by the commands that generate one"""
    options = [
        click.option("-k", "--kind", type=click.Choice(SHAPE_KINDS), default="circle", show_default=True,
                     help="Shape to generate."),
        click.option("--center", callback=utl_cmds.parse_point, metavar="<x,y[,z]>", help="Center of the shape."),
        click.option("--center2", callback=utl_cmds.parse_point, metavar="<x,y[,z]>",
                     help="Second center of double shapes."),
        click.option("--r", "radius", type=float, help="Radius."),
        click.option("--notch-w", type=float, default=0.2, show_default=True, help="Zalesak notch width."),
        click.option("--notch-h", type=float, default=0.6, show_default=True, help="Zalesak notch height."),
        click.option("--count", type=int, default=15, show_default=True, help="Number of random circles."),
        click.option("--seed", type=int, default=7, show_default=True, help="Random circles seed."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def spec_from_options(kind, center, center2, radius, notch_w, notch_h, count, seed):
    return make_spec(kind, center=center, center2=center2, r=radius, notch_w=notch_w, notch_h=notch_h,
                     count=count, seed=seed)


@click.command()
@shape_options
@click.option("-n", "--n", "nodes", type=click.IntRange(min=2), default=65, show_default=True,
              help="Nodes per axis.")
@click.option("-o", "--out", default="-", show_default=True, help="Output grid (.lsg or .csv).", metavar="<filename>")
@click.option("-l", "--log", help="Log to file instead of printing to stderr.", metavar="<filename>")
@click.pass_context
def shape(ctx: click.core.Context, kind: str, center: tuple, center2: tuple, radius: float, notch_w: float,
          notch_h: float, count: int, seed: int, nodes: int, out: str, log: str) -> None:
    """
    Sample an analytic shape's signed distance on a grid.
    \f

    :param click.core.Context ctx: click context
    :param str kind: shape kind
    :param tuple center: shape center
    :param tuple center2: second center
    :param float radius: radius
    :param float notch_w: notch width
    :param float notch_h: notch height
    :param int count: random circles count
    :param int seed: random circles seed
    :param int nodes: nodes per axis
    :param str out: output filename
    :param str log: log filename
    :return: None
    """
    log_fname = utl_cmds.open_log(log, CMD_NAME)
    vrb = utl_cmds.get_verbose_from_context(ctx)

    try:
        spec = spec_from_options(kind, center, center2, radius, notch_w, notch_h, count, seed)
        msg.Prints.verbose("Generating {} on {} nodes per axis".format(spec, nodes), vrb, log_fname, CMD_NAME)
        grid = generate(spec, nodes)
        write_grid(grid, utl_cmds.output_path(out))
    except LevelFracError as e:
        utl_cmds.fail(e, log_fname, CMD_NAME)

    msg.Prints.verbose("Wrote {}".format(grid), vrb, log_fname, CMD_NAME)
    sys.exit(0)
