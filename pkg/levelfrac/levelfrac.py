#!/usr/bin/env python3
import click
from levelfrac import __version__, __name_desc__
from levelfrac.core.config.config import Config
from levelfrac.commands.shape import shape
from levelfrac.commands.compute import compute
from levelfrac.commands.converge import converge
from levelfrac.commands.consistency import consistency
from levelfrac.commands.refine import refine


# CLICK COMMANDS
@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option("-v", "--verbose", is_flag=True, help="Execute command in verbose mode.")
@click.version_option(__version__, "-V", "--version", prog_name=__name_desc__,)
@click.pass_context
def levelfrac(ctx: click.core.Context, verbose: bool) -> None:
    """
    \b
    Levelfrac - Level-set Volume Fractions:
        Exact volume fractions of the cells of a 2D/3D level-set grid under
        bilinear/trilinear interpolation, with a first-order linear baseline,
        certified bounds, and convergence and refinement-consistency studies.

    \f

    :param click.core.Context ctx: click context
    :param bool verbose: show verbose messages
    :return: None
    """

    # Check that context object type is dict
    ctx.ensure_object(dict)

    # Add config object and verbose flag to context
    cfg = Config()
    cfg.load()
    ctx.obj["configurations"] = cfg
    ctx.obj["verbose"] = verbose


# Add levelfrac commands
levelfrac.add_command(shape)
levelfrac.add_command(compute)
levelfrac.add_command(converge)
levelfrac.add_command(consistency)
levelfrac.add_command(refine)


# MAIN
if __name__ == "__main__":
    levelfrac()
