import os

import click

from config import DIAGRAM_DIR
from models.report_models import Command
from routers.common import braid_argument, braid_options, limit_options, respond, settings_for
from services import diagram_service
from services.report_service import inputs_digest


@click.command("draw")
@braid_options
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="SVG file to write.")
@limit_options
@click.pass_context
def draw(ctx, strands, word, path, out, **limits):
    """Render the closed braid as an SVG diagram."""
    settings = settings_for(ctx, **limits)
    inputs = {"strands": strands, "word": word, "file": path, "out": out}

    def action():
        b = braid_argument(strands, word, path)
        target = out or os.path.join(DIAGRAM_DIR, f"braid-{inputs_digest({'braid': b})[:12]}.svg")
        summary = diagram_service.draw(b, target)
        return {**summary, "svg": target}

    respond(ctx, settings, Command.DRAW, inputs, action)


commands = [draw]
