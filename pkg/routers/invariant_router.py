import click

from models.report_models import Command
from routers.common import braid_argument, braid_options, limit_options, respond, settings_for
from services.braid_service import exponent_sum, permutation
from services.burau_service import alexander
from services.kauffman_service import jones, kauffman_bracket
from services.knotting_service import knottedness_verdict


@click.command("inv-jones")
@braid_options
@limit_options
@click.pass_context
def inv_jones(ctx, strands, word, path, **limits):
    """Jones polynomial of the braid closure via the Kauffman bracket."""
    settings = settings_for(ctx, **limits)

    def action():
        b = braid_argument(strands, word, path)
        return {
            "crossings": len(b),
            "writhe": exponent_sum(b),
            "components": len(permutation(b).cycles()),
            "bracket": kauffman_bracket(b, max_crossings=settings.max_crossings),
            "jones": jones(b, max_crossings=settings.max_crossings),
        }

    respond(ctx, settings, Command.INV_JONES, {"strands": strands, "word": word, "file": path}, action)


@click.command("inv-alexander")
@braid_options
@click.option("--verdict", is_flag=True, help="Also run the knottedness checks.")
@limit_options
@click.pass_context
def inv_alexander(ctx, strands, word, path, verdict, **limits):
    """Alexander polynomial of a knot closure from the reduced Burau matrix."""
    settings = settings_for(ctx, **limits)

    def action():
        b = braid_argument(strands, word, path)
        results = {"crossings": len(b), "alexander": alexander(b)}
        if verdict:
            assessment = knottedness_verdict(b, max_crossings=settings.max_crossings, max_orbit=settings.max_orbit)
            results["verdict"] = assessment.verdict
            results["certificate"] = assessment.certificate
        return results

    inputs = {"strands": strands, "word": word, "file": path, "verdict": verdict}
    respond(ctx, settings, Command.INV_ALEXANDER, inputs, action)


commands = [inv_jones, inv_alexander]
