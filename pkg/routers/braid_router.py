import click

from models.report_models import Command
from routers.common import braid_argument, braid_options, limit_options, respond, settings_for
from services.braid_service import cable_compose, exponent_sum, is_cyclic, permutation
from services.conjugacy_service import are_conjugate, is_achiral_braid, pure_witness
from services.garside_service import canonical_word, normal_form


@click.command("braid-normalize")
@braid_options
@limit_options
@click.pass_context
def braid_normalize(ctx, strands, word, path, **limits):
    """Garside left normal form."""
    settings = settings_for(ctx, **limits)

    def action():
        b = braid_argument(strands, word, path)
        gc = normal_form(b)
        return {
            "strands": b.strands,
            "inf": gc.inf,
            "canonical_length": gc.canonical_length,
            "sup": gc.sup,
            "factors": [list(f.images) for f in gc.factors],
            "normal_word": canonical_word(gc),
            "permutation": permutation(b),
            "exponent_sum": exponent_sum(b),
        }

    respond(ctx, settings, Command.BRAID_NORMALIZE, {"strands": strands, "word": word, "file": path}, action)


@click.command("braid-conjugate")
@braid_options
@click.option("--other", required=True, help="Word of the second braid on the same strands.")
@limit_options
@click.pass_context
def braid_conjugate(ctx, strands, word, path, other, **limits):
    """Decide whether two braids are conjugate and print a witness."""
    settings = settings_for(ctx, **limits)

    def action():
        a = braid_argument(strands, word, path)
        b = braid_argument(a.strands, other, None, name="other braid")
        result = are_conjugate(a, b, max_orbit=settings.max_orbit)
        return {"conjugate": result.conjugate, "witness": result.witness}

    inputs = {"strands": strands, "word": word, "file": path, "other": other}
    respond(ctx, settings, Command.BRAID_CONJUGATE, inputs, action)


@click.command("braid-achiral")
@braid_options
@limit_options
@click.pass_context
def braid_achiral(ctx, strands, word, path, **limits):
    """Decide whether a braid is conjugate to its mirror image."""
    settings = settings_for(ctx, **limits)

    def action():
        b = braid_argument(strands, word, path)
        result = is_achiral_braid(b, max_orbit=settings.max_orbit)
        results = {
            "conjugate": result.conjugate,
            "witness": result.witness,
            "cyclic": is_cyclic(b),
            "exponent_sum": exponent_sum(b),
        }
        if result.conjugate and is_cyclic(b):
            results["pure_witness"] = pure_witness(b, result.witness)
        return results

    respond(ctx, settings, Command.BRAID_ACHIRAL, {"strands": strands, "word": word, "file": path}, action)


@click.command("braid-cable")
@click.option("--outer-strands", type=int, required=True)
@click.option("--outer", default="", help="Word of the companion braid (must be cyclic).")
@click.option("--inner-strands", type=int, required=True)
@click.option("--inner", default="", help="Word of the pattern braid.")
@limit_options
@click.pass_context
def braid_cable(ctx, outer_strands, outer, inner_strands, inner, **limits):
    """Satellite braid of an inner braid along a cyclic outer braid."""
    settings = settings_for(ctx, **limits)

    def action():
        o = braid_argument(outer_strands, outer, None, name="outer braid")
        i = braid_argument(inner_strands, inner, None, name="inner braid")
        cable = cable_compose(o, i)
        return {
            "strands": cable.strands,
            "word": cable,
            "crossings": len(cable),
            "exponent_sum": exponent_sum(cable),
            "cyclic": is_cyclic(cable),
        }

    inputs = {"outer_strands": outer_strands, "outer": outer, "inner_strands": inner_strands, "inner": inner}
    respond(ctx, settings, Command.BRAID_CABLE, inputs, action)


commands = [braid_normalize, braid_conjugate, braid_achiral, braid_cable]
