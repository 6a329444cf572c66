import click

from errors import DomainError
from models.invariant_models import InvariantKind
from models.report_models import Command
from models.solenoid_models import SolenoidSpec
from routers.common import integer_list, limit_options, respond, settings_for, solenoid_type_argument
from services.sequence_service import (
    canonical,
    deletion_equivalent,
    is_achiral_2adic,
    signseq_equivalent,
    supernatural_equal,
)
from services.smale_service import smale_enumerate
from services.solenoid_service import (
    algebraically_linked,
    blackboard_twisted,
    construct_strictly_achiral,
    encode_2adic,
    invariant_sequence,
    knotting_report,
    linking_numbers,
    strictly_achiral_embeddable,
    type_of,
    verify_strict_achirality,
)
from services.spec_file_service import emit_spec, read_spec_file, write_spec_file

SPEC_FILE = click.Path(dir_okay=False)
FRAMING_WARNING = (
    "blackboard framing with nonzero writhe: level cores differ from the zero-framed "
    "embedding, so no 2-adic code is reported; add 'framing: zero' to the spec file"
)


def _sequence(seq) -> dict:
    return {"prefix": list(seq.prefix), "cycle": list(seq.cycle)}


def _stages(spec: SolenoidSpec) -> list:
    rows = [{"part": "prefix", "strands": s.winding, "word": s.braid} for s in spec.stages.prefix]
    rows += [{"part": "cycle", "strands": s.winding, "word": s.braid} for s in spec.stages.cycle]
    return rows


def _two_adic(spec: SolenoidSpec, max_orbit: int):
    if blackboard_twisted(spec):
        return None
    try:
        return encode_2adic(spec, max_orbit=max_orbit)
    except DomainError:
        return None


@click.command("sol-analyze")
@click.argument("spec_file", type=SPEC_FILE)
@limit_options
@click.pass_context
def sol_analyze(ctx, spec_file, **limits):
    """Type, 2-adic code, strict achirality and per-level knottedness of a spec file."""
    settings = settings_for(ctx, **limits)

    def action():
        spec = read_spec_file(spec_file)
        t = type_of(spec)
        results = {
            "type": _sequence(canonical(t)),
            "framing": spec.framing,
            "strictly_achiral_embeddable": strictly_achiral_embeddable(t),
            "strict_achirality": verify_strict_achirality(spec, max_orbit=settings.max_orbit),
        }
        if blackboard_twisted(spec):
            results["framing_warning"] = FRAMING_WARNING
        signs = _two_adic(spec, settings.max_orbit)
        if signs is not None:
            results["sign_sequence"] = _sequence(canonical(signs))
            results["achiral_2adic"] = is_achiral_2adic(signs)
        report = knotting_report(
            spec, settings.depth, max_crossings=settings.max_crossings, max_orbit=settings.max_orbit
        )
        results["knotting"] = [
            {
                "level": lv.level,
                "strands": lv.strands,
                "crossings": lv.crossings,
                "verdict": lv.assessment.verdict,
                "certificate": lv.assessment.certificate,
            }
            for lv in report.levels
        ]
        results["knotting_aggregate"] = report.aggregate
        if report.truncated:
            results["truncated_at"] = report.truncated_at
            results["truncation"] = report.reason
        return results

    respond(ctx, settings, Command.SOL_ANALYZE, {"spec_file": spec_file}, action)


@click.command("sol-equiv")
@click.argument("spec_a", type=SPEC_FILE)
@click.argument("spec_b", type=SPEC_FILE)
@click.option("--lk0", type=int, default=None, help="Linking number of the two ambient cores.")
@limit_options
@click.pass_context
def sol_equiv(ctx, spec_a, spec_b, lk0, **limits):
    """Compare two solenoid specs: type, 2-adic code and algebraic linking."""
    settings = settings_for(ctx, **limits)

    def action():
        a, b = read_spec_file(spec_a), read_spec_file(spec_b)
        ta, tb = type_of(a), type_of(b)
        results = {
            "type_a": _sequence(canonical(ta)),
            "type_b": _sequence(canonical(tb)),
            "deletion_equivalent": deletion_equivalent(ta, tb),
            "supernatural_equal": supernatural_equal(ta, tb),
        }
        sa, sb = _two_adic(a, settings.max_orbit), _two_adic(b, settings.max_orbit)
        if sa is not None and sb is not None:
            results["signseq_equivalent"] = signseq_equivalent(sa, sb)
        if blackboard_twisted(a) or blackboard_twisted(b):
            results["framing_warning"] = FRAMING_WARNING
        if lk0 is not None:
            results["algebraically_linked"] = algebraically_linked(a, b, lk0)
            results["linking_numbers"] = linking_numbers(a, b, lk0, settings.depth)
        return results

    respond(ctx, settings, Command.SOL_EQUIV, {"spec_a": spec_a, "spec_b": spec_b, "lk0": lk0}, action)


@click.command("sol-construct")
@click.option("--type", "cycle", required=True, help='Periodic winding numbers, e.g. "3 5".')
@click.option("--prefix", default="", help="Winding numbers before the period.")
@click.option("--knotted", is_flag=True, help="Use the figure-eight knot as ambient companion.")
@click.option("--out", type=SPEC_FILE, default=None, help="Write the spec file here.")
@limit_options
@click.pass_context
def sol_construct(ctx, cycle, prefix, knotted, out, **limits):
    """Build a strictly achiral tame embedding of the given type."""
    settings = settings_for(ctx, **limits)

    def action():
        t = solenoid_type_argument(cycle, prefix)
        spec = construct_strictly_achiral(t, knotted=knotted)
        results = {
            "stages": _stages(spec),
            "ambient": spec.ambient.braid if spec.ambient.kind == "braid" else "unknot",
            "strict_achirality": verify_strict_achirality(spec, max_orbit=settings.max_orbit),
            "spec": emit_spec(spec).splitlines(),
        }
        if out is not None:
            write_spec_file(spec, out)
            results["written"] = out
        return results

    inputs = {"type": cycle, "prefix": prefix, "knotted": knotted, "out": out}
    respond(ctx, settings, Command.SOL_CONSTRUCT, inputs, action)


@click.command("sol-smale")
@click.option("--type", "cycle", required=True, help='Periodic winding numbers, e.g. "2 3".')
@limit_options
@click.pass_context
def sol_smale(ctx, cycle, **limits):
    """Enumerate Smale solenoid defining sequences of a periodic type."""
    settings = settings_for(ctx, **limits)

    def action():
        t = solenoid_type_argument(cycle)
        specs = smale_enumerate(t)
        return {
            "count": len(specs),
            "specs": [
                {"index": k, "cycle": " | ".join(str(s.braid) for s in spec.stages.cycle)}
                for k, spec in enumerate(specs)
            ],
        }

    respond(ctx, settings, Command.SOL_SMALE, {"type": cycle}, action)


@click.command("sol-invariants")
@click.argument("spec_file", type=SPEC_FILE)
@click.option(
    "--which",
    type=click.Choice([k.value for k in InvariantKind], case_sensitive=False),
    default=InvariantKind.ALEXANDER.value,
    show_default=True,
)
@click.option("--weights", default=None, help="Series weights g(0), g(1), ...; all ones by default.")
@limit_options
@click.pass_context
def sol_invariants(ctx, spec_file, which, weights, **limits):
    """Invariants of the level cores and their weighted formal series."""
    settings = settings_for(ctx, **limits)
    kind = next(k for k in InvariantKind if k.value.lower() == which.lower())

    def action():
        spec = read_spec_file(spec_file)
        g = integer_list(weights, "weights") if weights is not None else None
        sequence = invariant_sequence(spec, settings.depth, kind, g, max_crossings=settings.max_crossings)
        results = {
            "which": sequence.which,
            "levels": [
                {"level": lv.level, "strands": lv.strands, "crossings": lv.crossings, "value": lv.value}
                for lv in sequence.levels
            ],
            "series": sequence.series,
            "truncated": sequence.truncated,
        }
        if sequence.truncated:
            results["truncated_at"] = sequence.truncated_at
            results["truncation"] = sequence.reason
        return results

    inputs = {"spec_file": spec_file, "which": kind.value, "weights": weights, "depth": settings.depth}
    respond(ctx, settings, Command.SOL_INVARIANTS, inputs, action)


commands = [sol_analyze, sol_equiv, sol_construct, sol_smale, sol_invariants]
