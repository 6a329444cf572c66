"""Argument helpers shared by the command routers and the error-to-exit-code mapping."""
import logging
from typing import Any, Callable, Dict, Optional

import click
from pydantic import ValidationError

from errors import DomainError, ParseError, ResourceLimitError
from models.braid_models import BraidWord
from models.report_models import Command, RunSettings
from models.solenoid_models import SolenoidType
from services.braid_service import parse_braid_text, parse_word
from services.report_service import build_report, render_json, render_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2


def braid_options(command: Callable) -> Callable:
    command = click.option("--file", "path", type=click.Path(dir_okay=False), help="Two-part braid file.")(command)
    command = click.option("--word", help='Generators, e.g. "1 -2 1".')(command)
    command = click.option("--strands", type=int)(command)
    return command


def limit_options(command: Callable) -> Callable:
    """Limits may be given before or after the command name; the later one wins."""
    command = click.option("--json", "as_json", is_flag=True, default=False, help="Emit the report as JSON.")(command)
    command = click.option("--depth", type=int, default=None, help="Solenoid levels to analyse.")(command)
    command = click.option("--max-orbit", type=int, default=None, help="Super summit orbit cap.")(command)
    command = click.option("--max-crossings", type=int, default=None, help="Kauffman state-sum crossing cap.")(command)
    return command


def settings_for(ctx: click.Context, **overrides: Optional[Any]) -> RunSettings:
    base: RunSettings = ctx.obj or RunSettings()
    changes = {k: v for k, v in overrides.items() if v is not None and v is not False}
    try:
        return RunSettings(**{**base.model_dump(), **changes})
    except ValidationError as exc:
        raise click.BadParameter(exc.errors()[0]["msg"])


def braid_argument(strands: Optional[int], word: Optional[str], path: Optional[str], name: str = "braid") -> BraidWord:
    """A braid from --strands/--word or from a two-part braid file."""
    if path is not None:
        if strands is not None or word is not None:
            raise click.UsageError(f"give the {name} either as a file or as --strands/--word, not both")
        with open(path, encoding="utf-8") as handle:
            return parse_braid_text(handle.read())
    if strands is None:
        raise click.UsageError(f"the {name} needs --strands (or a braid file)")
    return parse_word(strands, word or "")


def integer_list(text: str, what: str) -> list:
    try:
        return [int(token) for token in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"{what} must be whitespace separated integers, got '{text}'", 1)


def solenoid_type_argument(cycle: str, prefix: str = "") -> SolenoidType:
    try:
        return SolenoidType(prefix=tuple(integer_list(prefix, "prefix")), cycle=tuple(integer_list(cycle, "type")))
    except ValidationError as exc:
        raise ParseError(exc.errors()[0]["msg"], 1)


def respond(
    ctx: click.Context,
    settings: RunSettings,
    command: Command,
    inputs: Dict[str, Any],
    action: Callable[[], Dict[str, Any]],
) -> None:
    """Run ``action``, print its report and leave with the matching exit code."""
    error = limit = None
    results: Dict[str, Any] = {}
    try:
        results = action()
        code = EXIT_OK
    except ParseError as exc:
        error, code = str(exc), EXIT_PARSE
    except ResourceLimitError as exc:
        error, limit, code = str(exc), exc.limit, EXIT_DOMAIN
    except DomainError as exc:
        error, code = str(exc), EXIT_DOMAIN
    except OSError as exc:
        error, code = f"{exc.filename or ''}: {exc.strerror or exc}".lstrip(": "), EXIT_DOMAIN
    except (RuntimeError, ArithmeticError) as exc:
        logger.exception("%s failed unexpectedly", command.value)
        error, code = f"{type(exc).__name__}: {exc}", EXIT_DOMAIN
    if error:
        logger.info("%s failed: %s", command.value, error)

    report = build_report(command, inputs, results, error=error, limit=limit)
    output = render_json(report) + "\n" if settings.as_json else render_text(report)
    click.echo(output, nl=False)
    ctx.exit(code)
