"""
Line-oriented solenoid spec files::

    # alternating 2-adic solenoid
    ambient: unknot
    prefix:
    cycle:
    stage: 2 1
    stage: 2 -1

``ambient: braid <strands> <word>`` gives a knotted companion,
``ambient-flag: strictly-achiral`` marks it as strictly achiral and
``framing: zero`` switches the cores to zero framing.
"""
import logging
from typing import List, Optional

from pydantic import ValidationError

from errors import ParseError
from models.braid_models import BraidWord
from models.solenoid_models import AmbientCompanion, Framing, SolenoidSpec, StageBraid, StageSeq
from services.braid_service import format_word, is_cyclic, parse_word

logger = logging.getLogger(__name__)


def _parse_strands_and_word(value: str, number: int) -> BraidWord:
    head, _, word = value.strip().partition(" ")
    try:
        strands = int(head)
    except ValueError:
        raise ParseError(f"'{head}' is not a strand count", number)
    return parse_word(strands, word, number)


def parse_spec(text: str) -> SolenoidSpec:
    ambient: Optional[AmbientCompanion] = None
    ambient_line = None
    flagged = False
    framing = Framing.BLACKBOARD
    section = None
    stages = {"prefix": [], "cycle": []}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, value = line.partition(":")
        key = key.strip()
        if not colon:
            raise ParseError(f"expected '<key>: <value>', got '{line}'", number)

        if key == "ambient":
            if ambient is not None:
                raise ParseError("ambient given twice", number)
            kind, _, rest = value.strip().partition(" ")
            if kind == "unknot" and not rest:
                ambient = AmbientCompanion.unknot()
            elif kind == "braid":
                braid = _parse_strands_and_word(rest, number)
                if not is_cyclic(braid):
                    raise ParseError(f"ambient braid '{braid}' closes to a link, not a knot", number)
                ambient = AmbientCompanion(kind="braid", braid=braid)
            else:
                raise ParseError(f"unknown ambient '{value.strip()}'", number)
            ambient_line = number
        elif key == "ambient-flag":
            if value.strip() != "strictly-achiral":
                raise ParseError(f"unknown ambient flag '{value.strip()}'", number)
            flagged = True
        elif key == "framing":
            try:
                framing = Framing(value.strip())
            except ValueError:
                raise ParseError(f"unknown framing '{value.strip()}'", number)
        elif key in ("prefix", "cycle"):
            if value.strip():
                raise ParseError(f"'{key}:' takes no value", number)
            if key == section:
                raise ParseError(f"'{key}:' given twice", number)
            if key == "prefix" and section is not None:
                raise ParseError("'prefix:' must come before 'cycle:'", number)
            section = key
        elif key == "stage":
            if section is None:
                raise ParseError("stage outside a 'prefix:' or 'cycle:' section", number)
            braid = _parse_strands_and_word(value, number)
            try:
                stages[section].append(StageBraid(braid=braid))
            except ValidationError as exc:
                raise ParseError(exc.errors()[0]["msg"], number)
        else:
            raise ParseError(f"unknown key '{key}'", number)

    if not stages["cycle"]:
        raise ParseError("a spec needs at least one stage under 'cycle:'", None)
    if ambient is None:
        ambient = AmbientCompanion.unknot()
    if flagged and ambient.kind == "braid":
        ambient = AmbientCompanion(kind="braid", braid=ambient.braid, strictly_achiral_known=True)
    logger.debug(
        "parsed spec: ambient %s (line %s), %d prefix and %d cycle stages",
        ambient.kind, ambient_line, len(stages["prefix"]), len(stages["cycle"]),
    )
    return SolenoidSpec(
        ambient=ambient,
        stages=StageSeq(prefix=tuple(stages["prefix"]), cycle=tuple(stages["cycle"])),
        framing=framing,
    )


def emit_spec(spec: SolenoidSpec) -> str:
    lines: List[str] = []
    if spec.ambient.kind == "unknot":
        lines.append("ambient: unknot")
    else:
        braid = spec.ambient.braid
        lines.append(f"ambient: braid {braid.strands} {format_word(braid)}".rstrip())
        if spec.ambient.strictly_achiral_known:
            lines.append("ambient-flag: strictly-achiral")
    if spec.framing != Framing.BLACKBOARD:
        lines.append(f"framing: {spec.framing.value}")
    lines.append("prefix:")
    lines.extend(_stage_line(s) for s in spec.stages.prefix)
    lines.append("cycle:")
    lines.extend(_stage_line(s) for s in spec.stages.cycle)
    return "\n".join(lines) + "\n"


def _stage_line(stage: StageBraid) -> str:
    return f"stage: {stage.winding} {format_word(stage.braid)}".rstrip()


def read_spec_file(path: str) -> SolenoidSpec:
    with open(path, encoding="utf-8") as handle:
        return parse_spec(handle.read())


def write_spec_file(spec: SolenoidSpec, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(emit_spec(spec))
