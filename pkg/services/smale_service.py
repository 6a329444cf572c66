"""
Defining sequences of solenoids that arise as attractors of Smale maps.

A Smale solenoid maps N_n onto N_{n+k}, so its defining sequence is purely
periodic. Up to the periodic choice of stage classes there are finitely
many of them when every winding number is 2 or 3, since unknotted closed
braids on 2 or 3 strands fall into finitely many conjugacy classes.
"""
import itertools
import logging
from typing import List, Sequence, Tuple

from errors import CountablyInfiniteError, DomainError
from models.invariant_models import WClass
from models.solenoid_models import AmbientCompanion, SolenoidSpec, SolenoidType, StageBraid, StageSeq
from services.braid_service import standard_cycle
from services.knotting_service import w_classes
from services.sequence_service import signseq_equivalent
from services.solenoid_service import encode_2adic

logger = logging.getLogger(__name__)


def _require_periodic(t: SolenoidType) -> None:
    if t.prefix:
        raise DomainError("a Smale solenoid has a purely periodic type; the prefix must be empty")


def smale_construct(t: SolenoidType) -> SolenoidSpec:
    _require_periodic(t)
    return SolenoidSpec(
        ambient=AmbientCompanion.unknot(),
        stages=StageSeq(cycle=tuple(StageBraid(braid=standard_cycle(w)) for w in t.cycle)),
    )


def _type_preserving_shifts(cycle: Tuple[int, ...]) -> List[int]:
    return [r for r in range(len(cycle)) if cycle[r:] + cycle[:r] == cycle]


def _is_least_rotation(choice: Tuple[int, ...], shifts: Sequence[int]) -> bool:
    return all(choice <= choice[r:] + choice[:r] for r in shifts)


def smale_enumerate(t: SolenoidType) -> List[SolenoidSpec]:
    """
    One spec per assignment of an unknotted class to each period position,
    counted up to rotations of the period that preserve the type.
    """
    _require_periodic(t)
    large = sorted({w for w in t.cycle if w > 3})
    if large:
        raise CountablyInfiniteError(
            f"windings {large} exceed 3: unknotted closed braids on more than 3 strands "
            "form infinitely many conjugacy classes, so there are countably many Smale solenoids"
        )
    cycle = tuple(t.cycle)
    classes: List[List[WClass]] = [w_classes(w) for w in cycle]
    shifts = _type_preserving_shifts(cycle)

    specs: List[SolenoidSpec] = []
    for choice in itertools.product(*(range(len(c)) for c in classes)):
        if not _is_least_rotation(choice, shifts):
            continue
        stages = tuple(StageBraid(braid=classes[i][k].representative) for i, k in enumerate(choice))
        specs.append(SolenoidSpec(ambient=AmbientCompanion.unknot(), stages=StageSeq(cycle=stages)))
    logger.info("type %s: %d Smale defining sequences", cycle, len(specs))

    if all(w == 2 for w in cycle):
        _certify_inequivalent(specs)
    return specs


def _certify_inequivalent(specs: Sequence[SolenoidSpec]) -> None:
    signs = [encode_2adic(spec) for spec in specs]
    for i, j in itertools.combinations(range(len(signs)), 2):
        if signseq_equivalent(signs[i], signs[j]):
            raise RuntimeError(f"enumerated 2-adic sequences {i} and {j} are equivalent")
