import logging
import math
from typing import Dict, List, Optional, Sequence

from config import MAX_CROSSINGS, MAX_ORBIT
from errors import DomainError, ResourceLimitError
from models.braid_models import BraidWord
from models.invariant_models import (
    InvariantKind,
    InvariantSequence,
    KnottingReport,
    KnottingVerdict,
    LevelInvariant,
    LevelVerdict,
    WClassLabel,
)
from models.polynomial_models import LaurentPolynomial
from models.solenoid_models import (
    AchiralityVerdict,
    AmbientCompanion,
    Framing,
    SignSeq,
    SolenoidSpec,
    SolenoidType,
    StageBraid,
    StageSeq,
)
from services.braid_service import (
    cable_compose,
    compose,
    exponent_sum,
    full_twist,
    mirror,
    power,
    standard_cycle,
)
from services.burau_service import alexander
from services.conjugacy_service import are_conjugate, is_achiral_braid
from services.kauffman_service import jones
from services.knotting_service import knottedness_verdict, linking_scale, w_class_of

logger = logging.getLogger(__name__)

FIGURE_EIGHT = BraidWord.from_ints(3, [1, -2, 1, -2])


def type_of(spec: SolenoidSpec) -> SolenoidType:
    return SolenoidType(
        prefix=tuple(s.winding for s in spec.stages.prefix),
        cycle=tuple(s.winding for s in spec.stages.cycle),
    )


# ---------- 2-adic solenoids ----------
def _sign_of_stage(stage: StageBraid, max_orbit: int) -> int:
    if stage.winding != 2:
        raise DomainError(f"2-adic encoding needs 2-strand stages, got {stage.winding} strands")
    w = w_class_of(stage.braid, max_orbit=max_orbit)
    if w is None:
        raise DomainError(f"stage '{stage.braid}' is knotted in S³ and lies in no unknotted class")
    return 1 if w.label == WClassLabel.PLUS2 else -1


def encode_2adic(spec: SolenoidSpec, max_orbit: int = MAX_ORBIT) -> SignSeq:
    """±1 presentation of an unknotted 2-adic defining sequence: +1 right-handed, -1 left-handed."""
    if spec.ambient.kind != "unknot":
        raise DomainError("2-adic encoding needs the unknot as ambient companion")
    return SignSeq(
        prefix=tuple(_sign_of_stage(s, max_orbit) for s in spec.stages.prefix),
        cycle=tuple(_sign_of_stage(s, max_orbit) for s in spec.stages.cycle),
    )


def decode_2adic(s: SignSeq) -> SolenoidSpec:
    def stage(a: int) -> StageBraid:
        return StageBraid(braid=BraidWord.from_ints(2, [a]))

    return SolenoidSpec(
        ambient=AmbientCompanion.unknot(),
        stages=StageSeq(
            prefix=tuple(stage(a) for a in s.prefix),
            cycle=tuple(stage(a) for a in s.cycle),
        ),
    )


def blackboard_twisted(spec: SolenoidSpec) -> bool:
    """
    True when blackboard framing differs from zero framing at some level,
    i.e. the ambient braid or a stage braid has nonzero writhe.
    """
    if spec.framing != Framing.BLACKBOARD:
        return False
    if spec.ambient.kind == "braid" and exponent_sum(spec.ambient.braid) != 0:
        return True
    return any(exponent_sum(s.braid) != 0 for s in spec.stages.entries())


# ---------- strict achirality ----------
def strictly_achiral_embeddable(t: SolenoidType) -> bool:
    """All but finitely many winding numbers odd, i.e. every cycle entry odd."""
    return all(w % 2 == 1 for w in t.cycle)


def is_cable(b: BraidWord, max_orbit: int = MAX_ORBIT) -> bool:
    """
    The closed braid is a torus-knot pattern in its solid torus: b is
    conjugate to (σ1⋯σ_{w-1})^k with k coprime to w. Every crossing of such
    a pattern has the sign of k.
    """
    w = b.strands
    e = exponent_sum(b)
    if w < 2 or e % (w - 1):
        return False
    k = e // (w - 1)
    if math.gcd(k, w) != 1:
        return False
    try:
        return are_conjugate(b, power(standard_cycle(w), k), max_orbit=max_orbit).conjugate
    except ResourceLimitError as exc:
        logger.debug("cable test of '%s' gave up: %s", b, exc)
        return False


def achiral_stage(w: int) -> StageBraid:
    """ββ* for β = σ1σ2...σ_{w-1}; cyclic for odd w and of writhe zero."""
    beta = standard_cycle(w)
    return StageBraid(braid=compose(beta, mirror(beta)))


def construct_strictly_achiral(t: SolenoidType, knotted: bool = False) -> SolenoidSpec:
    """
    Strictly achiral tame embedding of a solenoid of type t. Even windings
    in the prefix are deleted, which leaves a deletion-equivalent type.
    """
    if not strictly_achiral_embeddable(t):
        even = sorted({w for w in t.cycle if w % 2 == 0})
        raise DomainError(f"even winding numbers {even} recur infinitely often; no strictly achiral embedding exists")
    prefix = tuple(w for w in t.prefix if w % 2 == 1)
    dropped = len(t.prefix) - len(prefix)
    if dropped:
        logger.info("deleted %d even prefix windings from the type", dropped)
    if knotted:
        ambient = AmbientCompanion(kind="braid", braid=FIGURE_EIGHT, strictly_achiral_known=True)
    else:
        ambient = AmbientCompanion.unknot()
    return SolenoidSpec(
        ambient=ambient,
        stages=StageSeq(
            prefix=tuple(achiral_stage(w) for w in prefix),
            cycle=tuple(achiral_stage(w) for w in t.cycle),
        ),
    )


def verify_strict_achirality(spec: SolenoidSpec, max_orbit: int = MAX_ORBIT) -> AchiralityVerdict:
    # a cyclic braid on an even number of strands has odd writhe
    if any(s.winding % 2 == 0 for s in spec.stages.cycle):
        return AchiralityVerdict.NO
    # a cable pattern has crossings of one sign, so it never has writhe zero
    if any(is_cable(s.braid, max_orbit=max_orbit) for s in dict.fromkeys(spec.stages.cycle)):
        return AchiralityVerdict.NO
    if not spec.ambient.strictly_achiral_known:
        return AchiralityVerdict.UNKNOWN
    # Yes needs writhe zero throughout, the ambient braid included
    if spec.ambient.kind == "braid" and exponent_sum(spec.ambient.braid) != 0:
        return AchiralityVerdict.UNKNOWN
    for braid in dict.fromkeys(s.braid for s in spec.stages.entries()):
        if exponent_sum(braid) != 0:
            return AchiralityVerdict.UNKNOWN
        try:
            if not is_achiral_braid(braid, max_orbit=max_orbit).conjugate:
                return AchiralityVerdict.UNKNOWN
        except ResourceLimitError as exc:
            logger.warning("achirality of stage '%s' undecided: %s", braid, exc)
            return AchiralityVerdict.UNKNOWN
    return AchiralityVerdict.YES


# ---------- core knots ----------
def core_braid(spec: SolenoidSpec, n: int) -> BraidWord:
    """
    Closed braid whose closure is the core of N_n in S³. Under zero framing
    every stage is corrected by the full twists that undo the writhe of the
    companion built so far.
    """
    if n < 0:
        raise DomainError("levels are numbered from 0")
    if spec.ambient.kind == "unknot":
        core = BraidWord.identity(1)
    else:
        core = spec.ambient.braid
    for level in range(1, n + 1):
        inner = spec.stage(level).braid
        if spec.framing == Framing.ZERO:
            twist = -exponent_sum(core)
            if twist:
                inner = compose(inner, power(full_twist(inner.strands), twist))
        core = cable_compose(core, inner)
    logger.debug("core of level %d: %d strands, %d crossings", n, core.strands, len(core))
    return core


def _invariant(core: BraidWord, which: InvariantKind, max_crossings: int) -> LaurentPolynomial:
    if which == InvariantKind.JONES:
        return jones(core, max_crossings=max_crossings)
    if which == InvariantKind.ALEXANDER:
        return alexander(core)
    return LaurentPolynomial.constant(exponent_sum(core))


def invariant_sequence(
    spec: SolenoidSpec,
    depth: int,
    which: InvariantKind,
    g: Optional[Sequence[int]] = None,
    max_crossings: int = MAX_CROSSINGS,
) -> InvariantSequence:
    """
    Invariants of the cores of N_0..N_depth and the weighted series
    Σ g(n)·I(N_n)·x^n. A level that exceeds the crossing cap ends the
    sequence there.
    """
    if depth < 0:
        raise DomainError("depth must be non-negative")
    if g is None:
        g = [1] * (depth + 1)
    if len(g) < depth + 1:
        raise DomainError(f"{len(g)} weights given, {depth + 1} needed")
    levels: List[LevelInvariant] = []
    series: List[LaurentPolynomial] = []
    for n in range(depth + 1):
        core = core_braid(spec, n)
        try:
            value = _invariant(core, which, max_crossings)
        except ResourceLimitError as exc:
            logger.info("invariant sequence truncated at level %d: %s", n, exc)
            return InvariantSequence(
                which=which, levels=levels, series=series, truncated=True, truncated_at=n, reason=str(exc)
            )
        levels.append(LevelInvariant(level=n, strands=core.strands, crossings=len(core), value=value))
        series.append(value * g[n])
    return InvariantSequence(which=which, levels=levels, series=series)


def knotting_report(
    spec: SolenoidSpec, depth: int, max_crossings: int = MAX_CROSSINGS, max_orbit: int = MAX_ORBIT
) -> KnottingReport:
    if depth < 0:
        raise DomainError("depth must be non-negative")
    levels: List[LevelVerdict] = []
    truncated = dict(truncated=False, truncated_at=None, reason=None)
    for n in range(depth + 1):
        core = core_braid(spec, n)
        assessment = knottedness_verdict(core, max_crossings=max_crossings, max_orbit=max_orbit)
        if assessment.verdict == KnottingVerdict.UNKNOWN and len(core) > max_crossings:
            reason = str(ResourceLimitError("crossings", len(core), max_crossings))
            truncated = dict(truncated=True, truncated_at=n, reason=reason)
            logger.info("knotting report truncated at level %d: %s", n, reason)
            break
        levels.append(LevelVerdict(level=n, strands=core.strands, crossings=len(core), assessment=assessment))

    verdicts = [lv.assessment.verdict for lv in levels]
    if KnottingVerdict.KNOTTED in verdicts:
        aggregate = "Knotted"
    elif levels and all(v == KnottingVerdict.UNKNOTTED for v in verdicts):
        aggregate = f"Unknotted through depth {levels[-1].level}"
    else:
        aggregate = "Unknown"
    return KnottingReport(levels=levels, aggregate=aggregate, **truncated)


# ---------- linking ----------
def algebraically_linked(a: SolenoidSpec, b: SolenoidSpec, lk0: int) -> bool:
    """Every level pair links with lk0 times nonzero winding products."""
    return lk0 != 0


def linking_numbers(a: SolenoidSpec, b: SolenoidSpec, lk0: int, depth: int) -> List[Dict[str, int]]:
    """lk(N_n, N'_j) for 0 <= n, j <= depth."""
    wa = type_of(a).unroll(depth)
    wb = type_of(b).unroll(depth)
    return [
        {"n": n, "j": j, "lk": linking_scale(lk0, wa[:n], wb[:j])}
        for n in range(depth + 1)
        for j in range(depth + 1)
    ]
