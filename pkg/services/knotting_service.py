import logging
from typing import List, Optional, Sequence

from config import MAX_CROSSINGS, MAX_ORBIT
from errors import DomainError, ResourceLimitError
from models.braid_models import BraidWord
from models.invariant_models import KnottingAssessment, KnottingVerdict, WClass, WClassLabel
from services.braid_service import exponent_sum, is_cyclic
from services.burau_service import alexander
from services.conjugacy_service import are_conjugate
from services.kauffman_service import jones

logger = logging.getLogger(__name__)

# Conjugacy classes of 2- and 3-strand braids with unknotted closure. The
# 3-strand representatives besides σ1σ2^-1 are taken as σ1σ2 and its mirror.
W_CLASSES: List[WClass] = [
    WClass(strands=2, representative=BraidWord.from_ints(2, [1]), label=WClassLabel.PLUS2),
    WClass(strands=2, representative=BraidWord.from_ints(2, [-1]), label=WClassLabel.MINUS2),
    WClass(strands=3, representative=BraidWord.from_ints(3, [1, 2]), label=WClassLabel.POS3),
    WClass(strands=3, representative=BraidWord.from_ints(3, [-1, -2]), label=WClassLabel.NEG3),
    WClass(strands=3, representative=BraidWord.from_ints(3, [1, -2]), label=WClassLabel.MIXED3),
]


def w_classes(strands: int) -> List[WClass]:
    if strands not in (2, 3):
        raise DomainError(
            f"unknotted {strands}-strand braids form infinitely many conjugacy classes; "
            "only 2 and 3 strands are tabulated"
        )
    return [w for w in W_CLASSES if w.strands == strands]


def w_class_of(b: BraidWord, max_orbit: int = MAX_ORBIT) -> Optional[WClass]:
    for w in w_classes(b.strands):
        if exponent_sum(w.representative) != exponent_sum(b):
            continue
        if are_conjugate(b, w.representative, max_orbit=max_orbit).conjugate:
            return w
    return None


def destabilize(b: BraidWord) -> Optional[BraidWord]:
    """
    Markov destabilisation: when σ_{n-1}^±1 occurs exactly once, rotate the
    word (a conjugation) so that letter comes last and drop it with the last
    strand.
    """
    n = b.strands
    if n < 2:
        return None
    positions = [k for k, (index, _) in enumerate(b.letters) if index == n - 1]
    if len(positions) != 1:
        return None
    k = positions[0]
    rotated = b.letters[k + 1:] + b.letters[:k]
    return BraidWord(strands=n - 1, letters=rotated)


def knottedness_verdict(
    b: BraidWord, max_crossings: int = MAX_CROSSINGS, max_orbit: int = MAX_ORBIT
) -> KnottingAssessment:
    if not is_cyclic(b):
        raise DomainError("knottedness is decided for knot closures only")

    delta = alexander(b)
    if not delta.is_one():
        return KnottingAssessment(verdict=KnottingVerdict.KNOTTED, certificate=f"alexander = {delta}")
    try:
        v = jones(b, max_crossings=max_crossings)
    except ResourceLimitError as exc:
        logger.debug("jones skipped in knottedness verdict: %s", exc)
        v = None
    if v is not None and not v.is_one():
        return KnottingAssessment(verdict=KnottingVerdict.KNOTTED, certificate=f"jones = {v}")

    current: Optional[BraidWord] = b
    while current is not None:
        if current.strands == 1:
            return KnottingAssessment(
                verdict=KnottingVerdict.UNKNOTTED,
                certificate="destabilises to the 1-strand braid",
                reduced=current,
            )
        if current.strands in (2, 3):
            try:
                for w in w_classes(current.strands):
                    if exponent_sum(w.representative) != exponent_sum(current):
                        continue
                    result = are_conjugate(current, w.representative, max_orbit=max_orbit)
                    if result.conjugate:
                        return KnottingAssessment(
                            verdict=KnottingVerdict.UNKNOTTED,
                            certificate=f"conjugate to the {w.label.value} representative",
                            reduced=current,
                            w_class=w,
                            witness=result.witness,
                        )
            except ResourceLimitError as exc:
                logger.debug("w-class search gave up: %s", exc)
                break
        current = destabilize(current)
    return KnottingAssessment(
        verdict=KnottingVerdict.UNKNOWN,
        certificate="invariants are trivial and no supported reduction applies",
    )


def linking_scale(lk0: int, windings_a: Sequence[int], windings_b: Sequence[int]) -> int:
    """
    lk of the level-n and level-j centrelines, given lk0 for the two level-0
    cores: the core of a thick braid of winding w is w times the companion
    core in homology.
    """
    result = lk0
    for w in list(windings_a) + list(windings_b):
        result *= w
    return result
