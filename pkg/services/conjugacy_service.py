"""
Conjugacy search in B_n through super summit sets.

A braid is first pushed into its super summit set by cycling (raising the
infimum) and decycling (lowering the supremum). The whole set is then
closed under conjugation by simple elements, breadth first and in a fixed
order, remembering for every element a word that conjugates the starting
braid onto it. Two braids are conjugate exactly when their super summit
sets meet.
"""
import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from config import MAX_ORBIT
from errors import DomainError, ResourceLimitError
from models.braid_models import BraidWord, ConjugacyResult, GarsideCanonical, Letter
from services import garside_service as gs
from services.braid_service import (
    compose,
    conjugate_by,
    exponent_sum,
    free_reduce,
    inverse,
    mirror,
    permutation,
    power,
)

logger = logging.getLogger(__name__)


class SummitElement(BaseModel):
    model_config = ConfigDict(frozen=True)

    canonical: GarsideCanonical
    # conjugator with conjugator^-1 · b · conjugator == canonical
    conjugator: BraidWord


def _summit_bound(n: int) -> int:
    return max(1, n * (n - 1) // 2)


def _to_super_summit(n: int, x: gs.NormalForm) -> Tuple[gs.NormalForm, List[Letter]]:
    """Cycle then decycle until neither inf nor sup can move; returns the conjugator letters."""
    conjugator: List[Letter] = []
    bound = _summit_bound(n)

    stall = 0
    while x[1] and stall < bound:
        y, c = gs.cycling(n, x)
        conjugator.extend(gs.simple_letters(c))
        stall = 0 if y[0] > x[0] else stall + 1
        x = y

    stall = 0
    while x[1] and stall < bound:
        y, last = gs.decycling(n, x)
        conjugator.extend((i, -s) for i, s in reversed(gs.simple_letters(last)))
        stall = 0 if y[0] + len(y[1]) < x[0] + len(x[1]) else stall + 1
        x = y
    return x, conjugator


def _summit_orbit(
    n: int, start: gs.NormalForm, max_orbit: int, target: Optional[gs.NormalForm] = None
) -> Dict[gs.NormalForm, Tuple[Letter, ...]]:
    """
    Breadth-first closure of ``start`` under conjugation by simple elements,
    restricted to elements with the same inf and sup. Stops early once
    ``target`` is reached.
    """
    inf, factors = start
    length = len(factors)
    orbit: Dict[gs.NormalForm, Tuple[Letter, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == target:
            break
        for s in gs.all_simples(n):
            y = gs.conjugate_by_simple(n, x, s)
            if y in orbit or y[0] != inf or len(y[1]) != length:
                continue
            orbit[y] = orbit[x] + tuple(gs.simple_letters(s))
            if len(orbit) > max_orbit:
                raise ResourceLimitError("summit-orbit", len(orbit), max_orbit)
            queue.append(y)
    logger.debug("summit orbit of size %d on %d strands", len(orbit), n)
    return orbit


def super_summit_set(b: BraidWord, max_orbit: int = MAX_ORBIT) -> List[SummitElement]:
    n = b.strands
    start, to_start = _to_super_summit(n, gs.word_normal_form(b))
    orbit = _summit_orbit(n, start, max_orbit)
    elements = []
    for x, letters in orbit.items():
        word = free_reduce(BraidWord(strands=n, letters=tuple(to_start) + letters))
        elements.append(SummitElement(canonical=gs.to_canonical(n, x), conjugator=word))
    return elements


def _shortest_witness(word: BraidWord) -> BraidWord:
    word = free_reduce(word)
    spelled = free_reduce(gs.canonical_word(gs.normal_form(word)))
    return spelled if len(spelled) < len(word) else word


def are_conjugate(a: BraidWord, b: BraidWord, max_orbit: int = MAX_ORBIT) -> ConjugacyResult:
    if a.strands != b.strands:
        raise DomainError(f"cannot compare braids on {a.strands} and {b.strands} strands")
    n = a.strands
    nf_a = gs.word_normal_form(a)
    nf_b = gs.word_normal_form(b)
    if nf_a == nf_b:
        return ConjugacyResult(conjugate=True, witness=BraidWord.identity(n))
    # cheap conjugacy invariants first
    if exponent_sum(a) != exponent_sum(b):
        return ConjugacyResult(conjugate=False)
    if permutation(a).cycle_type() != permutation(b).cycle_type():
        return ConjugacyResult(conjugate=False)

    summit_a, to_a = _to_super_summit(n, nf_a)
    summit_b, to_b = _to_super_summit(n, nf_b)
    if summit_a[0] != summit_b[0] or len(summit_a[1]) != len(summit_b[1]):
        return ConjugacyResult(conjugate=False)

    orbit = _summit_orbit(n, summit_a, max_orbit, target=summit_b)
    if summit_b not in orbit:
        return ConjugacyResult(conjugate=False)

    # summit_b = d^-1 c_a^-1 a c_a d  and  summit_b = c_b^-1 b c_b
    c_a = BraidWord(strands=n, letters=tuple(to_a))
    d = BraidWord(strands=n, letters=orbit[summit_b])
    c_b = BraidWord(strands=n, letters=tuple(to_b))
    witness = _shortest_witness(compose(compose(c_a, d), inverse(c_b)))

    if gs.word_normal_form(conjugate_by(a, witness)) != nf_b:
        raise RuntimeError("conjugacy witness failed verification")
    return ConjugacyResult(conjugate=True, witness=witness)


def is_achiral_braid(b: BraidWord, max_orbit: int = MAX_ORBIT) -> ConjugacyResult:
    """β is achiral when it is conjugate to its mirror image β*."""
    return are_conjugate(b, mirror(b), max_orbit=max_orbit)


def pure_witness(b: BraidWord, witness: BraidWord) -> BraidWord:
    """
    For cyclic b and a witness α with α^-1 b α = b*, return β^k α with
    identity permutation. Such a k exists because the permutation of α
    commutes with the cyclic permutation of b.
    """
    for k in range(b.strands):
        candidate = compose(power(b, k), witness)
        if permutation(candidate).is_identity():
            return candidate
    raise DomainError("witness permutation is not a power of the braid permutation")
