import math
from typing import Set, Tuple, TypeVar

from sympy import primefactors

from models.solenoid_models import EventuallyPeriodicSeq, SignSeq, SolenoidType

S = TypeVar("S", bound=EventuallyPeriodicSeq)


def _primitive_cycle(cycle: Tuple) -> Tuple:
    length = len(cycle)
    for period in range(1, length + 1):
        if length % period == 0 and cycle == cycle[:period] * (length // period):
            return cycle[:period]
    return cycle


def canonical(seq: S) -> S:
    """
    The shortest presentation of the same infinite sequence: the cycle is
    reduced to its primitive root and prefix entries that already agree with
    the periodic tail are absorbed into it.
    """
    prefix = tuple(seq.prefix)
    cycle = _primitive_cycle(tuple(seq.cycle))
    while prefix and prefix[-1] == cycle[-1]:
        prefix = prefix[:-1]
        cycle = cycle[-1:] + cycle[:-1]
    return type(seq)(prefix=prefix, cycle=cycle)


def _is_rotation(a: Tuple, b: Tuple) -> bool:
    if len(a) != len(b):
        return False
    return any(a[r:] + a[:r] == b for r in range(len(a)))


def deletion_equivalent(a: EventuallyPeriodicSeq, b: EventuallyPeriodicSeq) -> bool:
    """
    True iff deleting finitely many terms makes the sequences identical,
    i.e. iff they share a common tail. Tails of eventually periodic
    sequences agree exactly when their primitive cycles are rotations of
    each other; prefixes never matter.
    """
    ca, cb = canonical(a), canonical(b)
    return _is_rotation(tuple(ca.cycle), tuple(cb.cycle))


def cycle_primes(t: SolenoidType) -> Set[int]:
    return set(primefactors(math.prod(t.cycle)))


def supernatural_equal(a: SolenoidType, b: SolenoidType) -> bool:
    """
    Same primes of infinite multiplicity. Primes occurring only in the
    prefix have finite multiplicity and are absorbed, so only cycle products
    matter.
    """
    return cycle_primes(a) == cycle_primes(b)


def negate(s: SignSeq) -> SignSeq:
    return SignSeq(prefix=tuple(-a for a in s.prefix), cycle=tuple(-a for a in s.cycle))


def signseq_equivalent(a: SignSeq, b: SignSeq) -> bool:
    return deletion_equivalent(a, b)


def is_achiral_2adic(s: SignSeq) -> bool:
    """The mirror image of a ±1 presentation is its negation."""
    return signseq_equivalent(s, negate(s))
