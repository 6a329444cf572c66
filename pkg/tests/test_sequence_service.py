import itertools

import numpy as np
import pytest
from pydantic import ValidationError

from models.solenoid_models import EventuallyPeriodicSeq, SignSeq, SolenoidType
from oracles import common_tail_oracle
from services.sequence_service import (
    canonical,
    deletion_equivalent,
    is_achiral_2adic,
    negate,
    signseq_equivalent,
    supernatural_equal,
)


def T(cycle, prefix=()):
    return SolenoidType(prefix=tuple(prefix), cycle=tuple(cycle))


def S(cycle, prefix=()):
    return SignSeq(prefix=tuple(prefix), cycle=tuple(cycle))


def test_element_access():
    seq = T([3, 5], prefix=[2])
    assert seq.unroll(6) == [2, 3, 5, 3, 5, 3]
    with pytest.raises(IndexError):
        seq.at(-1)


def test_validation():
    with pytest.raises(ValidationError):
        T([1])
    with pytest.raises(ValidationError):
        T([])
    with pytest.raises(ValidationError):
        S([2])


def test_canonical_presentation():
    seq = canonical(T([3, 2, 3, 2], prefix=[3, 2]))
    assert (seq.prefix, seq.cycle) == ((), (3, 2))
    seq = canonical(S([1], prefix=[-1, -1]))
    assert (seq.prefix, seq.cycle) == ((-1, -1), (1,))
    assert isinstance(seq, SignSeq)


def test_deletion_equivalence_examples():
    assert deletion_equivalent(T([2, 3]), T([3, 2]))
    assert not deletion_equivalent(S([1, -1]), S([1, 1, -1, -1]))
    assert not deletion_equivalent(T([2]), T([4]))
    assert deletion_equivalent(T([5], prefix=[2, 4]), T([5, 5]))
    assert deletion_equivalent(T([2, 3], prefix=[3]), T([2, 3]))


def random_seq(rng):
    prefix = tuple(int(x) for x in rng.integers(2, 4, size=int(rng.integers(0, 4))))
    cycle = tuple(int(x) for x in rng.integers(2, 4, size=int(rng.integers(1, 4))))
    return EventuallyPeriodicSeq[int](prefix=prefix, cycle=cycle)


def test_deletion_equivalence_matches_brute_force():
    rng = np.random.default_rng(60)
    for _ in range(200):
        a, b = random_seq(rng), random_seq(rng)
        assert deletion_equivalent(a, b) == common_tail_oracle(a.unroll(60), b.unroll(60))


def test_deletion_equivalence_is_an_equivalence_relation():
    rng = np.random.default_rng(3)
    seqs = [random_seq(rng) for _ in range(12)]
    for a in seqs:
        assert deletion_equivalent(a, a)
    for a, b in itertools.product(seqs, repeat=2):
        assert deletion_equivalent(a, b) == deletion_equivalent(b, a)
    for a, b, c in itertools.product(seqs, repeat=3):
        if deletion_equivalent(a, b) and deletion_equivalent(b, c):
            assert deletion_equivalent(a, c)


def test_supernatural_equality():
    assert supernatural_equal(T([2]), T([4]))
    assert not supernatural_equal(T([2]), T([3]))
    assert supernatural_equal(T([6]), T([2, 3]))
    assert supernatural_equal(T([2], prefix=[5]), T([2]))


def test_sign_sequences():
    assert signseq_equivalent(S([1, -1]), S([-1, 1]))
    assert not signseq_equivalent(S([1]), S([-1]))
    assert signseq_equivalent(S([1], prefix=[-1, -1]), S([1]))
    assert negate(S([1, 1, -1], prefix=[-1])) == S([-1, -1, 1], prefix=[1])


def test_two_adic_achirality():
    assert is_achiral_2adic(S([1, -1]))
    assert not is_achiral_2adic(S([1]))
    assert not is_achiral_2adic(S([-1]))
    assert not is_achiral_2adic(S([1, 1, -1]))
    assert not common_tail_oracle(S([1, 1, -1]).unroll(200), S([-1, -1, 1]).unroll(200))


def test_two_adic_achirality_ignores_the_presentation():
    assert is_achiral_2adic(S([-1, 1], prefix=[1]))
    assert is_achiral_2adic(S([1, -1, 1, -1], prefix=[1, 1, 1]))
    assert not is_achiral_2adic(S([1, 1], prefix=[-1]))
