import numpy as np
import pytest

from models.braid_models import BraidWord
from services import garside_service as gs
from services.braid_service import compose, inverse


def B(strands, *word):
    return BraidWord.from_ints(strands, word)


def random_word(rng, strands, length):
    gens = rng.integers(1, strands, size=length)
    signs = rng.choice([-1, 1], size=length)
    return BraidWord.from_ints(strands, [int(g * s) for g, s in zip(gens, signs)])


# Artin word (0-based generators) of a 4-strand braid in the kernel of the
# Burau representation mod 2; its Garside length is 13.
KER2_BRAID = [
    1, 0, 2, 0, 1, 2, 1, 1, 2, 1, 0, 0, 2, 2, 1, 1, 0, 2, 0, 1, 2,
    1, 0, 0, 2, 1, 1, 0, 2, 0, 2, 1, 0, 1, 0, 2, 0, 2, 1, 1, 0, 2,
]


def test_simple_element_counts():
    assert len(gs.all_simples(3)) == 5
    assert len(gs.all_simples(4)) == 23


def test_tau_is_an_involution_fixing_delta():
    for s in gs.all_simples(4):
        assert gs.tau(gs.tau(s)) == s
    assert gs.tau(gs.delta_simple(4)) == gs.delta_simple(4)
    assert gs.tau(gs.generator_simple(3, 0)) == gs.generator_simple(3, 1)


def test_complements():
    for s in gs.all_simples(4):
        assert gs.then(gs.left_complement(s), s) == gs.delta_simple(4)
        assert gs.then(s, gs.right_complement(s)) == gs.delta_simple(4)


def test_identity_and_delta():
    assert gs.normal_form(BraidWord.identity(3)).inf == 0
    assert gs.normal_form(BraidWord.identity(3)).factors == ()
    delta = gs.normal_form(B(3, 1, 2, 1))
    assert (delta.inf, delta.factors) == (1, ())
    inverse_generator = gs.normal_form(B(2, -1))
    assert (inverse_generator.inf, inverse_generator.factors) == (-1, ())


def test_braid_relations_have_equal_normal_forms():
    assert gs.normal_form(B(3, 1, 2, 1)) == gs.normal_form(B(3, 2, 1, 2))
    assert gs.normal_form(B(4, 1, 3)) == gs.normal_form(B(4, 3, 1))
    assert gs.normal_form(B(3, 1, -1, 2)) == gs.normal_form(B(3, 2))
    assert gs.normal_form(B(3, 1, 2)) != gs.normal_form(B(3, 2, 1))


def test_ker2_braid_lengths():
    word = B(4, *[k + 1 for k in KER2_BRAID])
    gc = gs.normal_form(word)
    assert gc.inf == 0
    assert gc.canonical_length == 13

    square = gs.normal_form(compose(word, word))
    assert square.inf == 2
    assert square.canonical_length == 22
    assert gs.normal_form(compose(word, inverse(word))) == gs.normal_form(BraidWord.identity(4))


@pytest.mark.parametrize("strands", [3, 4, 5])
def test_normal_form_is_left_weighted_and_stable(strands):
    rng = np.random.default_rng(1000 + strands)
    for _ in range(15):
        b = random_word(rng, strands, int(rng.integers(0, 14)))
        gc = gs.normal_form(b)
        for a, c in zip(gc.factors, gc.factors[1:]):
            assert gs.left_weighted_pair(a, c)
        assert all(f.images != tuple(range(1, strands + 1)) for f in gc.factors)
        assert gs.normal_form(gs.canonical_word(gc)) == gc


def test_product_matches_concatenation():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = random_word(rng, 4, 6)
        b = random_word(rng, 4, 6)
        expected = gs.word_normal_form(BraidWord(strands=4, letters=a.letters + b.letters))
        assert gs.product(4, gs.word_normal_form(a), gs.word_normal_form(b)) == expected


def test_cycling_and_decycling_are_conjugations():
    x = gs.word_normal_form(B(4, 1, 2, -3, 2, 1, 3))
    y, c = gs.cycling(4, x)
    assert y == gs.conjugate_by_simple(4, x, c)
    z, last = gs.decycling(4, x)
    # d(x) = x_r x x_r^-1 is conjugation by x_r^-1, i.e. z conjugated by x_r gives x back
    assert gs.conjugate_by_simple(4, z, last) == x
