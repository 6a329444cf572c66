import numpy as np
import pytest

from errors import DomainError, ParseError
from models.braid_models import BraidWord
from services.braid_service import (
    cable_compose,
    compose,
    conjugate_by,
    cyclic_power_exponents,
    exponent_sum,
    format_braid_text,
    free_reduce,
    full_twist,
    inverse,
    is_cyclic,
    mirror,
    parse_braid_text,
    parse_word,
    permutation,
    power,
)


def B(strands, *word):
    return BraidWord.from_ints(strands, word)


def test_free_reduce():
    assert free_reduce(B(3, 1, -1, 2)) == B(3, 2)
    assert free_reduce(B(3, 1, 2, -2, -1)) == BraidWord.identity(3)
    assert free_reduce(B(3, 1, -2)) == B(3, 1, -2)


def test_compose_and_inverse():
    assert compose(B(3, 1), B(3, -2)) == B(3, 1, -2)
    assert compose(B(3, 1, 2), inverse(B(3, 1, 2))) == BraidWord.identity(3)
    assert inverse(B(3, 1, -2)) == B(3, 2, -1)
    with pytest.raises(DomainError):
        compose(B(2, 1), B(3, 1))


def test_mirror_flips_signs_in_place():
    assert mirror(B(3, 1, -2, 2)) == B(3, -1, 2, -2)
    assert mirror(mirror(B(4, 1, 3, -2))) == B(4, 1, 3, -2)


def test_conjugate_by():
    assert conjugate_by(B(3, 2), B(3, 1)) == B(3, -1, 2, 1)


def test_permutation_and_cyclicity():
    assert permutation(B(3, 1, 2)).images == (3, 1, 2)
    assert is_cyclic(B(3, 1, 2))
    assert is_cyclic(B(3, 1, -2))
    assert is_cyclic(B(2, 1))
    assert is_cyclic(BraidWord.identity(1))
    assert not is_cyclic(BraidWord.identity(3))
    assert not is_cyclic(B(2, 1, 1))


def test_exponent_sum_and_power():
    assert exponent_sum(B(3, 1, -2, 1)) == 1
    assert power(B(3, 1, 2), 2) == B(3, 1, 2, 1, 2)
    assert power(B(3, 1, 2), -2) == B(3, -2, -1, -2, -1)
    assert power(B(3, 1, 2), 0) == BraidWord.identity(3)


def test_cyclic_power_exponents_are_coprime_to_strands():
    assert cyclic_power_exponents(B(4, 1, 2, 3), 4) == [-3, -1, 1, 3]
    assert cyclic_power_exponents(B(3, 1, 2), 3) == [-2, -1, 1, 2]


def test_full_twist_is_pure_with_expected_writhe():
    for w in range(2, 6):
        twist = full_twist(w)
        assert exponent_sum(twist) == w * (w - 1)
        assert permutation(twist).is_identity()


def test_cable_of_two_adic_stage():
    cable = cable_compose(B(2, 1), B(2, 1))
    assert cable == B(4, 2, 3, 1, 2, 1)
    assert exponent_sum(cable) == 5
    assert is_cyclic(cable)


def test_cable_along_trivial_companion_is_the_pattern():
    assert cable_compose(BraidWord.identity(1), B(3, 1, -2)) == B(3, 1, -2)


def test_cable_exponent_sum_formula():
    outer, inner = B(2, 1, 1, 1), B(3, 1, 2)
    cable = cable_compose(outer, inner)
    assert cable.strands == 6
    assert exponent_sum(cable) == 9 * 3 + 2
    assert is_cyclic(cable)


def test_cable_needs_cyclic_outer_braid():
    with pytest.raises(DomainError):
        cable_compose(B(2, 1, 1), B(2, 1))


def test_parse_word():
    assert parse_word(3, "1 -2  1") == B(3, 1, -2, 1)
    assert parse_word(4, "") == BraidWord.identity(4)
    with pytest.raises(ParseError):
        parse_word(3, "1 x")
    with pytest.raises(ParseError):
        parse_word(3, "3")
    with pytest.raises(ParseError):
        parse_word(3, "0")
    with pytest.raises(ParseError):
        parse_word(0, "")


def test_parse_braid_text():
    text = "# figure-eight\nstrands: 3\n1 -2\n1 -2\n"
    assert parse_braid_text(text) == B(3, 1, -2, 1, -2)
    assert parse_braid_text(format_braid_text(B(4, 3, -1))) == B(4, 3, -1)


def test_parse_braid_text_reports_lines():
    with pytest.raises(ParseError) as err:
        parse_braid_text("# comment\nstrands: x\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_braid_text("strands: 2\n\n1 2\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse_braid_text("1 2\n")


def random_word(rng, strands, max_letters):
    length = int(rng.integers(0, max_letters + 1))
    gens = rng.integers(1, strands, size=length)
    signs = rng.choice([-1, 1], size=length)
    return B(strands, *(int(g) * int(s) for g, s in zip(gens, signs)))


def random_cyclic_word(rng, strands, max_letters):
    while True:
        b = random_word(rng, strands, max_letters)
        if is_cyclic(b):
            return b


def test_cyclic_braids_on_even_strands_have_odd_writhe():
    rng = np.random.default_rng(42)
    for strands in (2, 4, 6):
        for _ in range(40):
            b = random_cyclic_word(rng, strands, 12)
            assert exponent_sum(b) % 2 == 1


def test_random_cables():
    rng = np.random.default_rng(5)
    for _ in range(100):
        outer = random_cyclic_word(rng, int(rng.integers(2, 4)), 5) if rng.random() < 0.9 else BraidWord.identity(1)
        inner = random_word(rng, int(rng.integers(2, 4)), 5)
        cable = cable_compose(outer, inner)
        w = inner.strands
        assert cable.strands == outer.strands * w
        assert exponent_sum(cable) == w * w * exponent_sum(outer) + exponent_sum(inner)
        assert len(permutation(cable).cycles()) == len(permutation(inner).cycles())
        # bundles move as flat bands, then the inner braid permutes the first bundle
        out, inn = permutation(outer).zero_based(), permutation(inner).zero_based()
        expected = []
        for bundle in range(outer.strands):
            for offset in range(w):
                q = out[bundle] * w + offset
                expected.append(inn[q] if q < w else q)
        assert permutation(cable).zero_based() == tuple(expected)


def test_stage_validation_agrees_with_is_cyclic():
    from models.solenoid_models import StageBraid

    rng = np.random.default_rng(11)
    for _ in range(50):
        b = random_word(rng, int(rng.integers(2, 5)), 6)
        if is_cyclic(b):
            assert StageBraid(braid=b).braid == b
        else:
            with pytest.raises(ValueError):
                StageBraid(braid=b)
