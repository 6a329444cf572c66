from typing import List, Sequence

from errors import DomainError, ParseError
from models.braid_models import BraidWord, Letter, Permutation


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent σ_i σ_i^-1 pairs."""
    reduced: List[Letter] = []
    for index, sign in b.letters:
        if reduced and reduced[-1][0] == index and reduced[-1][1] == -sign:
            reduced.pop()
        else:
            reduced.append((index, sign))
    return BraidWord(strands=b.strands, letters=tuple(reduced))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise DomainError(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return free_reduce(BraidWord(strands=a.strands, letters=a.letters + b.letters))


def compose_all(strands: int, words: Sequence[BraidWord]) -> BraidWord:
    result = BraidWord.identity(strands)
    for w in words:
        result = compose(result, w)
    return result


def inverse(b: BraidWord) -> BraidWord:
    return BraidWord(strands=b.strands, letters=tuple((i, -s) for i, s in reversed(b.letters)))


def mirror(b: BraidWord) -> BraidWord:
    # reflection through the diagram plane: crossing signs flip, order kept
    return BraidWord(strands=b.strands, letters=tuple((i, -s) for i, s in b.letters))


def conjugate_by(b: BraidWord, a: BraidWord) -> BraidWord:
    """a^-1 · b · a"""
    return compose(compose(inverse(a), b), a)


def permutation(b: BraidWord) -> Permutation:
    return b.permutation()


def is_cyclic(b: BraidWord) -> bool:
    return b.is_cyclic()


def exponent_sum(b: BraidWord) -> int:
    return sum(sign for _, sign in b.letters)


def power(b: BraidWord, k: int) -> BraidWord:
    base = b if k >= 0 else inverse(b)
    return free_reduce(BraidWord(strands=b.strands, letters=base.letters * abs(k)))


def cyclic_power_exponents(b: BraidWord, bound: int) -> List[int]:
    """Exponents k in [-bound, bound] for which b^k still permutes its strands cyclically."""
    return [k for k in range(-bound, bound + 1) if is_cyclic(power(b, k))]


def standard_cycle(w: int) -> BraidWord:
    """σ_1 σ_2 ⋯ σ_{w-1} on w strands."""
    return BraidWord(strands=w, letters=tuple((i, 1) for i in range(1, w)))


def full_twist(w: int) -> BraidWord:
    """Δ² on w strands, i.e. (σ_1 ⋯ σ_{w-1})^w."""
    return power(standard_cycle(w), w)


def _band_crossing(base: int, width: int, sign: int) -> List[Letter]:
    # bundle at positions base+1..base+width crosses the next bundle as a flat band;
    # its rightmost strand moves first so strands never cross inside a bundle
    letters: List[Letter] = []
    for k in range(width, 0, -1):
        for j in range(width):
            letters.append((base + k + j, sign))
    return letters


def cable_compose(outer: BraidWord, inner: BraidWord) -> BraidWord:
    """
    Satellite braid: every strand of ``outer`` becomes a blackboard-framed
    ribbon of ``inner.strands`` parallel strands and ``inner`` is inserted
    once, on the first bundle, at the closure cut.
    """
    if not is_cyclic(outer):
        raise DomainError("the outer braid of a cable must permute its strands cyclically")
    width = inner.strands
    letters: List[Letter] = []
    for index, sign in outer.letters:
        letters.extend(_band_crossing((index - 1) * width, width, sign))
    letters.extend(inner.letters)
    return BraidWord(strands=outer.strands * width, letters=tuple(letters))


# ---------- text syntax ----------
def parse_word(strands: int, text: str, line: int = None) -> BraidWord:
    """Whitespace separated non-zero integers: k is σ_k, -k is σ_k^-1."""
    if strands < 1:
        raise ParseError(f"strand count must be at least 1, got {strands}", line)
    ints = []
    for token in text.split():
        try:
            k = int(token)
        except ValueError:
            raise ParseError(f"'{token}' is not an integer generator", line)
        if k == 0 or abs(k) > strands - 1:
            raise ParseError(f"generator {k} is not valid on {strands} strands", line)
        ints.append(k)
    return BraidWord.from_ints(strands, ints)


def parse_braid_text(text: str) -> BraidWord:
    """
    Parse the two-part braid syntax::

        strands: 3
        1 -2
    """
    strands = None
    tokens: List[str] = []
    word_line = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if strands is None:
            key, _, value = line.partition(":")
            if key.strip() != "strands" or not value.strip():
                raise ParseError("expected a 'strands: <n>' header", number)
            try:
                strands = int(value)
            except ValueError:
                raise ParseError(f"'{value.strip()}' is not a strand count", number)
            continue
        word_line = word_line or number
        tokens.append(line)
    if strands is None:
        raise ParseError("missing 'strands: <n>' header", 1)
    return parse_word(strands, " ".join(tokens), word_line)


def format_word(b: BraidWord) -> str:
    return " ".join(str(k) for k in b.to_ints())


def format_braid_text(b: BraidWord) -> str:
    return f"strands: {b.strands}\n{format_word(b)}\n"
