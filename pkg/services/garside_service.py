"""
Left Garside normal form in the braid group B_n.

Simple elements (positive permutation braids) are handled as 0-based
permutation tuples ``s`` where ``s[i]`` is the bottom position of the strand
that starts at top position ``i``. A braid in normal form is the pair
``(inf, factors)`` meaning Δ^inf · x_1 ⋯ x_r, where no factor is the
identity or Δ and every adjacent pair is left-weighted.
"""
import itertools
import logging
from typing import List, Sequence, Set, Tuple

from cachetools import cached

from models.braid_models import BraidWord, GarsideCanonical, Letter, Permutation
from services.braid_cache import get_cached, store

logger = logging.getLogger(__name__)

Simple = Tuple[int, ...]
NormalForm = Tuple[int, Tuple[Simple, ...]]


# ---------- simple elements ----------
def identity_simple(n: int) -> Simple:
    return tuple(range(n))


def delta_simple(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


def generator_simple(n: int, k: int) -> Simple:
    """σ_{k+1} as a permutation (0-based k)."""
    s = list(range(n))
    s[k], s[k + 1] = k + 1, k
    return tuple(s)


def then(a: Simple, b: Simple) -> Simple:
    """Permutation of the product a·b."""
    return tuple(b[p] for p in a)


def invert(a: Simple) -> Simple:
    inv = [0] * len(a)
    for i, p in enumerate(a):
        inv[p] = i
    return tuple(inv)


def tau(s: Simple) -> Simple:
    """Δ s Δ^-1 (an involution on simple elements)."""
    n = len(s)
    return tuple(n - 1 - s[n - 1 - i] for i in range(n))


def tau_power(s: Simple, p: int) -> Simple:
    return tau(s) if p % 2 else s


def left_descents(s: Simple) -> Set[int]:
    """k such that s = σ_{k+1} · s' with s' simple."""
    return {k for k in range(len(s) - 1) if s[k] > s[k + 1]}


def right_descents(s: Simple) -> Set[int]:
    """k such that s = s' · σ_{k+1} with s' simple."""
    inv = invert(s)
    return {k for k in range(len(s) - 1) if inv[k] > inv[k + 1]}


def left_complement(s: Simple) -> Simple:
    """X with X · s = Δ."""
    n = len(s)
    inv = invert(s)
    return tuple(inv[n - 1 - i] for i in range(n))


def right_complement(s: Simple) -> Simple:
    """Y with s · Y = Δ."""
    n = len(s)
    inv = invert(s)
    return tuple(n - 1 - inv[j] for j in range(n))


def simple_letters(s: Simple) -> List[Letter]:
    """Positive Artin word of a permutation braid."""
    s = list(s)
    letters: List[Letter] = []
    while True:
        for k in range(len(s) - 1):
            if s[k] > s[k + 1]:
                letters.append((k + 1, 1))
                s[k], s[k + 1] = s[k + 1], s[k]
                break
        else:
            return letters


@cached(cache={})
def all_simples(n: int) -> Tuple[Simple, ...]:
    """Every simple element except the identity, in lexicographic order."""
    ident = identity_simple(n)
    return tuple(p for p in itertools.permutations(range(n)) if p != ident)


# ---------- left weighting ----------
def left_weight(a: Simple, b: Simple) -> Tuple[Simple, Simple]:
    """Move crossings from the front of b to the back of a until R(a) ⊇ L(b)."""
    n = len(a)
    while True:
        moves = left_descents(b) - right_descents(a)
        if not moves:
            return a, b
        t = generator_simple(n, min(moves))
        a = then(a, t)
        b = then(t, b)


def is_left_weighted(a: Simple, b: Simple) -> bool:
    return left_descents(b) <= right_descents(a)


def normalize(n: int, inf: int, factors: Sequence[Simple]) -> NormalForm:
    """Left normal form of Δ^inf · f_1 ⋯ f_k for arbitrary simple f_i."""
    ident = identity_simple(n)
    delta = delta_simple(n)
    work = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        for j in range(len(work) - 1):
            a, b = left_weight(work[j], work[j + 1])
            if a != work[j]:
                work[j], work[j + 1] = a, b
                changed = True
        work = [f for f in work if f != ident]
    lead = 0
    while lead < len(work) and work[lead] == delta:
        lead += 1
    # Δ factors in front are pushed into the infimum
    return inf + lead, tuple(work[lead:])


def product(n: int, x: NormalForm, y: NormalForm) -> NormalForm:
    """Normal form of x · y."""
    p, xs = x
    q, ys = y
    # Δ^p X Δ^q Y = Δ^(p+q) τ^q(X) Y
    return normalize(n, p + q, [tau_power(f, q) for f in xs] + list(ys))


def conjugate_by_simple(n: int, x: NormalForm, s: Simple) -> NormalForm:
    """Normal form of s^-1 · x · s."""
    p, xs = x
    # s^-1 = Δ^-1 L(s), and L(s) Δ^p = Δ^p τ^p(L(s))
    lead = tau_power(left_complement(s), p)
    return normalize(n, p - 1, [lead] + list(xs) + [s])


def cycling(n: int, x: NormalForm) -> Tuple[NormalForm, Simple]:
    """c(x) = ι^-1 x ι with ι = τ^-inf(x_1)."""
    p, xs = x
    conj = tau_power(xs[0], p)
    return normalize(n, p, list(xs[1:]) + [conj]), conj


def decycling(n: int, x: NormalForm) -> Tuple[NormalForm, Simple]:
    """d(x) = x_r x x_r^-1; the returned simple is x_r (conjugator x_r^-1)."""
    p, xs = x
    last = xs[-1]
    return normalize(n, p, [tau_power(last, p)] + list(xs[:-1])), last


# ---------- braid words ----------
def word_normal_form(b: BraidWord) -> NormalForm:
    n = b.strands
    key = (n, b.letters)
    hit = get_cached("normal_form", key)
    if hit is not None:
        return hit
    inf = 0
    factors: List[Simple] = []
    for index, sign in b.letters:
        gen = generator_simple(n, index - 1)
        if sign > 0:
            factors.append(gen)
        else:
            # σ^-1 = Δ^-1 L(σ), and the Δ^-1 is pulled through to the front
            inf -= 1
            factors = [tau(f) for f in factors]
            factors.append(left_complement(gen))
    result = normalize(n, inf, factors)
    logger.debug("normal form of %d letters on %d strands: inf %d, length %d", len(b.letters), n, result[0], len(result[1]))
    store("normal_form", key, result)
    return result


def to_canonical(n: int, x: NormalForm) -> GarsideCanonical:
    inf, factors = x
    return GarsideCanonical(
        strands=n,
        inf=inf,
        factors=tuple(Permutation.from_zero_based(f) for f in factors),
    )


def from_canonical(gc: GarsideCanonical) -> NormalForm:
    return gc.inf, tuple(f.zero_based() for f in gc.factors)


def normal_form(b: BraidWord) -> GarsideCanonical:
    return to_canonical(b.strands, word_normal_form(b))


def normal_form_letters(n: int, x: NormalForm) -> List[Letter]:
    inf, factors = x
    delta_letters = simple_letters(delta_simple(n))
    letters: List[Letter] = []
    if inf >= 0:
        letters.extend(delta_letters * inf)
    else:
        inverse_delta = [(i, -s) for i, s in reversed(delta_letters)]
        letters.extend(inverse_delta * -inf)
    for f in factors:
        letters.extend(simple_letters(f))
    return letters


def canonical_word(gc: GarsideCanonical) -> BraidWord:
    """A braid word spelling out Δ^inf x_1 ⋯ x_r."""
    letters = normal_form_letters(gc.strands, from_canonical(gc))
    return BraidWord(strands=gc.strands, letters=tuple(letters))


def left_weighted_pair(a: Permutation, b: Permutation) -> bool:
    """The left-weighted predicate R(a) ⊇ L(b) on two simple factors."""
    return is_left_weighted(a.zero_based(), b.zero_based())
