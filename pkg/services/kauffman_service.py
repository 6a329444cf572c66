"""
Kauffman bracket of closed braid diagrams by the full 2^c state sum.

The diagram is cut into 4 endpoints per crossing (top-left, top-right,
bottom-left, bottom-right). Strand arcs between consecutive crossings form a
fixed perfect matching W on the endpoints; a state picks a smoothing at each
crossing, i.e. a second perfect matching S. The loops of the state are the
cycles of W ∪ S, and each loop is seen twice as a cycle of the permutation
S∘W. Cycles are counted for a whole batch of states at once with numpy
pointer doubling. Batches are independent slices of the state index range,
so they can be farmed out to worker processes and summed in any order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from config import MAX_CROSSINGS, PARALLEL_MIN_CROSSINGS, STATE_BATCH_SIZE
from errors import ResourceLimitError
from models.braid_models import BraidWord
from models.polynomial_models import LaurentPolynomial
from services.braid_cache import get_cached, store
from services.braid_service import exponent_sum

logger = logging.getLogger(__name__)

# loop value δ = -A^2 - A^-2
DELTA = LaurentPolynomial.from_coefficients({2: -1, -2: -1}, variable="A")


class _Diagram:
    """Endpoint wiring of a closed braid diagram."""

    def __init__(self, b: BraidWord):
        c = len(b.letters)
        self.crossings = c
        self.endpoints = 4 * c
        wiring = np.zeros(self.endpoints, dtype=np.int64)
        touched: List[List[Tuple[int, int]]] = [[] for _ in range(b.strands)]
        for k, (index, _) in enumerate(b.letters):
            left, right = index - 1, index
            # (top endpoint, bottom endpoint) of crossing k on each position
            touched[left].append((4 * k + 0, 4 * k + 2))
            touched[right].append((4 * k + 1, 4 * k + 3))
        self.free_loops = 0
        for visits in touched:
            if not visits:
                self.free_loops += 1
                continue
            for j, (_, bottom) in enumerate(visits):
                top_next = visits[(j + 1) % len(visits)][0]
                wiring[bottom] = top_next
                wiring[top_next] = bottom
        self.wiring = wiring

        base = 4 * np.arange(c, dtype=np.int64)
        vertical = np.empty(self.endpoints, dtype=np.int64)
        horizontal = np.empty(self.endpoints, dtype=np.int64)
        vertical[0::4], vertical[1::4], vertical[2::4], vertical[3::4] = base + 2, base + 3, base, base + 1
        horizontal[0::4], horizontal[1::4], horizontal[2::4], horizontal[3::4] = base + 1, base, base + 3, base + 2
        self.vertical = vertical
        self.horizontal = horizontal
        # the A-smoothing of a positive crossing is the vertical one
        self.positive = np.array([sign > 0 for _, sign in b.letters], dtype=bool)


def _count_states(diagram: _Diagram, start: int, stop: int) -> np.ndarray:
    """
    Histogram over states in [start, stop): entry [b, l] counts states with
    b B-smoothings and l loops.
    """
    c = diagram.crossings
    e = diagram.endpoints
    states = np.arange(start, stop, dtype=np.int64)
    bits = ((states[:, None] >> np.arange(c, dtype=np.int64)) & 1).astype(bool)
    vertical = bits != diagram.positive[None, :]
    vertical_ends = np.repeat(vertical, 4, axis=1)
    smoothing = np.where(vertical_ends, diagram.vertical[None, :], diagram.horizontal[None, :])
    step = smoothing[:, diagram.wiring]  # S∘W

    label = np.broadcast_to(np.arange(e, dtype=np.int64), step.shape).copy()
    pointer = step
    reach = 1
    while reach < e:
        label = np.minimum(label, np.take_along_axis(label, pointer, axis=1))
        pointer = np.take_along_axis(pointer, pointer, axis=1)
        reach *= 2
    label = np.minimum(label, np.take_along_axis(label, pointer, axis=1))
    cycles = (label == np.arange(e, dtype=np.int64)[None, :]).sum(axis=1)
    loops = cycles // 2 + diagram.free_loops
    b_count = bits.sum(axis=1)

    width = c + diagram.free_loops + 2 * c + 1
    hist = np.zeros((c + 1, width), dtype=np.int64)
    np.add.at(hist, (b_count, loops), 1)
    return hist


def _count_range(task: Tuple[BraidWord, int, int]) -> np.ndarray:
    b, start, stop = task
    return _count_states(_Diagram(b), start, stop)


def _state_histogram(b: BraidWord, batch_size: int, parallel_min: int) -> np.ndarray:
    c = len(b.letters)
    total = 1 << c
    ranges = [(start, min(start + batch_size, total)) for start in range(0, total, batch_size)]
    if c >= parallel_min and len(ranges) > 1:
        logger.debug("state sum over %d states in %d parallel batches", total, len(ranges))
        with ProcessPoolExecutor() as executor:
            parts = list(executor.map(_count_range, [(b, s, t) for s, t in ranges]))
    else:
        diagram = _Diagram(b)
        parts = [_count_states(diagram, s, t) for s, t in ranges]
    return sum(parts[1:], parts[0])


def kauffman_bracket(
    b: BraidWord,
    max_crossings: int = MAX_CROSSINGS,
    batch_size: int = STATE_BATCH_SIZE,
    parallel_min: int = PARALLEL_MIN_CROSSINGS,
) -> LaurentPolynomial:
    """⟨closure(b)⟩ in A, normalised so that a crossingless circle has bracket 1."""
    c = len(b.letters)
    if c > max_crossings:
        raise ResourceLimitError("crossings", c, max_crossings)
    if c == 0:
        return DELTA ** (b.strands - 1)

    hist = _state_histogram(b, batch_size, parallel_min)
    delta_powers = [LaurentPolynomial.constant(1, "A")]
    result = LaurentPolynomial.constant(0, "A")
    for b_count, loops in zip(*np.nonzero(hist)):
        count = int(hist[b_count, loops])
        while len(delta_powers) < loops:
            delta_powers.append(delta_powers[-1] * DELTA)
        weight = LaurentPolynomial.monomial(c - 2 * int(b_count), count, variable="A")
        result = result + weight * delta_powers[int(loops) - 1]
    return result


def jones(b: BraidWord, max_crossings: int = MAX_CROSSINGS) -> LaurentPolynomial:
    """V(t) = (-A)^(-3w) ⟨b⟩ with t = A^-4."""
    key = (b.strands, b.letters)
    cached = get_cached("jones", key)
    if cached is not None:
        return cached
    bracket = kauffman_bracket(b, max_crossings=max_crossings)
    w = exponent_sum(b)
    normaliser = LaurentPolynomial.monomial(-3 * w, (-1) ** (w % 2), variable="A")
    # A^k -> t^(-k/4): doubled exponents scale by -1/4
    result = (normaliser * bracket).rescale("t", Fraction(-1, 4))
    store("jones", key, result)
    return result
