from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

Letter = Tuple[int, int]  # (generator index, sign)


class BraidWord(BaseModel):
    """
    A word in the Artin generators of B_n.

    Letter (i, +1) is σ_i: the strand at position i crosses OVER the strand
    at position i+1. Indices are 1-based. The empty word is the identity.
    """

    model_config = ConfigDict(frozen=True)

    strands: int = Field(ge=1)
    letters: Tuple[Letter, ...] = ()

    @model_validator(mode="after")
    def _check_letters(self) -> "BraidWord":
        for index, sign in self.letters:
            if not 1 <= index <= self.strands - 1:
                raise ValueError(
                    f"generator index {index} out of range for {self.strands} strands"
                )
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        return self

    @classmethod
    def from_ints(cls, strands: int, word: Iterable[int]) -> "BraidWord":
        letters = []
        for k in word:
            if k == 0:
                raise ValueError("0 is not a braid generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(strands=strands, letters=tuple(letters))

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands=strands)

    def permutation(self) -> "Permutation":
        at = list(range(self.strands))  # at[p] = strand currently at position p
        for index, _ in self.letters:
            at[index - 1], at[index] = at[index], at[index - 1]
        images = [0] * self.strands
        for position, strand in enumerate(at):
            images[strand] = position + 1
        return Permutation(size=self.strands, images=tuple(images))

    def is_cyclic(self) -> bool:
        """True when the closure is a knot, i.e. the permutation is one n-cycle."""
        return self.permutation().cycle_type() == (self.strands,)

    def to_ints(self) -> List[int]:
        return [index * sign for index, sign in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"e (B_{self.strands})"
        parts = []
        for index, sign in self.letters:
            parts.append(f"s{index}" if sign > 0 else f"s{index}^-1")
        return " ".join(parts)


class Permutation(BaseModel):
    """
    Endpoint permutation of a braid: ``images[i-1]`` is the bottom position
    reached by the strand that starts at top position ``i``.
    """

    model_config = ConfigDict(frozen=True)

    size: int = Field(ge=1)
    images: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_bijection(self) -> "Permutation":
        if len(self.images) != self.size or sorted(self.images) != list(range(1, self.size + 1)):
            raise ValueError(f"images {self.images} are not a bijection on 1..{self.size}")
        return self

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(size=size, images=tuple(range(1, size + 1)))

    @classmethod
    def from_zero_based(cls, images: Iterable[int]) -> "Permutation":
        images = tuple(p + 1 for p in images)
        return cls(size=len(images), images=images)

    def zero_based(self) -> Tuple[int, ...]:
        return tuple(p - 1 for p in self.images)

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other`` (the permutation of a braid product)."""
        if other.size != self.size:
            raise ValueError("permutation sizes differ")
        return Permutation(size=self.size, images=tuple(other.images[p - 1] for p in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, p in enumerate(self.images, start=1):
            inv[p - 1] = i
        return Permutation(size=self.size, images=tuple(inv))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = []
            p = start
            while p not in seen:
                seen.add(p)
                cycle.append(p)
                p = self.images[p - 1]
            result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.images, start=1))


class GarsideCanonical(BaseModel):
    """Left normal form Δ^inf · x_1 ⋯ x_r with left-weighted simple factors."""

    model_config = ConfigDict(frozen=True)

    strands: int
    inf: int
    factors: Tuple[Permutation, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)


class ConjugacyResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    conjugate: bool
    # alpha with alpha^-1 · a · alpha == b
    witness: Optional[BraidWord] = None
