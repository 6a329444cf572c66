from enum import Enum
from typing import Generic, List, Literal, Optional, Tuple, TypeVar

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.braid_models import BraidWord

T = TypeVar("T")


class EventuallyPeriodicSeq(BaseModel, Generic[T]):
    """
    Finite presentation of an infinite sequence: ``prefix`` followed by
    ``cycle`` repeated forever. Element n is ``prefix[n]`` for n < len(prefix)
    and ``cycle[(n - len(prefix)) % len(cycle)]`` otherwise.
    """

    model_config = ConfigDict(frozen=True)

    prefix: Tuple[T, ...] = ()
    cycle: Tuple[T, ...] = Field(min_length=1)

    def at(self, n: int) -> T:
        if n < 0:
            raise IndexError("sequence index must be non-negative")
        if n < len(self.prefix):
            return self.prefix[n]
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def unroll(self, count: int) -> List[T]:
        return [self.at(n) for n in range(count)]

    def entries(self) -> Tuple[T, ...]:
        """Every distinct position of the presentation: prefix then one period."""
        return self.prefix + self.cycle


class SolenoidType(EventuallyPeriodicSeq[int]):
    """Winding numbers (w_1, w_2, ...), each at least 2."""

    @model_validator(mode="after")
    def _windings_above_one(self) -> "SolenoidType":
        for w in self.entries():
            if w < 2:
                raise ValueError(f"winding numbers must be at least 2, got {w}")
        return self


class SignSeq(EventuallyPeriodicSeq[int]):
    """Left/right-handed 2-strand embeddings encoded as -1/+1."""

    @model_validator(mode="after")
    def _plus_minus_one(self) -> "SignSeq":
        for a in self.entries():
            if a not in (1, -1):
                raise ValueError(f"sign sequence entries must be +1 or -1, got {a}")
        return self


class StageBraid(BaseModel):
    """The closed braid presenting N_n inside N_{n-1}."""

    model_config = ConfigDict(frozen=True)

    braid: BraidWord

    @model_validator(mode="after")
    def _cyclic_stage(self) -> "StageBraid":
        if self.braid.strands < 2:
            raise ValueError("a stage braid needs at least 2 strands")
        if not self.braid.is_cyclic():
            raise ValueError(f"stage braid '{self.braid}' does not permute its strands cyclically")
        return self

    @property
    def winding(self) -> int:
        return self.braid.strands


StageSeq = EventuallyPeriodicSeq[StageBraid]


class AmbientCompanion(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["unknot", "braid"] = "unknot"
    braid: Optional[BraidWord] = None
    strictly_achiral_known: bool = False

    @model_validator(mode="before")
    @classmethod
    def _unknot_is_strictly_achiral(cls, data):
        # the unknot is strictly achiral
        if isinstance(data, dict) and data.get("kind", "unknot") == "unknot":
            data = {**data, "strictly_achiral_known": True}
        return data

    @model_validator(mode="after")
    def _check_kind(self) -> "AmbientCompanion":
        if self.kind == "unknot":
            if self.braid is not None:
                raise ValueError("an unknot ambient carries no braid")
        else:
            if self.braid is None:
                raise ValueError("a braid ambient needs its braid")
            if not self.braid.is_cyclic():
                raise ValueError("the ambient companion braid must close to a knot")
        return self

    @classmethod
    def unknot(cls) -> "AmbientCompanion":
        return cls(kind="unknot")


class Framing(str, Enum):
    BLACKBOARD = "blackboard"
    ZERO = "zero"


class SolenoidSpec(BaseModel):
    """A defining sequence {N_n} presented by an ambient companion and stage braids."""

    model_config = ConfigDict(frozen=True)

    ambient: AmbientCompanion = AmbientCompanion(kind="unknot")
    stages: StageSeq
    framing: Framing = Framing.BLACKBOARD

    def stage(self, n: int) -> StageBraid:
        """Stage n >= 1 (the braid of N_n inside N_{n-1})."""
        if n < 1:
            raise IndexError("stages are numbered from 1")
        return self.stages.at(n - 1)


class AchiralityVerdict(str, Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"
