from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from models.braid_models import BraidWord
from models.polynomial_models import LaurentPolynomial


class WClassLabel(str, Enum):
    MINUS2 = "Minus2"
    PLUS2 = "Plus2"
    POS3 = "Pos3"
    NEG3 = "Neg3"
    MIXED3 = "Mixed3"


class WClass(BaseModel):
    """A conjugacy class of 2- or 3-strand braids with unknotted closure."""

    model_config = ConfigDict(frozen=True)

    strands: int
    representative: BraidWord
    label: WClassLabel


class KnottingVerdict(str, Enum):
    KNOTTED = "Knotted"
    UNKNOTTED = "Unknotted"
    UNKNOWN = "Unknown"


class KnottingAssessment(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: KnottingVerdict
    certificate: str
    # for Unknotted: the braid that matched a W-class and the conjugating witness
    reduced: Optional[BraidWord] = None
    w_class: Optional[WClass] = None
    witness: Optional[BraidWord] = None


class InvariantKind(str, Enum):
    JONES = "Jones"
    ALEXANDER = "Alexander"
    WRITHE = "Writhe"


class LevelInvariant(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: int
    strands: int
    crossings: int
    value: LaurentPolynomial


class InvariantSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    which: InvariantKind
    levels: List[LevelInvariant]
    # coefficient of x^n in  sum_n g(n) I(N_n) x^n
    series: List[LaurentPolynomial]
    truncated: bool = False
    truncated_at: Optional[int] = None
    reason: Optional[str] = None


class LevelVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: int
    strands: int
    crossings: int
    assessment: KnottingAssessment


class KnottingReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    levels: List[LevelVerdict]
    aggregate: str
    truncated: bool = False
    truncated_at: Optional[int] = None
    reason: Optional[str] = None
