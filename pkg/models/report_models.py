from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from config import DEFAULT_DEPTH, MAX_CROSSINGS, MAX_ORBIT


class Command(str, Enum):
    BRAID_NORMALIZE = "braid-normalize"
    BRAID_CONJUGATE = "braid-conjugate"
    BRAID_ACHIRAL = "braid-achiral"
    BRAID_CABLE = "braid-cable"
    INV_JONES = "inv-jones"
    INV_ALEXANDER = "inv-alexander"
    SOL_ANALYZE = "sol-analyze"
    SOL_EQUIV = "sol-equiv"
    SOL_CONSTRUCT = "sol-construct"
    SOL_SMALE = "sol-smale"
    SOL_INVARIANTS = "sol-invariants"
    DRAW = "draw"


class Report(BaseModel):
    command: Command
    inputs: Dict[str, Any]
    inputs_digest: str
    results: Dict[str, Any] = {}
    error: Optional[str] = None
    limit: Optional[str] = None


class RunSettings(BaseModel):
    """Per-invocation limits and output mode, taken from the command line."""

    model_config = ConfigDict(frozen=True)

    max_crossings: int = Field(default=MAX_CROSSINGS, ge=0)
    max_orbit: int = Field(default=MAX_ORBIT, ge=1)
    depth: int = Field(default=DEFAULT_DEPTH, ge=0)
    as_json: bool = False
