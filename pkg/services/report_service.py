import hashlib
import json
from enum import Enum
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel

from models.braid_models import BraidWord, Permutation
from models.polynomial_models import LaurentPolynomial
from models.report_models import Command, Report
from services.braid_service import format_word

INDENT = "  "


def plain(value: Any) -> Any:
    """Reduce domain values to JSON types: words as integer syntax, polynomials as text."""
    if isinstance(value, BraidWord):
        return format_word(value)
    if isinstance(value, LaurentPolynomial):
        return str(value)
    if isinstance(value, Permutation):
        return list(value.images)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, BaseModel):
        return {k: plain(getattr(value, k)) for k in type(value).model_fields}
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


def inputs_digest(inputs: Dict[str, Any]) -> str:
    canonical = json.dumps(plain(inputs), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def build_report(
    command: Command,
    inputs: Dict[str, Any],
    results: Optional[Dict[str, Any]] = None,
    error: Optional[str] = None,
    limit: Optional[str] = None,
) -> Report:
    # unused options do not enter the digest
    inputs = {k: v for k, v in plain(inputs).items() if v is not None}
    return Report(
        command=command,
        inputs=inputs,
        inputs_digest=inputs_digest(inputs),
        results=plain(results or {}),
        error=error,
        limit=limit,
    )


def report_dict(report: Report) -> Dict[str, Any]:
    return report.model_dump(mode="json", exclude_none=True)


def render_json(report: Report) -> str:
    return json.dumps(report_dict(report), indent=2, sort_keys=True)


def _is_table(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(row, dict) for row in value)


def _scalar_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar_text(v) for v in value) + "]"
    return str(value)


def _render_value(key: str, value: Any, depth: int) -> List[str]:
    pad = INDENT * depth
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"]
        for k in sorted(value):
            lines.extend(_render_value(k, value[k], depth + 1))
        return lines
    if _is_table(value):
        frame = pd.DataFrame([{k: _scalar_text(v) for k, v in row.items()} for row in value])
        with pd.option_context("display.max_colwidth", None):
            table = frame.to_string(index=False)
        return [f"{pad}{key}:"] + [f"{pad}{INDENT}{row}" for row in table.splitlines()]
    return [f"{pad}{key}: {_scalar_text(value)}"]


def render_text(report: Report) -> str:
    data = report_dict(report)
    lines: List[str] = []
    for key in sorted(data):
        lines.extend(_render_value(key, data[key], 0))
    return "\n".join(lines) + "\n"
