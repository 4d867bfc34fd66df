"""Spec-file loading and validation.

A spec file is a JSON document::

    {
      "p": 2, "n": 3,
      "factors": [{"alphas": [0, 0, 0], "lambda": 0, "k": 1}],
      "options": {"seed": 42, "points": 100, "mode": "per-factor"}
    }
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from radlog.core.models import BasisMode, ProblemSpec
from radlog.errors import SpecFileError
from radlog.numeric.finite_diff import FDConfig


class FactorEntry(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    alphas: list[float]
    lam: float = Field(alias="lambda")
    k: int = Field(ge=1)


class SpecOptions(BaseModel):
    """Run options carried alongside the problem parameters."""

    model_config = ConfigDict(extra="forbid")

    eps_case: Optional[float] = Field(default=None, ge=0)
    h_rel: float = Field(default=1e-4, gt=0, lt=0.5)
    seed: int = Field(default=0, ge=0)
    points: int = Field(default=100, ge=0)
    mode: BasisMode = BasisMode.PER_FACTOR
    symbolic_tol: float = Field(default=1e-9, gt=0)
    numeric_tol: float = Field(default=1e-4, gt=0)
    low: float = Field(default=0.5, gt=0)
    high: float = Field(default=2.0, gt=0)

    @field_validator("mode", mode="before")
    @classmethod
    def _parse_mode(cls, value: Any) -> BasisMode:
        return BasisMode.parse(value)


class SpecDocument(BaseModel):
    """Validated contents of a spec file."""

    model_config = ConfigDict(extra="forbid")

    p: float = Field(gt=0)
    n: int = Field(ge=1)
    factors: list[FactorEntry] = Field(min_length=1)
    options: SpecOptions = Field(default_factory=SpecOptions)

    def to_problem(self) -> ProblemSpec:
        return ProblemSpec(
            p=self.p,
            n=self.n,
            factors=tuple(
                {"alphas": tuple(f.alphas), "lambda": f.lam, "k": f.k} for f in self.factors
            ),
        )

    def fd_config(self) -> FDConfig:
        return FDConfig(h_rel=self.options.h_rel)

    def with_overrides(self, **overrides: Any) -> SpecDocument:
        """Copy with option overrides applied; None values are ignored."""
        updates = {k: v for k, v in overrides.items() if v is not None}
        if not updates:
            return self
        try:
            options = SpecOptions.model_validate({**self.options.model_dump(), **updates})
        except ValidationError as exc:
            err = exc.errors()[0]
            field = ".".join(str(part) for part in err.get("loc", ()))
            raise SpecFileError(err.get("msg", str(exc)), field=f"options.{field}") from exc
        return self.model_copy(update={"options": options})


def parse_spec(text: str, path: Optional[str] = None) -> SpecDocument:
    """Parse and validate spec text, raising SpecFileError with a line anchor."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(
            f"invalid JSON: {exc.msg} (column {exc.colno})", path=path, line=exc.lineno
        ) from exc

    try:
        doc = SpecDocument.model_validate(raw)
    except ValidationError as exc:
        err = exc.errors()[0]
        loc = [str(part) for part in err.get("loc", ())]
        field = ".".join(loc) or None
        line = _locate(text, loc)
        raise SpecFileError(err.get("msg", str(exc)), path=path, line=line, field=field) from exc

    for idx, factor in enumerate(doc.factors):
        if len(factor.alphas) != doc.n:
            loc = ["factors", str(idx), "alphas"]
            raise SpecFileError(
                f"expected {doc.n} alphas (n = {doc.n}), got {len(factor.alphas)}",
                path=path,
                line=_locate(text, loc),
                field=".".join(loc),
            )
    return doc


def load_spec(path: Union[str, Path]) -> SpecDocument:
    """Read and validate a spec file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFileError(f"cannot read spec file: {exc.strerror}", path=str(path)) from exc
    return parse_spec(text, path=str(path))


def _locate(text: str, loc: list[str]) -> Optional[int]:
    """1-based line on which the offending key of ``loc`` appears in the text.

    For a key inside a list entry (``factors.1.k``) the occurrence matching the list
    index is used.
    """
    for pos in range(len(loc) - 1, -1, -1):
        key = loc[pos]
        if key.isdigit():
            continue
        occurrence = 0
        if pos > 0 and loc[pos - 1].isdigit():
            occurrence = int(loc[pos - 1])
        matches = list(re.finditer(rf'"{re.escape(key)}"\s*:', text))
        if matches:
            match = matches[min(occurrence, len(matches) - 1)]
            return text.count("\n", 0, match.start()) + 1
    return 1 if text else None
