"""JSON reporter for radlog bases and verification reports.

Output carries full-precision values and no timestamps, so identical inputs give
byte-identical documents.
"""

from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel

from radlog.core.models import SolutionBasis


def to_json(model: BaseModel, output_path: Optional[str] = None, indent: int = 2) -> str:
    """Export a basis or verification report as a JSON string.

    Args:
        model: A SolutionBasis, VerificationReport or ResidualReport.
        output_path: If provided, write JSON to this file path.
        indent: JSON indentation level.

    Returns:
        The JSON string.
    """
    json_str = model.model_dump_json(indent=indent, by_alias=True)

    if output_path:
        Path(output_path).write_text(json_str, encoding="utf-8")

    return json_str


def load_basis(source: Union[str, Path]) -> SolutionBasis:
    """Re-read a basis document produced by ``to_json`` (a JSON string or file path)."""
    if isinstance(source, Path) or not str(source).lstrip().startswith("{"):
        source = Path(source).read_text(encoding="utf-8")
    return SolutionBasis.model_validate_json(source)
