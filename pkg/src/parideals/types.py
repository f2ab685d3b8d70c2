"""Typed helper definitions used across *parideals*.

These are pure type hints plus the CLI configuration record.  They keep the
JSON emitted by the CLI checkable by mypy while staying plain dicts at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, TypedDict


class IdealRow(TypedDict):
    """One ideal as listed by ``parideals enumerate``."""

    size: int
    abelian: bool
    minimal_roots: List[List[int]]


class HistogramRow(TypedDict):
    """``♯Φ_min`` histogram for one parabolic subset."""

    type: str
    rank: int
    I: List[int]
    histogram: Dict[str, int]


@dataclass
class CliConfig:
    """Everything :func:`parideals.cli.run` needs, already validated by argparse."""

    command: str
    type: str
    rank: int
    parabolic: Tuple[int, ...] = ()
    abelian_only: bool = False
    format: str = "pretty"
    output: Optional[Path] = None
    geometry: bool = False
