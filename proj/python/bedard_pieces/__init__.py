"""Piece censuses for partial flag manifolds and Bedard sequences.

Generator indices are 0-based; Weyl group elements are space-separated words.
"""

from ._core import (
    BedardError,
    BudgetExceeded,
    CapExceeded,
    InvalidTwist,
    NotMinimalInput,
    ParseError,
    UnknownType,
    group_info,
    line_census,
    phi,
    pieces,
    psi,
    run,
    sp_line_census,
    z_census,
)

__all__ = [
    "BedardError",
    "BudgetExceeded",
    "CapExceeded",
    "InvalidTwist",
    "NotMinimalInput",
    "ParseError",
    "UnknownType",
    "group_info",
    "line_census",
    "phi",
    "pieces",
    "psi",
    "run",
    "sp_line_census",
    "z_census",
]
