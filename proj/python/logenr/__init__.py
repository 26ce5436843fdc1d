"""Exact enumeration of log-terminal surfaces from two singular plane models."""

from ._logenr import (
    LogenrError,
    check_subset,
    det,
    extract,
    graph_json,
    is_negative_definite,
    summary,
    theorem_predicate,
    verify,
)

__all__ = [
    "LogenrError",
    "check_subset",
    "det",
    "extract",
    "graph_json",
    "is_negative_definite",
    "summary",
    "theorem_predicate",
    "verify",
]
