"""Exact test for maximally entangled pure bipartite states.

States use the same text format as the ``maxent`` command-line tool::

    dims 2 2
    term 0 0 1
    term 1 1 p
"""

import json

from ._core import (
    BipartiteState,
    DomainError,
    Error,
    MagnitudeModeError,
    ModeError,
    ParseError,
    Verdict,
    is_maximally_entangled,
    parse_state,
    subdiscriminant_sequence,
)
from . import _core

__all__ = [
    "BipartiteState",
    "DomainError",
    "Error",
    "MagnitudeModeError",
    "ModeError",
    "ParseError",
    "Verdict",
    "is_maximally_entangled",
    "oracle_report",
    "parametric_analysis",
    "parse_state",
    "sequence_report",
    "subdiscriminant_sequence",
]


def parametric_analysis(state, mode="real"):
    """Condition polynomial and its roots, as a dict (exact values are strings)."""
    return json.loads(_core._parametric_json(state, mode))


def sequence_report(state):
    return json.loads(_core._sequence_json(state))


def oracle_report(state):
    """Floating-point spectrum and entropies of the kept reduced density."""
    return json.loads(_core._oracle_json(state))
