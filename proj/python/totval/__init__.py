"""Total valencies of periodic surface maps."""

import json

from . import _core
from ._core import (
    InconsistentDataError,
    TotalValency,
    UnsupportedError,
    ValidationError,
    __version__,
    candidate_branch_loci,
    classify_lift,
    enumerate,
    group_key,
    harvey_check,
    hnp,
    hnp_genus,
    inverse,
    is_conjugate,
    is_involution,
    is_irreducible,
    nielsen_check,
    oracle_total_valency,
    power,
    quotient_signature,
    run_cli,
)


def verify(name, bound=0):
    """Run a reference check; returns (passed, report dict, text)."""
    passed, payload, text = _core._verify(name, bound)
    return passed, json.loads(payload), text

