"""Certificate-carrying results: three-valued verdicts and dimension reports.

Soundness protocol: a CertifiedTrue for an "Ext vanishes for all i >= 1"
style claim must carry a finite-window check together with a closure reason
(finite resolution or a periodicity witness); a CertifiedFalse carries a
single replayable counterexample; everything else is Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

TRUE = "certified_true"
FALSE = "certified_false"
UNKNOWN = "unknown"


@dataclass
class Verdict:
    kind: str  # TRUE | FALSE | UNKNOWN
    witness: Any = None
    reason: str = ""
    cutoff: Optional[int] = None

    @property
    def is_true(self) -> bool:
        return self.kind == TRUE

    @property
    def is_false(self) -> bool:
        return self.kind == FALSE

    @property
    def is_unknown(self) -> bool:
        return self.kind == UNKNOWN

    def to_json(self) -> dict:
        out = {"kind": self.kind, "reason": self.reason}
        if self.cutoff is not None:
            out["cutoff"] = self.cutoff
        if self.witness is not None:
            out["witness"] = _json_safe(self.witness)
        return out


def certified_true(witness=None, reason="") -> Verdict:
    return Verdict(TRUE, witness=witness, reason=reason)


def certified_false(witness=None, reason="") -> Verdict:
    return Verdict(FALSE, witness=witness, reason=reason)


def unknown(cutoff: int, reason="") -> Verdict:
    return Verdict(UNKNOWN, cutoff=cutoff, reason=reason)


def conjoin(*verdicts: Verdict) -> Verdict:
    """Three-valued conjunction: False dominates, then Unknown, then True."""
    for v in verdicts:
        if v.is_false:
            return v
    for v in verdicts:
        if v.is_unknown:
            return v
    return certified_true(witness=[v.witness for v in verdicts], reason="conjunction")


EXACT = "Exact"
INFINITE = "Infinite"
AT_LEAST = "AtLeast"
UPPER_BOUND = "UpperBound"
ZERO_MODULE = "Zero"


@dataclass
class DimensionReport:
    kind: str
    value: Optional[int] = None  # Exact / AtLeast / UpperBound carry a number
    cutoff: Optional[int] = None
    witness: Any = None
    note: str = ""

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    @property
    def is_infinite(self) -> bool:
        return self.kind == INFINITE

    def finite_value(self) -> Optional[int]:
        """The certified exact value, if any."""
        return self.value if self.kind == EXACT else None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.value is not None:
            out["value"] = self.value
        if self.cutoff is not None:
            out["cutoff"] = self.cutoff
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            out["witness"] = _json_safe(self.witness)
        return out


def exact(n: int, witness=None, note="") -> DimensionReport:
    return DimensionReport(EXACT, value=n, witness=witness, note=note)


def infinite(witness=None, note="") -> DimensionReport:
    return DimensionReport(INFINITE, witness=witness, note=note)


def at_least(n: int, cutoff: int, note="") -> DimensionReport:
    return DimensionReport(AT_LEAST, value=n, cutoff=cutoff, note=note)


def upper_bound(n: int, note="") -> DimensionReport:
    return DimensionReport(UPPER_BOUND, value=n, note=note)


def zero_module_report() -> DimensionReport:
    return DimensionReport(ZERO_MODULE)


def _json_safe(obj):
    """Best-effort conversion of witness payloads to plain JSON values."""
    import numpy as np

    if isinstance(obj, (Verdict, DimensionReport)):
        return obj.to_json()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return repr(obj)
