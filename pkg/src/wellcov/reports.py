from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class GraphStats:
    alpha: int
    vc: int
    vc_plus: int
    i_min: int
    degeneracy: int


@dataclass(frozen=True)
class TreeStats:
    leaves: int
    nodes: int
    k: int


@dataclass
class WellCoveredReport:
    """Verdict plus certificates.

    On a NO answer ``witness_small`` and ``witness_large`` are maximal
    independent sets of the input with ``|small| < |large|``.  Size fields an
    algorithm did not determine exactly are ``None``.
    """

    well_covered: bool
    algorithm: str
    n: int
    alpha: Optional[int] = None
    vc: Optional[int] = None
    vc_plus: Optional[int] = None
    witness_small: Optional[frozenset] = None
    witness_large: Optional[frozenset] = None
    stats: dict[str, Any] = field(default_factory=dict)

    def check_invariants(self) -> None:
        if self.well_covered:
            assert self.witness_small is None and self.witness_large is None
            if self.vc is not None and self.vc_plus is not None:
                assert self.vc == self.vc_plus
        else:
            if self.vc is not None and self.vc_plus is not None:
                assert self.vc < self.vc_plus
            if self.witness_small is not None:
                assert len(self.witness_small) < len(self.witness_large)
