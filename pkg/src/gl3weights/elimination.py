"""Weight elimination against an irreducible niveau-3 tame type.

Two supported regimes.  Small span (x - z < p - 3): a crystalline lift
with consecutive Hodge-Tate weights exists, and modularity forces the
type to match tau(xi, (x+2, y+1, z)) on the nose.  Large span
(x - y < p - 5, y - z < p - 5, x - z > p + 1): three potentially
crystalline lifts (one principal series, two cuspidal shapes) each
constrain the type to a finite candidate set, and only types in the
intersection of the three sets survive.  Weights in neither regime are
rejected rather than guessed at.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .breuil import (
    CUSPIDAL,
    CUSPIDAL_DUAL,
    PRINCIPAL_SERIES,
    LiftType,
    cuspidal,
    cuspidal_dual,
    principal_series,
    reduction_candidates,
)
from .tame_types import (
    ORDER_THREE_CYCLES,
    XI_123,
    XI_132,
    TameType,
    tau_exponent,
    type_from_exponent,
)
from .weights import WeightClass

BRANCH_CRYSTALLINE = "crystalline"
BRANCH_INTERSECTION = "intersection"

CONSISTENT = "consistent"
ELIMINATED = "eliminated"


class UnsupportedWeight(ValueError):
    """Raised for weights where neither elimination regime applies."""


@dataclass(frozen=True)
class EliminationReport:
    weight: WeightClass
    source: TameType
    branch: str
    verdict: str
    matched_orbit: int | None
    lift_sets: tuple[tuple[str, frozenset[int]], ...] | None
    intersection: frozenset[int] | None


def _branch_of(w: WeightClass) -> str:
    x, y, z = w.coords
    p = w.p
    if x - z < p - 3:
        return BRANCH_CRYSTALLINE
    if x - y < p - 5 and y - z < p - 5 and x - z > p + 1:
        return BRANCH_INTERSECTION
    raise UnsupportedWeight(
        f"{w} falls in neither the small-span nor the large-span regime"
    )


def lift_types_for(w: WeightClass) -> tuple[LiftType, LiftType, LiftType]:
    """The three lifts used in the large-span regime at w."""
    if _branch_of(w) != BRANCH_INTERSECTION:
        raise UnsupportedWeight(f"{w} is not in the large-span regime")
    x, y, z = w.coords
    p = w.p
    return (
        principal_series(p, (y, x - p + 1, z)),
        cuspidal(p, (y + 1, x - p + 1, z - 1)),
        cuspidal_dual(p, (x + 1, z + p - 1, y - 1)),
    )


@lru_cache(maxsize=None)
def _crystalline_reps(p: int, coords: tuple[int, int, int]) -> frozenset[int]:
    x, y, z = coords
    return frozenset(
        type_from_exponent(p, tau_exponent(xi, (x + 2, y + 1, z), p)).chars[0].rep
        for xi in ORDER_THREE_CYCLES
    )


@lru_cache(maxsize=None)
def _intersection_data(
    w: WeightClass,
) -> tuple[tuple[tuple[str, frozenset[int]], ...], frozenset[int]]:
    sets = []
    for lift in lift_types_for(w):
        sets.append((lift.kind, reduction_candidates(lift).orbit_reps))
    inter = sets[0][1] & sets[1][1] & sets[2][1]
    return tuple(sets), inter


def intersection_sets(
    w: WeightClass,
) -> tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]:
    """Candidate orbit sets of the three lifts and their intersection."""
    sets, inter = _intersection_data(w)
    by_kind = dict(sets)
    return (
        by_kind[PRINCIPAL_SERIES],
        by_kind[CUSPIDAL],
        by_kind[CUSPIDAL_DUAL],
        inter,
    )


@lru_cache(maxsize=None)
def surviving_family_reps(w: WeightClass) -> frozenset[int]:
    """Closed form of the large-span intersection: two short families.

    tau((1 3 2), (y+b0, x-p+1+b1, z+b2)) for (b0, b1, b2) in
    {(1,2,0), (2,1,0)} together with tau((1 2 3), same coordinates) for
    (b0, b1, b2) in {(1,1,1), (2,1,0)}.
    """
    x, y, z = w.coords
    p = w.p
    reps = set()
    for xi, triples in (
        (XI_132, ((1, 2, 0), (2, 1, 0))),
        (XI_123, ((1, 1, 1), (2, 1, 0))),
    ):
        for b0, b1, b2 in triples:
            mu = (y + b0, x - p + 1 + b1, z + b2)
            reps.add(type_from_exponent(p, tau_exponent(xi, mu, p)).chars[0].rep)
    return frozenset(reps)


def eliminate(w: WeightClass, t: TameType) -> EliminationReport:
    """Decide whether modularity of w is consistent with the type t."""
    if w.n != 3:
        raise ValueError("elimination is defined for rank-3 weights")
    if w.p != t.p:
        raise ValueError("weight and type live over different characteristics")
    if not t.is_irreducible():
        raise ValueError("elimination requires an irreducible niveau-3 type")
    rep = t.orbit_rep()
    branch = _branch_of(w)
    if branch == BRANCH_CRYSTALLINE:
        allowed = _crystalline_reps(w.p, w.coords)
        verdict = CONSISTENT if rep in allowed else ELIMINATED
        return EliminationReport(
            w, t, branch, verdict, rep if rep in allowed else None, None, None
        )
    sets, inter = _intersection_data(w)
    verdict = CONSISTENT if rep in inter else ELIMINATED
    return EliminationReport(
        w, t, branch, verdict, rep if rep in inter else None, sets, inter
    )
