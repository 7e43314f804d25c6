"""Weight cycling: propagating modularity through the predicted set.

Starting from one modular, strongly generic weight, alternating the
two normalised Hecke operators forces further predicted weights to be
modular: whenever the implied-weight set of a known weight meets the
predicted set in exactly one class, that class is deduced and explored
in turn.  For generic parameters this closure reaches all nine
predicted weights.  The engine re-checks every membership decision
against the elimination branch and refuses to continue on any
disagreement, so a completed graph certifies both computations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .elimination import CONSISTENT, eliminate
from .induction import implied_weights
from .predicted import (
    LOWER_FAMILY,
    PredictedSet,
    SHADOW_FAMILY,
    UPPER_FAMILY,
    is_predicted,
    nine_weight_families,
)
from .tame_types import TameType, dual_twist, type_from_exponent
from .weights import WeightClass, dual, is_generic

CASE_DIRECT = "direct"
CASE_DUAL = "dual"

STATUS_COMPLETE = "complete"
STATUS_STUCK = "stuck"


class ConsistencyError(RuntimeError):
    """Internal cross-check failure: membership and elimination disagree."""


@dataclass(frozen=True)
class CyclingGraph:
    p: int
    case: str
    params: tuple[int, int, int]
    source: TameType
    start: WeightClass
    nodes: frozenset[WeightClass]
    edges: tuple[tuple[WeightClass, WeightClass, int], ...]
    non_singletons: tuple[tuple[WeightClass, int, tuple[WeightClass, ...]], ...]
    families: tuple[tuple[WeightClass, str], ...]
    predicted: PredictedSet
    status: str
    stuck_node: WeightClass | None = None
    stuck_reason: str | None = None


def _table_parameter_solutions(t: TameType) -> tuple[tuple[int, int, int], ...]:
    """All (a, b, c) with a-b > 5, b-c > 4, a-c < p-7, last coordinate
    in [0, p-2], whose attached type tau((1 2 3), (a+2, b+1, c)) is t."""
    p = t.p
    rep = t.orbit_rep()
    e = p**3 - 1
    c2 = p * p + p + 1
    members = type_from_exponent(p, rep).chars[0].elements()
    found = set()
    for n in members:
        for g2 in range(5, p - 13):
            base = (g2 + 2) + p * (g2 + 1)
            g1 = (n - base) % c2
            if not 6 <= g1 <= p - 8 - g2:
                continue
            a_val = (base + g1) % e
            z = (n - a_val) % e // c2
            found.add((z + g1 + g2, z + g2, z))
    return tuple(sorted(found))


def normalize_parameters(
    t: TameType, start: WeightClass
) -> tuple[str, tuple[int, int, int]]:
    """Locate the type inside a nine-weight table, directly or dually.

    Returns ("direct", (a, b, c)) when t is tau((1 2 3), (a+2, b+1, c))
    for table parameters, and ("dual", (a, b, c)) when the cyclotomic
    double twist of the dual of t is.  Several parameter triples can
    match (they yield the same nine classes); the least is returned.

    The start weight must be 4-generic: that covers all nine table
    weights (some of which just miss 6-genericity), and the solver
    verifies the table-range bounds on (a, b, c) directly rather than
    inferring them from a stronger genericity of the start.
    """
    if not t.is_irreducible():
        raise ValueError("cycling requires an irreducible niveau-3 type")
    if not is_generic(start):
        raise ValueError(f"start weight {start} is not 4-generic")
    if not is_predicted(start, t):
        raise ValueError(f"start weight {start} is not predicted for the type")
    direct = _table_parameter_solutions(t)
    if direct:
        return (CASE_DIRECT, direct[0])
    flipped = _table_parameter_solutions(dual_twist(t, 2))
    if flipped:
        return (CASE_DUAL, flipped[0])
    raise ValueError("type does not fit any generic nine-weight table")


def _checked_membership(v: WeightClass, t: TameType) -> bool:
    """Membership with the elimination branch as a mandatory cross-check."""
    member = is_predicted(v, t)
    report = eliminate(v, t)
    if (report.verdict == CONSISTENT) != member:
        raise ConsistencyError(
            f"membership and elimination disagree at {v} for type {t}"
        )
    return member


def _closure(
    t: TameType, start: WeightClass, params: tuple[int, int, int]
) -> CyclingGraph:
    a, b, c = params
    p = t.p
    fams = nine_weight_families(a, b, c, p)
    table = frozenset(w for fam in fams.values() for w in fam)
    predicted = PredictedSet(p, table, t)
    if start not in table:
        raise ConsistencyError(
            f"predicted start {start} missing from the nine-weight table {params}"
        )
    nodes = {start}
    edges: list[tuple[WeightClass, WeightClass, int]] = []
    stalls: list[tuple[WeightClass, int, tuple[WeightClass, ...]]] = []
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for j in (1, 2):
            implied = implied_weights(w, j)
            filtered = sorted(
                (v for v in implied if _checked_membership(v, t)),
                key=lambda v: v.coords,
            )
            if len(filtered) == 1:
                v = filtered[0]
                edges.append((w, v, j))
                if v not in nodes:
                    nodes.add(v)
                    queue.append(v)
            elif filtered:
                stalls.append((w, j, tuple(filtered)))
    families = tuple(
        sorted(
            ((w, name) for name in (LOWER_FAMILY, UPPER_FAMILY, SHADOW_FAMILY)
             for w in fams[name]),
            key=lambda pair: pair[0].coords,
        )
    )
    if nodes == table:
        status, stuck_node, reason = STATUS_COMPLETE, None, None
    else:
        status = STATUS_STUCK
        missing = sorted(table - nodes, key=lambda v: v.coords)
        stuck_node = missing[0]
        reason = f"closure reached {len(nodes)} of {len(table)} predicted weights"
    return CyclingGraph(
        p=p,
        case=CASE_DIRECT,
        params=params,
        source=t,
        start=start,
        nodes=frozenset(nodes),
        edges=tuple(edges),
        non_singletons=tuple(stalls),
        families=families,
        predicted=predicted,
        status=status,
        stuck_node=stuck_node,
        stuck_reason=reason,
    )


def _dualize_graph(g: CyclingGraph, t: TameType, start: WeightClass) -> CyclingGraph:
    swap = {1: 2, 2: 1}
    return CyclingGraph(
        p=g.p,
        case=CASE_DUAL,
        params=g.params,
        source=t,
        start=start,
        nodes=frozenset(dual(w) for w in g.nodes),
        edges=tuple((dual(u), dual(v), swap[j]) for u, v, j in g.edges),
        non_singletons=tuple(
            (dual(w), swap[j], tuple(sorted((dual(v) for v in vs),
                                            key=lambda v: v.coords)))
            for w, j, vs in g.non_singletons
        ),
        families=tuple(
            sorted(((dual(w), name) for w, name in g.families),
                   key=lambda pair: pair[0].coords)
        ),
        predicted=PredictedSet(g.p, frozenset(dual(w) for w in g.predicted.weights), t),
        status=g.status,
        stuck_node=dual(g.stuck_node) if g.stuck_node is not None else None,
        stuck_reason=g.stuck_reason,
    )


def cycle(t: TameType, start: WeightClass) -> CyclingGraph:
    """Run the cycling closure from a strongly generic predicted weight."""
    case, params = normalize_parameters(t, start)
    if case == CASE_DIRECT:
        return _closure(t, start, params)
    inner = _closure(dual_twist(t, 2), dual(start), params)
    return _dualize_graph(inner, t, start)


def emit_dot(g: CyclingGraph) -> str:
    """Deterministic DOT rendering of a cycling graph."""
    fam = dict(g.families)
    lines = ["digraph weight_cycling {"]
    label = f"start {g.start}; status {g.status}"
    if g.status == STATUS_STUCK:
        label += f" ({g.stuck_reason})"
    lines.append(f'  label="{label}";')
    for w in sorted(g.nodes, key=lambda v: v.coords):
        attrs = [f'family="{fam.get(w, "?")}"']
        if w == g.start:
            attrs.append("peripheries=2")
        lines.append(f'  "{w}" [{", ".join(attrs)}];')
    seen = set()
    for u, v, j in sorted(g.edges, key=lambda e: (e[0].coords, e[1].coords, e[2])):
        key = (u, v, j)
        if key in seen:
            continue
        seen.add(key)
        lines.append(f'  "{u}" -> "{v}" [label="T{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
