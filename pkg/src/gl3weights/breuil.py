"""Rank-one Breuil modules with descent data, and reduction candidates.

A rank-one module over the tame extension of degree e = p^d - 1 is
described by Frobenius heights r_i in [0, e*r] and descent exponents
k_i mod e on the d embedding components, subject to the cyclic
congruence k_i = p (k_{i-1} + r_{i-1}) mod e.  Its generic fibre is
determined on inertia by a single exponent kappa_0, computed exactly.

The second half tabulates, for the three relevant shapes of potentially
crystalline rank-3 lifts, the finitely many niveau-3 exponents whose
characters can appear in mod-p reductions of the lift's inertial type.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .arith import ExpClass, check_prime, exp_class
from .tame_types import TameType, type_from_exponent

PRINCIPAL_SERIES = "principal_series"
CUSPIDAL = "cuspidal"
CUSPIDAL_DUAL = "cuspidal_dual"

# parameter triples (a0, a1, a2) entering the candidate tables
TRIPLES_SHORT_PS = ((1, 1, 1), (1, 2, 0), (2, 1, 0))
TRIPLES_SHORT_CUSP = ((0, 2, 1), (1, 1, 1), (1, 2, 0))
TRIPLES_SUM3 = tuple(
    (a0, a1, a2)
    for a0 in range(3)
    for a1 in range(3)
    for a2 in range(3)
    if a0 + a1 + a2 == 3
)


@dataclass(frozen=True)
class BreuilModule:
    """Rank-one module datum (p, d, r, heights r_i, descent exponents k_i)."""

    p: int
    d: int
    r: int
    heights: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def e(self) -> int:
        return self.p**self.d - 1


def validate(
    p: int, d: int, r: int, heights: tuple[int, ...], exponents: tuple[int, ...]
) -> BreuilModule:
    """Check the defining inequalities and congruences; raise on failure."""
    check_prime(p)
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if not 0 <= r <= p - 2:
        raise ValueError(f"weight bound r={r} must lie in [0, {p - 2}]")
    if len(heights) != d or len(exponents) != d:
        raise ValueError(f"need {d} heights and {d} exponents")
    e = p**d - 1
    for i, ri in enumerate(heights):
        if not 0 <= ri <= e * r:
            raise ValueError(f"height r_{i}={ri} outside [0, {e * r}]")
    ks = tuple(k % e for k in exponents)
    for i in range(d):
        want = p * (ks[i - 1] + heights[i - 1]) % e
        if ks[i] != want:
            raise ValueError(
                f"descent congruence fails at i={i}: "
                f"k_{i}={ks[i]} but p*(k_{(i - 1) % d}+r_{(i - 1) % d}) = {want} mod {e}"
            )
    return BreuilModule(p, d, r, tuple(heights), ks)


def _height_sum(m: BreuilModule, start: int) -> int:
    """sum_j r_{start+j} p^(d-1-j), indices mod d."""
    total = 0
    for j in range(m.d):
        total += m.heights[(start + j) % m.d] * m.p ** (m.d - 1 - j)
    return total


def fractional_shift(m: BreuilModule, i: int = 0) -> int:
    """The integer s_i = p * sum_j r_{i+j} p^(d-1-j) / e.

    Integrality is forced by the cyclic descent congruence; s satisfies
    s_{i+1} = p (s_i - r_i) and s_i >= r_i.
    """
    num = m.p * _height_sum(m, i)
    if num % m.e:
        raise ValueError("height vector violates the cyclic divisibility")
    return num // m.e


def inertial_character(m: BreuilModule) -> ExpClass:
    """Exponent kappa_0 of the inertial action on the generic fibre."""
    return exp_class(m.p, m.d, m.exponents[0] + fractional_shift(m, 0))


def maximal_model(m: BreuilModule) -> BreuilModule:
    """The unique model of the same generic fibre with all heights e*r."""
    e = m.e
    kappa = inertial_character(m).value
    unit = e // (m.p - 1)
    s = (kappa - m.r * unit) % e
    ks = tuple(pow(m.p, i, e) * s % e for i in range(m.d))
    return BreuilModule(m.p, m.d, m.r, (e * m.r,) * m.d, ks)


def is_maximal(m: BreuilModule) -> bool:
    return all(ri == m.e * m.r for ri in m.heights)


def is_minimal(m: BreuilModule) -> bool:
    return all(ri == 0 for ri in m.heights)


def random_module(rng: random.Random, p: int, d: int, r: int) -> BreuilModule:
    """Draw a random valid module; used by sweeps and tests.

    All but the last height are free; the last is chosen among the
    residues in [0, e*r] making the cyclic divisibility hold.
    """
    e = p**d - 1
    heights = [rng.randrange(0, e * r + 1) for _ in range(d - 1)]
    partial = sum(h * p ** (d - 1 - j) for j, h in enumerate(heights))
    # the cyclic divisibility asks e | sum_j r_j p^(d-1-j); solve for the last
    residue = (-partial) % e
    choices = range(residue, e * r + 1, e)
    heights.append(rng.choice(list(choices)) if choices else 0)
    k0 = rng.randrange(0, e)
    ks = [k0]
    for i in range(1, d):
        ks.append(p * (ks[-1] + heights[i - 1]) % e)
    return validate(p, d, r, tuple(heights), tuple(ks))


@dataclass(frozen=True)
class LiftType:
    """Inertial type of a potentially crystalline rank-3 lift.

    kind selects the digit layout of the characteristic-zero type:
    a sum of three tame characters (principal series), a niveau-3
    character with ascending digits (a, b, c), or one with the digits
    reversed (c, b, a).
    """

    kind: str
    p: int
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.kind not in (PRINCIPAL_SERIES, CUSPIDAL, CUSPIDAL_DUAL):
            raise ValueError(f"unknown lift kind {self.kind!r}")

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def principal_series(p: int, exps: tuple[int, int, int]) -> LiftType:
    a, b, c = sorted(exps, reverse=True)
    return LiftType(PRINCIPAL_SERIES, p, a, b, c)


def cuspidal(p: int, params: tuple[int, int, int]) -> LiftType:
    return LiftType(CUSPIDAL, p, *params)


def cuspidal_dual(p: int, params: tuple[int, int, int]) -> LiftType:
    return LiftType(CUSPIDAL_DUAL, p, *params)


def check_gaps(t: LiftType) -> None:
    a, b, c = t.params
    if not (a - b > 2 and b - c > 2 and a - c < t.p - 3):
        raise ValueError(
            f"parameters {t.params} violate a-b > 2, b-c > 2, a-c < p-3 at p={t.p}"
        )


@dataclass(frozen=True)
class ReductionCandidates:
    """Set of niveau-3 Frobenius orbits arising in mod-p reductions."""

    p: int
    orbit_reps: frozenset[int]

    def types(self) -> tuple[TameType, ...]:
        return tuple(type_from_exponent(self.p, rep) for rep in sorted(self.orbit_reps))


def _candidate_exponents(t: LiftType) -> list[int]:
    p = t.p
    a, b, c = t.params
    out: list[int] = []
    if t.kind == PRINCIPAL_SERIES:
        for a0, a1, a2 in TRIPLES_SHORT_PS:
            out.append((a + a0) + p * (c + a2) + p * p * (b + a1))
            out.append((a + 2 - a2) + p * (b + 2 - a1) + p * p * (c + 2 - a0))
    elif t.kind == CUSPIDAL:
        for a0, a1, a2 in TRIPLES_SHORT_CUSP:
            out.append((a + a0) + p * (c + a2) + p * p * (b + a1))
        for a0, a1, a2 in TRIPLES_SUM3:
            out.append((a + a0) + p * (b + a2) + p * p * (c + a1))
    else:
        for a0, a1, a2 in TRIPLES_SHORT_CUSP:
            out.append((c + 2 - a0) + p * (a + 2 - a2) + p * p * (b + 2 - a1))
        for a0, a1, a2 in TRIPLES_SUM3:
            out.append((c + 2 - a0) + p * (b + 2 - a2) + p * p * (a + 2 - a1))
    return out


@lru_cache(maxsize=None)
def reduction_candidates(t: LiftType) -> ReductionCandidates:
    """All inertial exponents of rank-one subquotients of reductions.

    Each candidate is the niveau-3 exponent of a character that can
    occur in a reduction of a lattice in the lift; candidates are
    collected as Frobenius orbit representatives.  Both admissible
    digit patterns of the descent data contribute a family.
    """
    check_gaps(t)
    reps = set()
    for value in _candidate_exponents(t):
        reps.add(type_from_exponent(t.p, value).chars[0].rep)
    return ReductionCandidates(t.p, frozenset(reps))
