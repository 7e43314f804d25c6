"""Three-dimensional tame inertial types and their exponent calculus.

A tame type here is a sum of Frobenius orbits of exponent classes
modulo p^3 - 1 whose sizes add up to 3: either a single orbit of size
3 (an irreducible niveau-3 type) or three niveau-1 classes embedded at
niveau 3.  Types built from an order-3 permutation xi and a coordinate
triple mu collect the orbit of the exponent sum_i mu_{xi^i(1)} p^i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import FrobOrbit, check_prime, exp_class, orbit

XI_123 = "123"  # cycle sending 1 -> 2 -> 3 -> 1
XI_132 = "132"  # cycle sending 1 -> 3 -> 2 -> 1
ORDER_THREE_CYCLES = (XI_123, XI_132)

FORCED = "forced"
NOT_ISOMORPHIC = "not_isomorphic"
HYPOTHESIS_VIOLATED = "hypothesis_violated"


@dataclass(frozen=True)
class TameType:
    """Multiset of Frobenius orbits at niveau 3 with total size 3."""

    p: int
    chars: tuple[FrobOrbit, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        if sum(o.size for o in self.chars) != 3:
            raise ValueError("orbit sizes must add up to 3")
        for o in self.chars:
            if o.p != self.p or o.d != 3:
                raise ValueError("all orbits must live at niveau 3 over the same p")
        if tuple(sorted(self.chars, key=lambda o: o.rep)) != self.chars:
            raise ValueError("orbits must be listed sorted by representative")

    @property
    def niveau(self) -> int:
        return max(o.size for o in self.chars)

    def is_irreducible(self) -> bool:
        return len(self.chars) == 1

    def orbit_rep(self) -> int:
        if not self.is_irreducible():
            raise ValueError("orbit representative needs an irreducible type")
        return self.chars[0].rep

    def __str__(self) -> str:
        return "+".join(f"[{o.rep}]" for o in self.chars)


def type_from_exponent(p: int, value: int) -> TameType:
    """Type psi + psi^p + psi^(p^2) for the character with this exponent."""
    o = orbit(exp_class(p, 3, value))
    if o.size == 3:
        return TameType(p, (o,))
    # degenerate: psi has niveau 1, the sum is three copies
    return TameType(p, (o, o, o))


def sum_of_characters(p: int, values: tuple[int, int, int]) -> TameType:
    """Type given by three niveau-1 exponents, embedded at niveau 3."""
    scale = p * p + p + 1
    orbits = [orbit(exp_class(p, 3, v * scale)) for v in values]
    return TameType(p, tuple(sorted(orbits, key=lambda o: o.rep)))


def tau_exponent(xi: str, mu: tuple[int, int, int], p: int) -> int:
    """Niveau-3 exponent attached to (xi, mu): mu_{xi^0(1)} + p mu_{xi(1)} + p^2 mu_{xi^2(1)}."""
    m1, m2, m3 = mu
    if xi == XI_123:
        raw = m1 + p * m2 + p * p * m3
    elif xi == XI_132:
        raw = m1 + p * m3 + p * p * m2
    else:
        raise ValueError(f"xi must be one of {ORDER_THREE_CYCLES}, got {xi!r}")
    return raw % (p**3 - 1)


def tau(xi: str, mu: tuple[int, int, int], p: int) -> TameType:
    return type_from_exponent(p, tau_exponent(xi, mu, p))


def iso(t1: TameType, t2: TameType) -> bool:
    if t1.p != t2.p:
        raise ValueError("types live over different characteristics")
    return tuple(o.rep for o in t1.chars) == tuple(o.rep for o in t2.chars)


def dual_twist(t: TameType, cyclotomic_power: int) -> TameType:
    """Dual type twisted by the given power of the cyclotomic character.

    On exponents this negates and then adds cyclotomic_power*(1+p+p^2);
    for niveau-1 summands the same shift realises a niveau-1 twist.
    """
    e = t.p**3 - 1
    shift = cyclotomic_power * (t.p * t.p + t.p + 1)
    orbits = [orbit(exp_class(t.p, 3, (-o.rep + shift) % e)) for o in t.chars]
    return TameType(t.p, tuple(sorted(orbits, key=lambda o: o.rep)))


@dataclass(frozen=True)
class DistinguishResult:
    """Outcome of comparing tau(xi, (a,b,c)) against tau(xi', (x,y,z)).

    For strictly decreasing triples with span at most p and equal sums,
    an isomorphism can only be the identity: same cycle, same triple.
    """

    tag: str
    matches: tuple[tuple[str, str], ...] = ()


def distinguish(
    abc: tuple[int, int, int], xyz: tuple[int, int, int], p: int
) -> DistinguishResult:
    a, b, c = abc
    x, y, z = xyz
    ok = a > b > c and a - c <= p and x > y > z and x - z <= p
    if not ok or a + b + c != x + y + z:
        return DistinguishResult(HYPOTHESIS_VIOLATED)
    matches = []
    for xi1 in ORDER_THREE_CYCLES:
        t1 = tau(xi1, abc, p)
        for xi2 in ORDER_THREE_CYCLES:
            if iso(t1, tau(xi2, xyz, p)):
                matches.append((xi1, xi2))
    if not matches:
        return DistinguishResult(NOT_ISOMORPHIC)
    for xi1, xi2 in matches:
        if xi1 != xi2 or abc != xyz:
            raise AssertionError(
                f"rigidity failure: tau({xi1},{abc}) = tau({xi2},{xyz}) at p={p}"
            )
    return DistinguishResult(FORCED, tuple(matches))


def gap_interval_condition(
    exponents: tuple[int, ...], p: int, d: int, r: int
) -> bool:
    """Pairwise-difference test for irreducible mod-p reduction.

    With e = p^d - 1 the test asks that (a_j - a_l)/p mod e land in the
    open interval (e r/(p-1), e (p-1-r)/(p-1)) for every pair j != l.
    Division by p is exact modulo e.  Requires r < (p-1)/2 so that the
    interval is nonempty.
    """
    check_prime(p)
    if d not in (1, 2, 3):
        raise ValueError(f"unsupported niveau {d}")
    if not 0 <= 2 * r < p - 1:
        raise ValueError(f"weight bound r={r} must satisfy 0 <= r < (p-1)/2")
    e = p**d - 1
    unit = e // (p - 1)
    lo, hi = r * unit, (p - 1 - r) * unit
    inv_p = pow(p, d - 1, e)
    for j, aj in enumerate(exponents):
        for l, al in enumerate(exponents):
            if j == l:
                continue
            v = (aj - al) * inv_p % e
            if not lo < v < hi:
                return False
    return True
