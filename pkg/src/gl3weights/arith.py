"""Exponent arithmetic for tame characters of niveau d.

A tame character of niveau d is determined by an exponent modulo
p^d - 1; the Frobenius acts on exponents by multiplication by p, and
characters of a smaller niveau embed via the norm-compatible scaling
(p^D - 1)/(p^d - 1).  Everything here is plain modular arithmetic over
Python ints, so all results are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

SUPPORTED_NIVEAUX = (1, 2, 3)

DIVISIBLE = "divisible"
CASE_I = "I"
CASE_II = "II"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> None:
    """Reject characteristics outside the supported range (primes >= 5)."""
    if not is_prime(p) or p < 5:
        raise ValueError(f"characteristic must be a prime >= 5, got {p}")


@dataclass(frozen=True)
class ExpClass:
    """Exponent class of a tame character: a residue modulo p^d - 1."""

    p: int
    d: int
    value: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.d not in SUPPORTED_NIVEAUX:
            raise ValueError(f"niveau must be one of {SUPPORTED_NIVEAUX}, got {self.d}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"exponent {self.value} out of range for modulus {self.modulus}"
            )

    @property
    def modulus(self) -> int:
        return self.p**self.d - 1


@dataclass(frozen=True)
class FrobOrbit:
    """Orbit of an exponent class under multiplication by p.

    The representative is the least member; the orbit size divides d.
    """

    p: int
    d: int
    rep: int
    size: int

    def elements(self) -> tuple[int, ...]:
        e = self.p**self.d - 1
        out = [self.rep]
        cur = self.rep
        for _ in range(self.size - 1):
            cur = cur * self.p % e
            out.append(cur)
        return tuple(out)


def exp_class(p: int, d: int, value: int) -> ExpClass:
    """Build an ExpClass, reducing the exponent modulo p^d - 1."""
    return ExpClass(p, d, value % (p**d - 1))


def orbit(c: ExpClass) -> FrobOrbit:
    e = c.modulus
    members = [c.value]
    cur = c.value * c.p % e
    while cur != c.value:
        members.append(cur)
        cur = cur * c.p % e
    return FrobOrbit(c.p, c.d, min(members), len(members))


def orbit_of(p: int, d: int, value: int) -> FrobOrbit:
    return orbit(exp_class(p, d, value))


def niveau_of(c: ExpClass) -> int:
    """Least k with value * p^k = value mod p^d - 1, i.e. the orbit size."""
    return orbit(c).size


def embed_niveau(c: ExpClass, target_d: int) -> ExpClass:
    """Embed a niveau-1 exponent class into a larger niveau.

    The fundamental character of niveau 1 equals the (p^D-1)/(p-1) power
    of the niveau-D one, so exponents scale by that factor.
    """
    if c.d != 1:
        raise ValueError(f"embedding is defined for niveau-1 classes, got d={c.d}")
    if target_d not in SUPPORTED_NIVEAUX or target_d < c.d:
        raise ValueError(f"cannot embed niveau {c.d} into niveau {target_d}")
    scale = (c.p**target_d - 1) // (c.p - 1)
    return exp_class(c.p, target_d, c.value * scale)


@dataclass(frozen=True)
class Decomposition:
    """Result of the three-digit split of an exponent.

    kind is "divisible" when p^2+p+1 divides n (coords are None), and
    otherwise "I" for n = x + p*y + p^2*z with x > y >= z, x - z <= p,
    or "II" for n = p^2*x + p*y + z with x >= y > z, x - z <= p.
    """

    kind: str
    x: int | None = None
    y: int | None = None
    z: int | None = None

    @property
    def coords(self) -> tuple[int, int, int]:
        if self.kind == DIVISIBLE:
            raise ValueError("divisible split carries no coordinates")
        assert self.x is not None and self.y is not None and self.z is not None
        return (self.x, self.y, self.z)

    def value(self, p: int) -> int:
        """Reassemble the integer the split came from."""
        if self.kind == DIVISIBLE:
            raise ValueError("divisible split carries no coordinates")
        x, y, z = self.coords
        if self.kind == CASE_I:
            return x + p * y + p * p * z
        return p * p * x + p * y + z


def decompose_exponent(n: int, p: int) -> Decomposition:
    """Split n in the unique admissible three-digit form.

    Unless p^2+p+1 divides n, exactly one of the two shapes applies:
    either n = x + p*y + p^2*z with x > y >= z and x - z <= p, or
    n = p^2*x + p*y + z with x >= y > z and x - z <= p, and in each
    shape the coordinates are unique.  Adding p^2+p+1 to n shifts all
    three coordinates by 1, so it suffices to split the residue of n
    and then translate.
    """
    check_prime(p)
    c = p * p + p + 1
    m = n % c
    q = (n - m) // c
    if m == 0:
        return Decomposition(DIVISIBLE)
    # 1 <= m <= c - 1; write m - 1 in base p + 1
    alpha, beta = divmod(m - 1, p + 1)
    if alpha + beta <= p - 1:
        x, y, z = alpha + beta + 1, alpha, 0
        kind = CASE_I
    else:
        x, y, z = 1, alpha + 2 - p, alpha + beta + 1 - 2 * p
        kind = CASE_II
    return Decomposition(kind, x + q, y + q, z + q)
