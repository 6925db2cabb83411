"""Positive definite integral binary quadratic forms.

A form (a, b, c) stands for Q(x, y) = a*x**2 + b*x*y + c*y**2 with
integer coefficients, a > 0 and discriminant D = b**2 - 4*a*c < 0.  A
representation Q(x, y) = m is primitive when gcd(x, y) = 1; note that
gcd(x, 0) = |x|, so (2, 0) is not primitive while (1, 0) and (0, 1) are.

Positive definiteness makes every enumeration here finite: for
Q(x, y) = m the admissible y satisfy |D|*y**2 <= 4*a*m, and for each y
the x values solve an integer quadratic.  The value-set and gap
operations walk that ellipse directly, which is the ground truth the
rest of the package leans on; the Kronecker-symbol test is only a
necessary condition used as a fast filter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import factorize, kronecker_symbol

__all__ = [
    "IntQuadForm",
    "Representation",
    "ValueSet",
    "representations",
    "primitive_representations",
    "primitive_value_set",
    "two_sided_gap",
    "kronecker_admissible",
]

# Largest modulus 4m for which the quadratic-residue test scans residues
# directly; beyond this it is decided exactly, prime power by prime power.
QR_SCAN_LIMIT = 10**6


@dataclass(frozen=True)
class IntQuadForm:
    """Coefficients (a, b, c) of a positive definite integral form."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0 or self.discriminant() >= 0:
            raise ValueError(
                f"form {(self.a, self.b, self.c)} is not positive definite"
            )

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"


@dataclass(frozen=True)
class Representation:
    """A solution Q(x, y) = m, tagged with its primitivity."""

    x: int
    y: int
    primitive: bool

    def __post_init__(self) -> None:
        if self.primitive != (math.gcd(self.x, self.y) == 1):
            raise ValueError("primitive flag contradicts gcd(x, y)")

    @classmethod
    def of(cls, x: int, y: int) -> "Representation":
        return cls(x, y, math.gcd(x, y) == 1)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True)
class ValueSet:
    """Primitively represented values of a form up to a limit."""

    form: IntQuadForm
    limit: int
    values: tuple[int, ...]


def representations(form: IntQuadForm, m: int) -> list[Representation]:
    """All integer solutions of Q(x, y) = m, primitive or not.

    Sorted lexicographically by (y, x).  m < 0 is a domain error; m = 0
    has the single solution (0, 0).
    """
    if m < 0:
        raise ValueError("a positive definite form only represents m >= 0")
    a, b = form.a, form.b
    d = form.discriminant()
    out = []
    ymax = math.isqrt(4 * a * m // -d) + 1
    for y in range(-ymax, ymax + 1):
        disc = d * y * y + 4 * a * m
        if disc < 0:
            continue
        s = math.isqrt(disc)
        if s * s != disc:
            continue
        for root in {(-b * y - s), (-b * y + s)}:
            if root % (2 * a) == 0:
                out.append(Representation.of(root // (2 * a), y))
    out.sort(key=lambda r: (r.y, r.x))
    return out


def primitive_representations(form: IntQuadForm, m: int) -> list[Representation]:
    """The primitive solutions of Q(x, y) = m, in (y, x) order."""
    return [r for r in representations(form, m) if r.primitive]


def primitive_value_set(form: IntQuadForm, limit: int) -> ValueSet:
    """All values <= limit taken by the form on coprime pairs.

    Walks every lattice point inside the ellipse Q <= limit once, so the
    cost is proportional to limit / sqrt(|D|).
    """
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    a, b = form.a, form.b
    d = form.discriminant()
    values: set[int] = set()
    ymax = math.isqrt(4 * a * limit // -d) + 1
    for y in range(-ymax, ymax + 1):
        disc = d * y * y + 4 * a * limit
        if disc < 0:
            continue
        s = math.isqrt(disc)
        xlo = -((b * y + s) // (2 * a))
        xhi = (-b * y + s) // (2 * a)
        for x in range(xlo, xhi + 1):
            if math.gcd(x, y) == 1:
                values.add(form.evaluate(x, y))
    return ValueSet(form, limit, tuple(sorted(values)))


def two_sided_gap(form: IntQuadForm, q0: int, limit: int) -> int:
    """Distance from q0 to the nearest other primitive value, capped.

    Returns the largest g such that every primitively represented value
    s with |s - q0| < g equals q0.  The scan only sees values <= limit,
    so the result is capped at limit - q0; q0 itself must be primitively
    represented.
    """
    if limit <= q0:
        raise ValueError("scan limit must exceed q0")
    vals = primitive_value_set(form, limit).values
    if q0 not in vals:
        raise ValueError(f"{q0} has no primitive representation by {form}")
    gap = limit - q0
    for v in vals:
        if v != q0:
            gap = min(gap, abs(v - q0))
    return gap


def _square_mod_prime_power(a: int, p: int, k: int) -> bool:
    """Is x**2 = a (mod p**k) solvable?"""
    a %= p**k
    if a == 0:
        return True
    j = 0
    while a % p == 0:
        a //= p
        j += 1
    if j % 2:
        return False
    e = k - j
    if p == 2:
        if e == 1:
            return True
        if e == 2:
            return a % 4 == 1
        return a % 8 == 1
    return pow(a, (p - 1) // 2, p) == 1


def kronecker_admissible(form: IntQuadForm, m: int) -> bool:
    """Is the discriminant a square modulo 4m?

    A primitive representation of m forces this, so a False here rules m
    out of the primitive value set; True guarantees nothing.  Prime
    divisors p of m with (D|p) = -1 reject early; otherwise small moduli
    are scanned directly and larger ones decided per prime power.
    """
    if m < 1:
        raise ValueError("m must be positive")
    d = form.discriminant()
    for p in factorize(m):
        if kronecker_symbol(d, p) == -1:
            return False
    n = 4 * m
    if n <= QR_SCAN_LIMIT:
        target = d % n
        return any(x * x % n == target for x in range(n // 2 + 1))
    return all(
        _square_mod_prime_power(d, p, k) for p, k in factorize(n).items()
    )
