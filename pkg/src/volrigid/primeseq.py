"""Primes whose quadratic-form representations sit in a two-sided gap.

The searches here produce values v (a prime p, or twice a prime) such
that, verified by brute force:

  (i)   v is represented by the family's carrier form Q1, the
        representation is primitive, and every integer representation
        lies in one sign class (for the m004 family) or sign-and-swap
        class (for the m125 family);
  (ii)  none of v - g .. v + g other than v itself is primitively
        represented by the family's companion form Q0;
  (iii) v has no primitive representation by the excluded form Q2.

Candidates come from a congruence system: shifted values v +- k pick up
a designated "avoid" prime divisor, which kills primitive
representability by Q0, and a base congruence (1 mod 12, or 1 mod 4 on
the underlying prime) forces the wanted representation behaviour.  The
system is solved by the Chinese remainder theorem and the resulting
arithmetic progression is walked for primes.  The congruences only make
conditions likely by design; every reported witness is re-verified
directly, so a bug in the construction can cost completeness but never
soundness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .arith import is_prime as _is_prime
from .arith import kronecker_symbol as _kronecker
from .quadform import (
    IntQuadForm,
    Representation,
    primitive_representations,
    representations,
)

__all__ = [
    "CongruenceSystem",
    "GapPrimeSpec",
    "GapPrimeWitness",
    "GapPrimeSearch",
    "EmptyProgressionError",
    "FAMILY_M004",
    "FAMILY_M125",
    "DEFAULT_SEARCH_CAP",
    "is_prime",
    "kronecker_symbol",
    "crt_solve",
    "primes_in_progression",
    "default_avoid_primes",
    "build_congruences",
    "verify_witness",
    "gap_prime_sequence",
]

FAMILY_M004 = "m004-family"
FAMILY_M125 = "m125-family"

DEFAULT_SEARCH_CAP = 10**9
CHECKPOINT_EVERY = 10**6


def is_prime(n: int) -> bool:
    """Primality test (deterministic below 2**64)."""
    return _is_prime(n)


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    return _kronecker(a, n)


class EmptyProgressionError(ValueError):
    """The arithmetic progression contains no primes at all."""


@dataclass(frozen=True)
class CongruenceSystem:
    """Simultaneous congruences n = r (mod m) with pairwise coprime moduli."""

    congruences: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        reduced = []
        for r, m in self.congruences:
            if m < 2:
                raise ValueError(f"modulus {m} must be at least 2")
            reduced.append((r % m, m))
        moduli = [m for _, m in reduced]
        for i, m1 in enumerate(moduli):
            for m2 in moduli[i + 1 :]:
                if math.gcd(m1, m2) != 1:
                    raise ValueError(f"moduli {m1} and {m2} are not coprime")
        object.__setattr__(self, "congruences", tuple(reduced))


def crt_solve(system: CongruenceSystem) -> tuple[int, int]:
    """Smallest nonnegative solution and combined modulus."""
    n0, modulus = 0, 1
    for r, m in system.congruences:
        if math.gcd(modulus, m) != 1:
            raise ValueError("moduli are not pairwise coprime")
        k = (r - n0) * pow(modulus, -1, m) % m
        n0 += modulus * k
        modulus *= m
    return n0 % modulus, modulus


def _progression(n0: int, modulus: int, cap: int,
                 checkpoint: Callable[[int], None] | None) -> Iterator[int]:
    n = n0
    seen = 0
    while n <= cap:
        if n >= 2 and _is_prime(n):
            yield n
        n += modulus
        seen += 1
        if checkpoint is not None and seen % CHECKPOINT_EVERY == 0:
            checkpoint(n)


def primes_in_progression(
    n0: int,
    modulus: int,
    count: int,
    cap: int,
    checkpoint: Callable[[int], None] | None = None,
) -> list[int]:
    """First `count` primes = n0 (mod modulus), bounded by cap, ascending.

    When gcd(n0, modulus) > 1 every term shares that divisor, so the
    progression is prime-free unless n0 itself is prime.
    """
    if modulus < 1 or n0 < 0:
        raise ValueError("need n0 >= 0 and modulus >= 1")
    if math.gcd(n0, modulus) > 1:
        if _is_prime(n0):
            return [n0] if n0 <= cap else []
        raise EmptyProgressionError(
            f"gcd({n0}, {modulus}) > 1 and {n0} is composite"
        )
    out = []
    for p in _progression(n0, modulus, cap, checkpoint):
        out.append(p)
        if len(out) == count:
            break
    return out


@dataclass(frozen=True)
class _Family:
    tag: str
    gap_form: IntQuadForm        # Q0, must miss the shifted values
    carrier_form: IntQuadForm    # Q1, must hit the value essentially once
    excluded_form: IntQuadForm   # Q2, must miss the value
    avoid_residue: tuple[int, int]   # required residue class of avoid primes
    allow_swap: bool             # representation class includes (b, a)

    def witness_value(self, p: int) -> int:
        return 2 * p if self.tag == FAMILY_M125 else p


_FAMILIES = {
    FAMILY_M004: _Family(
        tag=FAMILY_M004,
        gap_form=IntQuadForm(1, 1, 1),
        carrier_form=IntQuadForm(1, 0, 12),
        excluded_form=IntQuadForm(4, 4, 4),
        avoid_residue=(5, 6),
        allow_swap=False,
    ),
    FAMILY_M125: _Family(
        tag=FAMILY_M125,
        gap_form=IntQuadForm(1, 0, 1),
        carrier_form=IntQuadForm(2, 0, 2),
        excluded_form=IntQuadForm(1, 0, 4),
        avoid_residue=(3, 4),
        allow_swap=True,
    ),
}


@dataclass(frozen=True)
class GapPrimeSpec:
    """Parameters of a gap-prime search.

    g is the half-width of the wanted gap; avoid_primes lists 2*g
    distinct primes in the family's mandatory residue class (5 mod 6 for
    the m004 family, 3 mod 4 for the m125 family), one per shift
    v - g .. v - 1, v + 1 .. v + g.
    """

    g: int
    family: str
    avoid_primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError("gap half-width g must be at least 1")
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.avoid_primes) != 2 * self.g:
            raise ValueError(f"need exactly {2 * self.g} avoid primes")
        if len(set(self.avoid_primes)) != len(self.avoid_primes):
            raise ValueError("avoid primes must be distinct")
        res, mod = _FAMILIES[self.family].avoid_residue
        for p in self.avoid_primes:
            if not _is_prime(p):
                raise ValueError(f"avoid value {p} is not prime")
            if p % mod != res:
                raise ValueError(f"avoid prime {p} is not {res} mod {mod}")


def default_avoid_primes(family: str, g: int) -> tuple[int, ...]:
    """The 2*g smallest primes in the family's mandatory residue class."""
    res, mod = _FAMILIES[family].avoid_residue
    out = []
    p = 2
    while len(out) < 2 * g:
        if p % mod == res and _is_prime(p):
            out.append(p)
        p += 1
    return tuple(out)


def build_congruences(spec: GapPrimeSpec) -> CongruenceSystem:
    """Congruence system whose solutions are the search candidates.

    m004 family (candidate is the prime p itself): p - i = 0 mod the
    i-th avoid prime and p + i = 0 mod the (g+i)-th, plus p = 1 mod 12.

    m125 family (candidate prime p, witness value 2p): the same shifts
    on the value, rewritten on p through 2p -+ k = 0, plus p = 1 mod 4.
    """
    fam = _FAMILIES[spec.family]
    g = spec.g
    congruences = []
    for i in range(1, g + 1):
        minus_p = spec.avoid_primes[i - 1]
        plus_p = spec.avoid_primes[g + i - 1]
        if fam.tag == FAMILY_M004:
            congruences.append((i, minus_p))
            congruences.append((-i, plus_p))
        else:
            congruences.append((i * pow(2, -1, minus_p), minus_p))
            congruences.append((-i * pow(2, -1, plus_p), plus_p))
    congruences.append((1, 12) if fam.tag == FAMILY_M004 else (1, 4))
    return CongruenceSystem(tuple(congruences))


@dataclass(frozen=True)
class GapPrimeWitness:
    """A verified (or failed) candidate with its condition report."""

    value: int
    representation: Representation | None
    verified_gap: int
    conditions: dict[str, bool] = field(compare=False)

    @property
    def verified(self) -> bool:
        return all(self.conditions.values())


def _representation_class(rep: tuple[int, int], allow_swap: bool) -> set[tuple[int, int]]:
    x, y = rep
    cls = {(x, y), (-x, y), (x, -y), (-x, -y)}
    if allow_swap:
        cls |= {(y, x), (-y, x), (y, -x), (-y, -x)}
    return cls


def verify_witness(value: int, spec: GapPrimeSpec) -> GapPrimeWitness:
    """Brute-force check of the three gap conditions for one value.

    Failed conditions are reported in the result, never raised.
    """
    fam = _FAMILIES[spec.family]
    all_reps = representations(fam.carrier_form, value)
    prim = [r.pair for r in all_reps if r.primitive]
    representation = None
    unique = False
    if prim:
        canonical = min((abs(x), abs(y)) for x, y in prim)
        cls = _representation_class(canonical, fam.allow_swap)
        unique = all(r.pair in cls for r in all_reps)
        representation = Representation.of(*canonical)
    gap_clear = True
    for k in range(1, spec.g + 1):
        if value - k >= 0 and primitive_representations(fam.gap_form, value - k):
            gap_clear = False
        if primitive_representations(fam.gap_form, value + k):
            gap_clear = False
    excluded = not primitive_representations(fam.excluded_form, value)
    return GapPrimeWitness(
        value=value,
        representation=representation,
        verified_gap=spec.g,
        conditions={
            "unique_representation": unique,
            "neighbors_unrepresented": gap_clear,
            "excluded_form_missed": excluded,
        },
    )


@dataclass(frozen=True)
class GapPrimeSearch:
    """Verified witnesses plus a flag for a cap-exhausted search."""

    witnesses: tuple[GapPrimeWitness, ...]
    truncated: bool


def gap_prime_sequence(
    spec: GapPrimeSpec,
    count: int,
    cap: int = DEFAULT_SEARCH_CAP,
    checkpoint: Callable[[int], None] | None = None,
    shards: int = 1,
) -> GapPrimeSearch:
    """First `count` fully verified witnesses from the congruence search.

    The underlying prime progression is capped at `cap`; running out
    before `count` witnesses are found returns a truncated result rather
    than raising.  shards > 1 partitions the progression into interleaved
    subprogressions scanned separately and merged; the result is
    identical to the single-shard scan.
    """
    if count < 0 or cap < 0 or shards < 1:
        raise ValueError("count, cap and shards must be nonnegative (shards >= 1)")
    fam = _FAMILIES[spec.family]
    n0, modulus = crt_solve(build_congruences(spec))
    found: list[GapPrimeWitness] = []
    for shard in range(shards):
        shard_found = []
        for p in _progression(n0 + shard * modulus, shards * modulus, cap,
                              checkpoint):
            witness = verify_witness(fam.witness_value(p), spec)
            if witness.verified:
                shard_found.append(witness)
                if len(shard_found) == count:
                    break
        found.extend(shard_found)
    found.sort(key=lambda w: w.value)
    del found[count:]
    return GapPrimeSearch(tuple(found), truncated=len(found) < count)
