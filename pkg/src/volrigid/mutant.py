"""Cyclic binary words, their cusp graphs, and mutant census counts.

A word b_0 .. b_(n-1) of length n >= 3, read cyclically, encodes one
member of a family of chain-link complements that all share the volume
4*n*V_OCT.  The letters sit at n crossing circles (1 = extra half
twist), and the word's structure determines the cusp data:

  * zeros cut the word into k maximal runs of ones of lengths i_1..i_k
    (k + sum i_j = n); each run gives a knotted cusp of modulus
    4*(i_j + 1);
  * the all-ones word is special: no zeros, two knotted cusps of
    modulus 2*n each;
  * one apex cusp of modulus n sits over everything;
  * 2n small cusps of modulus 1 or 2 come from the crossing circles.

The cusp graph records what a geometric invariant can see: the apex
label, the cyclically ordered knot labels, and whether the word was
all ones.  Two words produce isometric members exactly when one is a
rotation or reflection of the other, which is exactly when their cusp
graphs are isomorphic; the census counters below rely on that.

Moduli of the small cusps are not pinned down by the word alone: the
letter-controlled circle has modulus 1 over a one and 2 over a zero,
while the n remaining first-stage circles default to modulus 1 here
(matching the all-ones description) and are configurable.  Nothing in
the classification reads them; they only feed the horoball area report
(area 4*m for modulus m > 2, area 2 for the small cusps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_phi, factorize
from .nzvolume import V_OCT

__all__ = [
    "ALL_ONES",
    "CYCLE",
    "CyclicWord",
    "SubwordDecomposition",
    "CuspGraph",
    "MutantCensusReport",
    "decompose",
    "knot_cusp_moduli",
    "cusp_graph",
    "graphs_isomorphic",
    "canonical_form",
    "enumerate_classes",
    "bracelet_count",
    "horoball_areas",
    "census_report",
    "COMPARISON_GROWTH_RATE",
]

ALL_ONES = "all-ones"
CYCLE = "cycle"

# Published growth-rate constant of another known census, reported next
# to this family's ln(2)/(4*V_OCT) for comparison.
COMPARISON_GROWTH_RATE = 0.0287706

MAX_WORD_LENGTH = 30


@dataclass(frozen=True)
class CyclicWord:
    """A cyclic binary word of length at least 3."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) < 3:
            raise ValueError("cyclic words must have length at least 3")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("cyclic words are binary")

    @classmethod
    def from_string(cls, text: str) -> "CyclicWord":
        if not all(ch in "01" for ch in text):
            raise ValueError(f"{text!r} is not a binary word")
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class SubwordDecomposition:
    """Runs of ones between consecutive zeros, cyclically."""

    kind: str
    i_sequence: tuple[int, ...]


def decompose(word: CyclicWord) -> SubwordDecomposition:
    """Cut the word at its zeros.

    Each of the k zeros starts a (cyclic) subword 0 1^i 0 sharing its
    closing zero with the next subword; the all-ones word has no zeros
    and is its own special case.
    """
    zeros = [i for i, b in enumerate(word.bits) if b == 0]
    if not zeros:
        return SubwordDecomposition(ALL_ONES, ())
    n = word.n
    runs = tuple(
        (zeros[(j + 1) % len(zeros)] - zeros[j] - 1) % n
        for j in range(len(zeros))
    )
    return SubwordDecomposition(CYCLE, runs)


def knot_cusp_moduli(word: CyclicWord) -> tuple[int, ...]:
    """Multiset (sorted) of knotted-cusp moduli: 4*(i_j + 1), or twice 2n."""
    dec = decompose(word)
    if dec.kind == ALL_ONES:
        return (2 * word.n, 2 * word.n)
    return tuple(sorted(4 * (i + 1) for i in dec.i_sequence))


@dataclass(frozen=True)
class CuspGraph:
    """Apex label, cyclically ordered knot labels, all-ones marker."""

    apex_label: int
    cycle_labels: tuple[int, ...]
    special_triangle: bool

    def __post_init__(self) -> None:
        if self.apex_label < 3:
            raise ValueError("apex label is the word length, at least 3")
        if not self.special_triangle and any(
            lbl < 3 or lbl % 4 != 0 for lbl in self.cycle_labels
        ):
            raise ValueError("knot labels must be multiples of 4")


def cusp_graph(word: CyclicWord) -> CuspGraph:
    """Invariant graph: apex joined to the cycle of knot labels."""
    dec = decompose(word)
    if dec.kind == ALL_ONES:
        return CuspGraph(word.n, (2 * word.n, 2 * word.n), True)
    return CuspGraph(
        word.n, tuple(4 * (i + 1) for i in dec.i_sequence), False
    )


def _necklace_canonical(labels: tuple[int, ...]) -> tuple[int, ...]:
    k = len(labels)
    best = labels
    for seq in (labels, labels[::-1]):
        for shift in range(k):
            rot = seq[shift:] + seq[:shift]
            if rot < best:
                best = rot
    return best


def graphs_isomorphic(g1: CuspGraph, g2: CuspGraph) -> bool:
    """Isomorphism respecting the apex and the special marker.

    For ordinary graphs the label cycles must match up to rotation and
    reflection; the special triangles are determined by the apex alone.
    """
    if g1.special_triangle != g2.special_triangle:
        return False
    if g1.apex_label != g2.apex_label:
        return False
    if g1.special_triangle:
        return sorted(g1.cycle_labels) == sorted(g2.cycle_labels)
    if len(g1.cycle_labels) != len(g2.cycle_labels):
        return False
    return _necklace_canonical(g1.cycle_labels) == _necklace_canonical(
        g2.cycle_labels
    )


def _reverse_bits(w: int, n: int) -> int:
    return int(f"{w:0{n}b}"[::-1], 2)


def _canonical_int(w: int, n: int) -> int:
    """Smallest n-bit value over all rotations and reflections."""
    mask = (1 << n) - 1
    best = w
    for start in (w, _reverse_bits(w, n)):
        x = start
        if x < best:
            best = x
        for _ in range(n - 1):
            x = ((x << 1) & mask) | (x >> (n - 1))
            if x < best:
                best = x
    return best


def _word_to_int(word: CyclicWord) -> int:
    out = 0
    for b in word.bits:
        out = (out << 1) | b
    return out


def _int_to_word(w: int, n: int) -> CyclicWord:
    return CyclicWord(tuple((w >> (n - 1 - i)) & 1 for i in range(n)))


def canonical_form(word: CyclicWord) -> CyclicWord:
    """Lexicographically smallest rotation or reflected rotation."""
    return _int_to_word(_canonical_int(_word_to_int(word), word.n), word.n)


def enumerate_classes(n: int) -> list[CyclicWord]:
    """Canonical representatives of all length-n words, sorted.

    The scan is exhaustive over 2**n words, so n is capped at
    MAX_WORD_LENGTH; counts are cross-checkable against bracelet_count.
    """
    if not 3 <= n <= MAX_WORD_LENGTH:
        raise ValueError(f"word length must be in 3..{MAX_WORD_LENGTH}")
    reps = {_canonical_int(w, n) for w in range(1 << n)}
    return [_int_to_word(w, n) for w in sorted(reps)]


def bracelet_count(n: int) -> int:
    """Number of binary bracelets of length n, by Burnside's lemma.

    Rotations contribute sum over d | n of phi(d)*2^(n/d); reflections
    contribute n*2^((n+1)/2) for odd n and
    (n/2)*(2^(n/2+1) + 2^(n/2)) for even n; divide the lot by 2n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    divisors = [1]
    for p, e in factorize(n).items():
        divisors = [d * p**i for d in divisors for i in range(e + 1)]
    rotations = sum(euler_phi(d) * 2 ** (n // d) for d in divisors)
    if n % 2:
        reflections = n * 2 ** ((n + 1) // 2)
    else:
        reflections = (n // 2) * (2 ** (n // 2 + 1) + 2 ** (n // 2))
    return (rotations + reflections) // (2 * n)


def horoball_areas(
    word: CyclicWord, first_stage_modulus: int = 1
) -> tuple[tuple[int, int], ...]:
    """Sorted (modulus, area) pairs over all cusps of the member.

    Cusps of modulus m > 2 have maximal horoball area 4*m; the 2n small
    cusps (moduli 1 and 2) have area 2.  Letter circles contribute
    modulus 1 over a one and 2 over a zero; the n first-stage circles
    take the configured modulus.
    """
    if first_stage_modulus not in (1, 2):
        raise ValueError("first-stage circle modulus is 1 or 2")
    n = word.n
    dec = decompose(word)
    cusps = [(n, 4 * n)]
    if dec.kind == ALL_ONES:
        cusps += [(2 * n, 8 * n)] * 2
    else:
        cusps += [(4 * (i + 1), 16 * (i + 1)) for i in dec.i_sequence]
    cusps += [(1 if b else 2, 2) for b in word.bits]
    cusps += [(first_stage_modulus, 2)] * n
    return tuple(sorted(cusps))


@dataclass(frozen=True)
class MutantCensusReport:
    """Counts and growth numbers for the length-n slice of the family."""

    n: int
    class_count: int
    lower_bound: Fraction
    volume: float
    log_growth: float
    asymptotic_constant: float
    comparison_constant: float


def census_report(n: int) -> MutantCensusReport:
    """Isometry classes at length n against the shared volume 4*n*V_OCT.

    class_count is the exact bracelet-style count from the exhaustive
    enumeration; 2**n/(2n) lower-bounds it, and ln(class_count)/volume
    approaches ln(2)/(4*V_OCT) ~ 0.0473 from below.
    """
    count = len(enumerate_classes(n))
    volume = 4 * n * V_OCT
    return MutantCensusReport(
        n=n,
        class_count=count,
        lower_bound=Fraction(2**n, 2 * n),
        volume=volume,
        log_growth=math.log(count) / volume,
        asymptotic_constant=math.log(2) / (4 * V_OCT),
        comparison_constant=COMPARISON_GROWTH_RATE,
    )
