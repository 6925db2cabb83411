"""Cyclic words, cusp graphs, bracelet counts, and the census report."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from volrigid.mutant import (
    ALL_ONES,
    CYCLE,
    COMPARISON_GROWTH_RATE,
    CyclicWord,
    bracelet_count,
    canonical_form,
    census_report,
    cusp_graph,
    decompose,
    enumerate_classes,
    graphs_isomorphic,
    horoball_areas,
    knot_cusp_moduli,
)
from volrigid.nzvolume import V_OCT


def W(bits: str) -> CyclicWord:
    return CyclicWord.from_string(bits)


def test_word_validation():
    with pytest.raises(ValueError):
        CyclicWord.from_string("01")  # too short
    with pytest.raises(ValueError):
        CyclicWord.from_string("0121")
    assert W("0101").n == 4


def test_decompose_examples():
    d = decompose(W("001"))
    assert d.kind == CYCLE
    assert d.i_sequence == (0, 1)
    assert decompose(W("111")).kind == ALL_ONES
    assert decompose(W("111")).i_sequence == ()
    assert decompose(W("00101")).i_sequence == (0, 1, 1)
    assert decompose(W("0000")).i_sequence == (0, 0, 0, 0)


def test_decompose_runs_sum_to_length():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randrange(3, 20)
        bits = "".join(rng.choice("01") for _ in range(n))
        word = W(bits)
        d = decompose(word)
        if d.kind == ALL_ONES:
            assert "0" not in bits
        else:
            k = len(d.i_sequence)
            assert k == bits.count("0")
            assert k + sum(d.i_sequence) == n


def test_knot_cusp_moduli():
    assert knot_cusp_moduli(W("001")) == (4, 8)
    assert knot_cusp_moduli(W("111")) == (6, 6)
    assert knot_cusp_moduli(W("00101")) == (4, 8, 8)
    assert knot_cusp_moduli(W("0000")) == (4, 4, 4, 4)


def test_cusp_graph_shapes():
    g = cusp_graph(W("001"))
    assert g.apex_label == 3
    assert g.cycle_labels == (4, 8)
    assert not g.special_triangle
    special = cusp_graph(W("1111"))
    assert special.special_triangle
    assert special.apex_label == 4
    assert special.cycle_labels == (8, 8)


def test_canonical_form_is_class_invariant():
    rng = random.Random(29)
    for _ in range(300):
        n = rng.randrange(3, 16)
        bits = [rng.choice("01") for _ in range(n)]
        word = W("".join(bits))
        rot = rng.randrange(n)
        rotated = W("".join(bits[rot:] + bits[:rot]))
        reflected = W("".join(reversed(bits)))
        canon = canonical_form(word)
        assert canonical_form(rotated) == canon
        assert canonical_form(reflected) == canon
        assert canonical_form(canon) == canon


def test_enumerate_classes_small():
    assert [str(w) for w in enumerate_classes(4)] == [
        "0000",
        "0001",
        "0011",
        "0101",
        "0111",
        "1111",
    ]


def test_bracelet_count_oracle():
    # direct orbit count over the dihedral group
    def brute(n: int) -> int:
        seen = set()
        for code in range(2**n):
            bits = tuple((code >> i) & 1 for i in range(n))
            orbit = set()
            for r in range(n):
                rot = bits[r:] + bits[:r]
                orbit.add(rot)
                orbit.add(tuple(reversed(rot)))
            seen.add(min(orbit))
        return len(seen)

    for n in range(3, 13):
        assert bracelet_count(n) == brute(n), n


def test_bracelet_count_pinned():
    assert [bracelet_count(n) for n in (3, 4, 5, 6, 10)] == [4, 6, 8, 13, 78]


def test_class_count_matches_bracelet_count():
    for n in range(3, 15):
        assert len(enumerate_classes(n)) == bracelet_count(n), n


def test_cusp_graph_biconditional_exhaustive():
    # equivalent words have isomorphic labelled graphs, and distinct
    # classes are separated by their graphs, for every length up to 9
    for n in range(3, 10):
        classes = enumerate_classes(n)
        graphs = [cusp_graph(w) for w in classes]
        for i, gi in enumerate(graphs):
            for j, gj in enumerate(graphs):
                assert graphs_isomorphic(gi, gj) == (i == j), (n, i, j)


def test_cusp_graph_respects_dihedral_moves():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randrange(3, 18)
        bits = [rng.choice("01") for _ in range(n)]
        word = W("".join(bits))
        rot = rng.randrange(n)
        other = W("".join(bits[rot:] + bits[:rot]))
        if rng.random() < 0.5:
            other = W(str(other)[::-1])
        assert graphs_isomorphic(cusp_graph(word), cusp_graph(other))


def test_horoball_areas_001():
    areas = horoball_areas(W("001"))
    assert areas == (
        (1, 2), (1, 2), (1, 2), (1, 2), (2, 2), (2, 2), (3, 12), (4, 16), (8, 32),
    )


def test_horoball_areas_modulus_rule():
    for bits in ("0101", "0011", "11111"):
        word = W(bits)
        for modulus, area in horoball_areas(word):
            assert area == (4 * modulus if modulus > 2 else 2), (bits, modulus)


def test_horoball_areas_first_stage_modulus_config():
    ones = sum(1 for ch in "00101" if ch == "1")
    default = horoball_areas(W("00101"))
    doubled = horoball_areas(W("00101"), first_stage_modulus=2)
    assert len(default) == len(doubled)
    assert sum(1 for m, _ in default if m == 1) >= 5  # n first-stage + letter 1s
    assert ones == 2


def test_census_report_n3():
    report = census_report(3)
    assert report.n == 3
    assert report.class_count == 4
    assert report.volume == pytest.approx(4 * 3 * V_OCT, rel=1e-15)
    assert report.lower_bound == Fraction(2**3, 2 * 3)
    assert report.comparison_constant == COMPARISON_GROWTH_RATE
    assert report.asymptotic_constant == pytest.approx(
        math.log(2) / (4 * V_OCT), rel=1e-12
    )


def test_census_growth_constant_value():
    report = census_report(8)
    assert abs(report.asymptotic_constant - 0.0472962) < 1e-6
    assert report.asymptotic_constant > report.comparison_constant


def test_census_lower_bound_below_class_count():
    for n in range(3, 15):
        report = census_report(n)
        assert report.lower_bound <= report.class_count
