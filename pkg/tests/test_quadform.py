"""Representation enumeration and gap analysis against brute-force oracles."""

from __future__ import annotations

import math
import random

import pytest

from volrigid.quadform import (
    IntQuadForm,
    kronecker_admissible,
    primitive_representations,
    primitive_value_set,
    representations,
    two_sided_gap,
)

X2_12Y2 = IntQuadForm(1, 0, 12)
HEX = IntQuadForm(1, 1, 1)
SUM_SQ = IntQuadForm(1, 0, 1)


def brute_representations(form: IntQuadForm, m: int) -> set[tuple[int, int]]:
    bound = math.isqrt(4 * form.a * m // -form.discriminant()) + form.a * m + 2
    hits = set()
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if form.evaluate(x, y) == m:
                hits.add((x, y))
    return hits


def test_form_validation():
    with pytest.raises(ValueError):
        IntQuadForm(0, 0, 1)
    with pytest.raises(ValueError):
        IntQuadForm(1, 2, 1)  # discriminant 0
    with pytest.raises(ValueError):
        IntQuadForm(1, 3, 1)  # indefinite
    assert IntQuadForm(2, 1, 3).discriminant() == -23


def test_representations_match_brute_force_small():
    rng = random.Random(3)
    forms = [X2_12Y2, HEX, SUM_SQ, IntQuadForm(2, 0, 2), IntQuadForm(4, 4, 4)]
    for _ in range(60):
        form = rng.choice(forms)
        m = rng.randrange(1, 120)
        got = {r.pair for r in representations(form, m)}
        assert got == brute_representations(form, m), (str(form), m)


def test_representations_ordering_and_flags():
    reps = representations(X2_12Y2, 13)
    assert [r.pair for r in reps] == [(-1, -1), (1, -1), (-1, 1), (1, 1)]
    assert all(r.primitive for r in reps)
    reps4 = representations(X2_12Y2, 4)
    assert [r.pair for r in reps4] == [(-2, 0), (2, 0)]
    assert not any(r.primitive for r in reps4)


def test_primitive_representations_filter():
    assert primitive_representations(X2_12Y2, 4) == []
    prim = primitive_representations(SUM_SQ, 25)
    assert {r.pair for r in prim} == {(3, 4), (-3, 4), (3, -4), (-3, -4),
                                      (4, 3), (-4, 3), (4, -3), (-4, -3)}


def test_primitive_value_set_pinned():
    vs = primitive_value_set(X2_12Y2, 15)
    assert vs.values == (1, 12, 13)
    hexvals = primitive_value_set(HEX, 30)
    assert hexvals.values == (1, 3, 7, 13, 19, 21)


def test_primitive_value_set_matches_brute_force():
    for form in (X2_12Y2, HEX, SUM_SQ, IntQuadForm(3, 2, 5)):
        limit = 200
        brute = set()
        for x in range(-limit, limit + 1):
            for y in range(-limit, limit + 1):
                if math.gcd(x, y) == 1:
                    v = form.evaluate(x, y)
                    if 1 <= v <= limit:
                        brute.add(v)
        assert set(primitive_value_set(form, limit).values) == brute, str(form)


def test_two_sided_gap_pinned():
    assert two_sided_gap(HEX, 13, 100) == 6
    assert two_sided_gap(X2_12Y2, 1, 100) == 11
    # nearest primitive neighbor of 241 is 237 = Q(15, 1)
    assert two_sided_gap(X2_12Y2, 241, 10**4) == 4


def test_two_sided_gap_capped_by_limit():
    # 13 is the largest primitive value of x^2+12y^2 up to 20, so the
    # upward side is capped at limit - q0.
    assert two_sided_gap(X2_12Y2, 13, 20) == 1
    assert two_sided_gap(X2_12Y2, 13, 14) == 1


def test_two_sided_gap_rejects_bad_center():
    with pytest.raises(ValueError):
        two_sided_gap(X2_12Y2, 5, 100)  # 5 not primitively represented
    with pytest.raises(ValueError):
        two_sided_gap(X2_12Y2, 50, 50)  # limit must exceed q0


def test_gap_neighborhood_is_really_empty():
    rng = random.Random(17)
    for _ in range(40):
        form = rng.choice([X2_12Y2, HEX, SUM_SQ])
        limit = 400
        values = primitive_value_set(form, limit).values
        q0 = rng.choice(values[: len(values) // 2 + 1])
        gap = two_sided_gap(form, q0, limit)
        window = set(values) & set(range(q0 - gap + 1, q0 + gap))
        assert window == {q0}, (str(form), q0, gap)
        # maximality: some neighbor at distance exactly `gap` is hit,
        # unless the cap limit - q0 stopped the growth first
        if gap < limit - q0:
            assert (q0 - gap in values) or (q0 + gap in values)


def test_kronecker_admissible_agrees_with_value_sets():
    for form in (X2_12Y2, SUM_SQ, HEX):
        values = set(primitive_value_set(form, 150).values)
        for m in range(1, 151):
            if m in values:
                assert kronecker_admissible(form, m), (str(form), m)


def test_kronecker_admissible_rejects_inert_prime_factors():
    # 5 and 11 are inert for discriminant -48, so no multiple of either
    # is primitively represented by x^2+12y^2.
    for m in (5, 10, 11, 22, 55, 240, 242):
        assert not kronecker_admissible(X2_12Y2, m), m


def test_kronecker_admissible_large_modulus_path():
    # forms with 4ac > 10^6 exercise the prime-power route instead of
    # the residue scan; compare both against actual representability
    big = IntQuadForm(1, 0, 3 * 10**5)
    for m in (1, 2, 3, 4, 7, 13, 300001, 300004):
        reps = representations(big, m)
        if any(r.primitive for r in reps):
            assert kronecker_admissible(big, m), m


def test_value_set_scales_quadratically():
    # spot check the enumeration bound: values of the scaled form are
    # exactly 3 * values of the base form
    base = primitive_value_set(HEX, 60).values
    scaled = primitive_value_set(IntQuadForm(3, 3, 3), 180).values
    assert tuple(3 * v for v in base) == scaled
