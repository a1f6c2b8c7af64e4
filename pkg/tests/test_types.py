"""Type combinatorics: run-length types, the refinement order, Poincare data."""

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_fusion.types import (
    Composition,
    PoincarePolynomial,
    canonical_A,
    compositions,
    leq,
    poincare,
    poincare_recursive_single,
    type_of,
)


def comp(*parts):
    return Composition(tuple(parts))


small_compositions = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.sampled_from(list(compositions(n))))


def test_type_of_examples():
    assert type_of((2, 2, 3)) == comp(2, 1)
    assert type_of((2, 3, 4)) == comp(1, 1, 1)
    assert type_of((5, 5, 5, 5)) == comp(4)


def test_type_of_rejects_decreasing():
    with pytest.raises(ValueError):
        type_of((3, 2))


def test_composition_validation():
    with pytest.raises(ValueError):
        comp(2, 0)
    with pytest.raises(ValueError):
        Composition(())


def test_compositions_count():
    # compositions of n are in bijection with subsets of the n-1 gaps
    for n in range(1, 8):
        assert len(list(compositions(n))) == 2 ** (n - 1)


def test_leq_examples():
    assert leq(comp(3), comp(1, 1, 1))
    assert not leq(comp(2, 1), comp(1, 2))
    assert not leq(comp(1, 2), comp(2, 1))
    assert leq(comp(2, 1), comp(2, 1))


def test_leq_needs_matching_n():
    with pytest.raises(ValueError):
        leq(comp(2), comp(1, 1, 1))


def test_canonical_A_examples():
    assert canonical_A(comp(2, 1)) == (2, 2, 3)
    assert canonical_A(comp(3)) == (2, 2, 2)
    assert canonical_A(comp(1, 1, 1)) == (2, 3, 4)


def test_poincare_examples():
    assert poincare(comp(4)).even_coeffs == (1, 1, 1, 1, 1)
    assert poincare(comp(1, 1)).even_coeffs == (1, 2, 1)
    assert poincare(comp(2, 1)).even_coeffs == (1, 2, 2, 1)


def test_poincare_structure():
    for n in range(1, 7):
        for c in compositions(n):
            poly = poincare(c)
            assert poly.even_coeffs[0] == 1
            assert poly.degree == 2 * c.n
            assert poly.evaluate(1) == math.prod(i + 1 for i in c.parts)


def test_recursion_examples():
    assert poincare_recursive_single(0).even_coeffs == (1,)
    assert poincare_recursive_single(2).even_coeffs == (1, 1, 1)
    assert poincare_recursive_single(5) == poincare(comp(5))


def test_recursion_matches_closed_form():
    for n in range(13):
        expected = (1,) * (n + 1)
        assert poincare_recursive_single(n).even_coeffs == expected


def test_polynomial_arithmetic():
    p = PoincarePolynomial((1, 1))
    assert (p * p).even_coeffs == (1, 2, 1)
    assert p.coefficient(2) == 1
    assert p.coefficient(3) == 0
    assert p.coefficient(10) == 0


def test_extremes():
    for n in range(1, 7):
        top, bottom = comp(*([1] * n)), comp(n)
        for c in compositions(n):
            assert leq(bottom, c)
            assert leq(c, top)


@settings(max_examples=60, deadline=None)
@given(small_compositions, small_compositions)
def test_antisymmetry(a, b):
    if a.n == b.n and leq(a, b) and leq(b, a):
        assert a == b


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_transitivity(n, data):
    comps = list(compositions(n))
    a = data.draw(st.sampled_from(comps))
    b = data.draw(st.sampled_from(comps))
    c = data.draw(st.sampled_from(comps))
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@settings(max_examples=60, deadline=None)
@given(small_compositions)
def test_canonical_A_roundtrip(c):
    vec = canonical_A(c)
    assert type_of(vec) == c
    assert all(x <= y for x, y in zip(vec, vec[1:]))


def test_order_matches_equality_pattern():
    # lo <= hi iff adjacent equalities of hi's canonical vector persist in lo's
    for n in range(1, 6):
        for lo, hi in itertools.product(compositions(n), repeat=2):
            av, bv = canonical_A(hi), canonical_A(lo)
            pattern = all(bv[i] == bv[i + 1]
                          for i in range(len(av) - 1) if av[i] == av[i + 1])
            assert leq(lo, hi) == pattern
