"""Variety-level predicates, the flag model, and the group action."""

import itertools
import random

import pytest

from schubert_fusion.linalg import rational
from schubert_fusion.schubert import (
    FlagChain,
    GroupElement,
    bundle_split,
    canonical_flag,
    coordinate_ring_dims,
    curve_degrees,
    exp_lowering,
    exp_raising,
    flag_conditions,
    flag_membership,
    group_act,
    identity_element,
    isomorphic,
    line_bundle_exists,
    morphism_exists,
    picard_rank,
    random_group_element,
    sections_dim,
)
from schubert_fusion.linalg import SpanBasis
from schubert_fusion.types import Composition, canonical_A, compositions, leq


def comp(*parts):
    return Composition(tuple(parts))


def test_isomorphic_examples():
    assert isomorphic((2, 2, 3), (5, 5, 9))
    assert not isomorphic((2, 3), (2, 2))
    assert isomorphic((2, 2, 2, 2), (7, 7, 7, 7))


def test_isomorphic_requires_entries_at_least_two():
    with pytest.raises(ValueError):
        isomorphic((1, 2), (1, 2))


def test_morphism_examples():
    assert morphism_exists(comp(1, 1, 1), comp(2, 1))
    assert not morphism_exists(comp(2, 1), comp(1, 2))
    assert morphism_exists(comp(2, 1), comp(3))


def test_morphism_order_properties():
    for n in range(1, 6):
        comps = list(compositions(n))
        for a in comps:
            assert morphism_exists(a, a)
        for a, b in itertools.product(comps, repeat=2):
            if morphism_exists(a, b) and morphism_exists(b, a):
                assert a == b


def test_bundle_split_examples():
    split = bundle_split(comp(2, 1), 1)
    assert split.fiber == comp(2) and split.base == comp(1)
    assert split.identity_holds
    assert bundle_split(comp(1, 1), 1).identity_holds


def test_bundle_split_range():
    with pytest.raises(ValueError):
        bundle_split(comp(2, 1), 2)


def test_line_bundle_exists_examples():
    assert line_bundle_exists((1, 1, 2), comp(2, 1))
    assert not line_bundle_exists((1, 2, 2), comp(2, 1))
    for c in compositions(3):
        assert line_bundle_exists((3, 3, 3), c)


def test_line_bundle_rejects_bad_input():
    with pytest.raises(ValueError):
        line_bundle_exists((2, 1), comp(1, 1))  # not weakly increasing
    with pytest.raises(ValueError):
        line_bundle_exists((1, 1), comp(2, 1))  # length mismatch


def test_curve_degrees_examples():
    assert curve_degrees((1, 2)) == (3, 1)
    assert curve_degrees((0, 0, 0)) == (0, 0, 0)
    assert curve_degrees((1, 1, 1)) == (3, 2, 1)


def test_curve_degrees_of_canonical_bundles():
    for n in range(1, 6):
        for c in compositions(n):
            degs = curve_degrees(tuple(a - 1 for a in canonical_A(c)))
            assert all(d > 0 for d in degs)
            assert all(x >= y for x, y in zip(degs, degs[1:]))


def test_sections_dim_examples():
    assert sections_dim((1, 1, 2), comp(2, 1)) == 12
    assert sections_dim((0, 0), comp(2)) == 1
    assert sections_dim((1, 1, 1), comp(1, 1, 1)) == 8


def test_sections_dim_requires_existence():
    with pytest.raises(ValueError):
        sections_dim((1, 2, 2), comp(2, 1))
    with pytest.raises(ValueError):
        sections_dim((-1, 0), comp(2))


def test_sections_independent_of_variety():
    bundle = (1, 1, 2)
    holders = [c for c in compositions(3) if line_bundle_exists(bundle, c)]
    dims = {sections_dim(bundle, c) for c in holders}
    assert dims == {12}


def test_picard_examples():
    assert picard_rank(comp(4)) == 1
    assert picard_rank(comp(1, 1, 1)) == 3
    assert picard_rank(comp(2, 1)) == 2


def test_picard_monotone_under_refinement():
    for n in range(1, 6):
        for lo, hi in itertools.product(compositions(n), repeat=2):
            if leq(lo, hi):
                assert picard_rank(lo) <= picard_rank(hi)


def test_coordinate_ring_dims():
    assert coordinate_ring_dims((2, 2), 2) == (1, 4, 9)
    assert coordinate_ring_dims((2, 3), 1) == (1, 6)
    assert coordinate_ring_dims((5, 7), 0) == (1,)


def test_canonical_flag_shapes():
    chain = canonical_flag(comp(3))
    assert chain.dimensions() == (3,)
    assert chain.subspaces[0].pivots() == [0, 1, 2]

    chain = canonical_flag(comp(1, 1))
    assert chain.dimensions() == (3, 2)
    assert chain.subspaces[0].pivots() == [0, 1, 3]

    chain = canonical_flag(comp(2, 1))
    assert chain.dimensions() == (5, 3)
    assert chain.subspaces[0].pivots() == [0, 1, 2, 4, 5]
    assert chain.subspaces[1].pivots() == [0, 1, 2]


def test_canonical_flags_are_members():
    for n in range(1, 6):
        for c in compositions(n):
            assert flag_membership(canonical_flag(c), c)


def test_flag_conditions_names():
    conds = flag_conditions(canonical_flag(comp(2, 1)), comp(2, 1))
    assert conds == {"profile": True, "nested": True,
                     "t_stable": True, "t_power_steps": True}


def test_wrong_codimension_chain_fails():
    n = 3
    full = SpanBasis()
    for i in range(2 * n):
        full.insert({i: rational(1)})
    chain = FlagChain(n, (full,))
    conds = flag_conditions(chain, comp(n))
    assert not conds["profile"]
    assert not flag_membership(chain, comp(n))


def test_u_span_chain_is_member():
    n = 3
    u_span = SpanBasis()
    for i in range(n, 2 * n):
        u_span.insert({i: rational(1)})
    assert flag_membership(FlagChain(n, (u_span,)), comp(n))


def test_identity_action_fixes_chain():
    chain = canonical_flag(comp(2, 1))
    moved = group_act(identity_element(3), chain)
    assert [s.pivots() for s in moved.subspaces] == \
        [s.pivots() for s in chain.subspaces]


def test_exp_raising_moves_within_variety():
    n = 3
    g = exp_raising(n, 0, rational(1, 2))
    chain = group_act(g, canonical_flag(comp(n)))
    assert flag_membership(chain, comp(n))
    # W_1 becomes span(v_i + z u_i): no longer coordinate-pivoted on v only
    assert chain.subspaces[0].pivots() == [0, 1, 2]


def test_group_element_validation():
    n = 2
    with pytest.raises(ValueError):
        GroupElement(n, (rational(2), 0), (0, 0), (0, 0), (rational(1), 0))


def test_group_products_are_unimodular():
    rng = random.Random(3)
    for _ in range(20):
        g = random_group_element(3, rng)
        h = random_group_element(3, rng)
        _ = g @ h  # determinant is validated on construction


def test_random_group_action_preserves_membership():
    rng = random.Random(0)
    for n in range(1, 5):
        comps = list(compositions(n))
        for _ in range(12):
            c = comps[rng.randrange(len(comps))]
            g = random_group_element(n, rng)
            assert flag_membership(group_act(g, canonical_flag(c)), c)


def test_raising_lowering_do_not_commute():
    n = 2
    g = exp_raising(n, 0, rational(1))
    h = exp_lowering(n, 0, rational(1))
    assert (g @ h).vv != (h @ g).vv
