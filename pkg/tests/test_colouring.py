from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import assert_proper, random_delta_improper, subcubic_graphs
from deltamin.colouring import (
    ALPHA,
    BETA,
    DELTA,
    GAMMA,
    Classification,
    Colour,
    EdgeColouring,
    InvalidColouring,
    StaleComponent,
    VertexNotInSubgraph,
    classify,
    colour_class,
    delta_class,
    kempe_component_at,
    kempe_components,
    kempe_swap,
    repair_delta_improper,
)
from deltamin.constructions import cycle, petersen, star
from deltamin.smin import s_exact


def colour_edges(g, cols):
    return EdgeColouring(g, tuple(cols))


def test_classify_examples():
    c3 = cycle(3)
    assert classify(colour_edges(c3, [ALPHA, BETA, GAMMA])) == Classification.PROPER
    assert classify(EdgeColouring.uniform(star(), DELTA)) == Classification.DELTA_IMPROPER
    assert classify(colour_edges(c3, [ALPHA, ALPHA, BETA])) == Classification.INVALID


def test_colour_classes():
    assert colour_class(colour_edges(cycle(3), [ALPHA, BETA, GAMMA]), DELTA) == set()
    assert delta_class(EdgeColouring.uniform(star(), DELTA)) == set(star().edges)
    assert len(delta_class(s_exact(petersen()).witness)) == 2


def test_colour_names():
    assert [c.label for c in Colour] == ["alpha", "beta", "gamma", "delta"]
    assert Colour.parse("Gamma") is GAMMA


def test_colouring_must_be_total():
    with pytest.raises(ValueError):
        EdgeColouring(cycle(3), (ALPHA, BETA))


def test_kempe_even_cycle_and_swap():
    c4 = cycle(4)
    c = EdgeColouring.from_mapping(c4, {(0, 1): ALPHA, (1, 2): BETA, (2, 3): ALPHA, (0, 3): BETA})
    comp = kempe_component_at(c, ALPHA, BETA, 2)
    assert comp.kind == "EVEN_CYCLE" and len(comp.vertices) == 4
    swapped = kempe_swap(c, comp)
    assert [swapped.colour(*e) for e in [(0, 1), (1, 2), (2, 3), (0, 3)]] == [BETA, ALPHA, BETA, ALPHA]
    assert_proper(swapped)
    assert kempe_swap(swapped, kempe_component_at(swapped, ALPHA, BETA, 2)) == c


def test_kempe_path_in_star():
    c = EdgeColouring.from_mapping(star(), {(0, 1): ALPHA, (0, 2): BETA, (0, 3): GAMMA})
    comp = kempe_component_at(c, ALPHA, BETA, 0)
    assert comp.kind == "PATH" and len(comp.vertices) == 3
    with pytest.raises(VertexNotInSubgraph):
        kempe_component_at(c, ALPHA, BETA, 3)


def test_stale_component_rejected():
    c = EdgeColouring.from_mapping(star(), {(0, 1): ALPHA, (0, 2): BETA, (0, 3): GAMMA})
    comp = kempe_component_at(c, ALPHA, BETA, 0)
    changed = c.with_changes({(0, 1): DELTA})
    with pytest.raises(StaleComponent):
        kempe_swap(changed, comp)


def test_petersen_delta_end_path():
    w = s_exact(petersen()).witness
    u, v = sorted(delta_class(w))[0]
    found = False
    for x, y in ((ALPHA, BETA), (BETA, GAMMA), (ALPHA, GAMMA)):
        comp = kempe_component_at(w, x, y, u)
        if comp.kind == "PATH" and set(comp.ends) == {u, v}:
            found = True
    assert found
    for comp in kempe_components(w, ALPHA, BETA):
        assert len(delta_class(kempe_swap(w, comp))) == 2


def test_repair_examples():
    fixed = repair_delta_improper(EdgeColouring.uniform(star(), DELTA))
    assert_proper(fixed) and delta_class(fixed) == set()
    proper = s_exact(petersen()).witness
    assert repair_delta_improper(proper) == proper
    pr = repair_delta_improper(EdgeColouring.uniform(petersen(), DELTA))
    assert_proper(pr)
    assert 2 <= len(delta_class(pr)) <= 15


def test_repair_rejects_invalid():
    with pytest.raises(InvalidColouring):
        repair_delta_improper(colour_edges(cycle(3), [ALPHA, ALPHA, BETA]))


@given(subcubic_graphs(max_n=10), st.randoms(use_true_random=False))
def test_kempe_components_partition_two_classes(g, rnd):
    c = repair_delta_improper(random_delta_improper(rnd, g))
    for x, y in ((ALPHA, BETA), (BETA, GAMMA), (ALPHA, GAMMA), (ALPHA, DELTA)):
        comps = kempe_components(c, x, y)
        covered = [e for comp in comps for e in comp.edges]
        assert sorted(covered) == sorted(colour_class(c, x) | colour_class(c, y))
        seen: set[int] = set()
        for comp in comps:
            assert not seen & set(comp.vertices)
            seen |= set(comp.vertices)
            if comp.kind == "EVEN_CYCLE":
                assert len(comp.vertices) % 2 == 0 and len(comp.vertices) >= 4


@given(subcubic_graphs(max_n=10), st.randoms(use_true_random=False))
def test_repair_properties(g, rnd):
    c = random_delta_improper(rnd, g, delta_bias=0.5)
    out = repair_delta_improper(c)
    assert_proper(out)
    assert delta_class(out) <= delta_class(c)
    assert len(delta_class(out)) >= s_exact(g).s


def test_repair_is_deterministic():
    rng = random.Random(5)
    c = random_delta_improper(rng, petersen(), delta_bias=0.7)
    assert repair_delta_improper(c) == repair_delta_improper(c)
