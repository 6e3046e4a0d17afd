from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import assert_proper, random_subcubic, subcubic_graphs
from deltamin.colouring import BudgetExceeded, delta_class
from deltamin.constructions import complete, cycle, g5, p_prime, path, petersen
from deltamin.graph import build_graph
from deltamin.smin import EmptyGraph, NotThreeColourableRemainder, colex_subsets, gamma, s_exact, s_upper_from_vertices
from oracles import brute_min_delta, brute_s_by_deletion


@pytest.mark.parametrize(
    "g, s, gam",
    [
        (complete(4), 0, Fraction(1)),
        (petersen(), 2, Fraction(13, 15)),
        (g5(), 1, Fraction(6, 7)),
        (p_prime(), 2, Fraction(13, 15)),
        (cycle(6), 0, Fraction(1)),
        (cycle(5), 0, Fraction(1)),
        (path(3), 0, Fraction(1)),
    ],
)
def test_s_exact_examples(g, s, gam):
    res = s_exact(g)
    assert (res.s, res.gamma, res.c) == (s, gam, g.m - s)
    assert_proper(res.witness)
    assert len(delta_class(res.witness)) == s


def test_g5_single_deletion_oracle():
    g = g5()
    assert not brute_s_by_deletion(g, 0)
    assert brute_s_by_deletion(g, 1)


def test_gamma_is_exact():
    assert gamma(petersen()) == Fraction(13, 15)
    assert isinstance(gamma(petersen()), Fraction)


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraph):
        s_exact(build_graph(3, []))


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        s_exact(petersen(), budget=1)


def test_disconnected_is_additive():
    pairs = list(petersen().edges) + [(u + 10, v + 10) for u, v in g5().edges]
    assert s_exact(build_graph(15, pairs)).s == 3


def test_colex_order():
    assert list(colex_subsets(4, 2)) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert list(colex_subsets(3, 0)) == [()]


def test_upper_bound_from_vertices():
    assert s_upper_from_vertices(complete(4), [])[0] == 0
    bound, w = s_upper_from_vertices(g5(), [0])
    assert 1 <= bound <= 2
    assert_proper(w)
    bound, w = s_upper_from_vertices(petersen(), [0, 6])
    assert bound >= 2
    assert_proper(w)


def test_petersen_minus_one_vertex_not_three_colourable():
    with pytest.raises(NotThreeColourableRemainder):
        s_upper_from_vertices(petersen(), [0])


def test_matches_brute_force_min_delta():
    rng = random.Random(7)
    for _ in range(60):
        g = random_subcubic(rng, rng.randint(3, 10), rng.randint(3, 30))
        if g.m == 0 or g.m > 14:
            continue
        assert s_exact(g).s == brute_min_delta(g), g.edges


def test_corpus_matches_manifest(corpus):
    import json
    from importlib import resources

    manifest = json.loads(resources.files("deltamin").joinpath("data", "cubic_4_10.json").read_text())
    assert len(manifest) == len(corpus) == 27
    for g, rec in zip(corpus, manifest):
        res = s_exact(g)
        assert res.s == rec["s"] and res.gamma == Fraction(rec["gamma"])


@given(subcubic_graphs(max_n=10, min_edges=1))
def test_upper_bound_dominates(g):
    if g.m == 0:
        return
    s = s_exact(g).s
    deg3 = g.vertices_of_degree(3)
    try:
        bound, _ = s_upper_from_vertices(g, deg3[:2])
    except NotThreeColourableRemainder:
        return
    assert bound >= s
