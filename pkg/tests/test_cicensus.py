import numpy as np
from hypothesis import given, settings, strategies as st

import expected as E
from g5census.cicensus import (QuadricTriple, candidate_triples, ci_automorphisms, dedup_sigma,
                               equivalent_keys, is_smooth_ci, net_keys, rational_singular_points,
                               top_class, build_sigma)
from g5census.grpact import LinearRep, act, quadric_word
from g5census import checks


def triple(polys):
    return QuadricTriple(*(quadric_word(p) for p in polys))


words = st.integers(1, (1 << 15) - 1)


@given(words, words, words)
def test_net_key_is_basis_independent(a, b, c):
    t = QuadricTriple(a, b, c)
    if not t.is_independent():
        return
    u = QuadricTriple(a ^ b, b, c ^ a)
    assert t.net_key() == u.net_key()


def test_dependent_triple():
    assert not QuadricTriple(3, 5, 6).is_independent()


def test_named_triples():
    t = triple(E.CI_MAXPOINTS)
    assert t.is_independent() and is_smooth_ci(t) and top_class(t) == 4
    assert int(rational_singular_points(np.array([[t.P, t.Q, t.R]], dtype=np.uint32))[0]) == 0
    t = triple(E.CI_AUT24)
    auts = ci_automorphisms(t)
    assert len(auts) == 24
    span = set(t.span())
    assert all({act(LinearRep(M, 2), w) for w in span} == span for M in auts)


def test_rational_prefilter_is_necessary():
    # a triple sharing the singular point (1:0:0:0:0) of the cone Y^2 + ZT
    t = triple(("Y2 + ZT", "YZ + TU", "Z2 + U2 + YU"))
    assert rational_singular_points(np.array([[t.P, t.Q, t.R]], dtype=np.uint32))[0] != 0
    assert not is_smooth_ci(t)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_equivalent_keys_invariant(seed):
    """A random GL_5 image of a census net has the same set of equivalent keys."""
    rng = np.random.default_rng(seed)
    t = triple(E.CI_ISOGENOUS)
    rep = LinearRep(checks.random_matrix(5, rng), 2)
    u = QuadricTriple(*(act(rep, w) for w in (t.P, t.Q, t.R)))
    assert equivalent_keys(u) == equivalent_keys(t)


def test_top_class_1_pipeline():
    cand = candidate_triples(1)
    assert len(cand) == 928
    sigma = build_sigma(classes=(1,))[1]
    assert len(sigma) == 826
    curves = dedup_sigma(1, sigma)
    assert len(curves) == 40
    keys = net_keys(np.array([[t.P, t.Q, t.R] for t, _ in curves], dtype=np.uint32))
    assert len(set(keys.tolist())) == 40
    for t, aut in curves[:5]:
        assert len(ci_automorphisms(t)) == aut
