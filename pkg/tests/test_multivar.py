from itertools import combinations

from hypothesis import given, settings, strategies as st

import expected as E
from g5census.grpact import MatGF2
from g5census.multivar import (MultiPoly, ci_is_smooth_curve, cone_dimension, groebner,
                               jacobian_minors, matrix_substitute, projective_is_empty)


def P(text, n=5):
    return MultiPoly.parse(text, n)


def test_substitution_examples():
    ident = MatGF2.identity(5)
    f = P("X2 + YZ + U")
    assert matrix_substitute(ident, f) == f
    swap = MatGF2.from_lists([[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 1, 0, 0],
                              [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    assert matrix_substitute(swap, P("XY")) == P("XY")
    shear = MatGF2.from_lists([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [1, 0, 1, 0, 0],
                               [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    assert matrix_substitute(shear, P("Y2 + XZ + YZ")) == P("Y2 + X2 + XZ + XY + YZ")


def test_jacobian_minors():
    assert all(not m for m in jacobian_minors(P("X2"), P("Y2"), P("Z2")))
    assert all(not m for m in jacobian_minors(P("XY"), P("ZT"), P("U2")))
    assert any(jacobian_minors(P("XY"), P("ZT"), P("XU + TU")))


def test_groebner_examples():
    G = groebner([P("X + Y"), P("Y")])
    assert sorted(map(str, G.gens)) == ["X", "Y"]
    assert [str(g) for g in groebner([P("X")]).gens] == ["X"]
    G = groebner([P("XY"), P("X2")])
    assert sorted(map(str, G.gens)) == ["X2", "XY"]


def test_emptiness_and_dimension():
    assert projective_is_empty(groebner([P(v) for v in "XYZTU"]))
    assert not projective_is_empty(groebner([P("X")]))
    assert cone_dimension(groebner([MultiPoly.zero(5)])) == 5
    assert cone_dimension(groebner([P(v) for v in "XYZTU"])) == 0


def test_named_triples_are_smooth_curves():
    for triple in (E.CI_MAXPOINTS, E.CI_ISOGENOUS, E.CI_AUT24):
        qs = [P(q) for q in triple]
        assert ci_is_smooth_curve(*qs)
        assert cone_dimension(groebner(qs)) == 2


def test_reducible_net_is_rejected():
    # X*Y is reducible, so the intersection has several components meeting
    assert not ci_is_smooth_curve(P("XY"), P("ZT + U2"), P("X2 + Z2 + TU"))


monomial = st.tuples(*[st.integers(0, 3)] * 3)
small_polys = st.frozensets(monomial, min_size=1, max_size=4).map(lambda t: MultiPoly(t, 3))


@settings(max_examples=60, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3))
def test_groebner_basis_properties(gens):
    G = groebner(gens)
    # every generator reduces to zero
    assert all(not G.normal_form(f) for f in gens)
    # Buchberger criterion: all S-polynomials reduce to zero
    for f, g in combinations(G.gens, 2):
        lf, lg = _lead(G, f), _lead(G, g)
        lcm = tuple(max(a, b) for a, b in zip(lf, lg))
        s = f * _mono(tuple(a - b for a, b in zip(lcm, lf))) + g * _mono(tuple(a - b for a, b in zip(lcm, lg)))
        assert not G.normal_form(s)


def _lead(G, f):
    return G.order.decode(max(G.order.to_keys(f)))


def _mono(e):
    return MultiPoly(frozenset([e]), len(e))
