import pytest

from conftest import xpoly
import expected as E
from g5census.gf2algebra import moebius_action, pgl2
from g5census.hypcensus import (HypModel, canonical_model, census_mass, hyp_automorphisms,
                                is_smooth_hyp, oracle_hyp_classes, q_representatives,
                                run_hyp_census)


def test_q_representatives():
    reps = q_representatives(5)
    assert len(reps) == 31
    assert xpoly("x^6+x+1") in reps and xpoly("x^6+x^3+1") in reps
    # genus 2: brute-force orbit reduction over the 15 nonzero words
    orbits = {frozenset(moebius_action(A, f) for A in pgl2(3)) for f in range(1, 16)}
    assert len(q_representatives(2)) == len(orbits)


def test_smoothness_examples():
    assert is_smooth_hyp(HypModel(5, 1, 1 << 11))
    assert not is_smooth_hyp(HypModel(5, 0b10, 1 << 11))
    assert is_smooth_hyp(HypModel(5, *map(xpoly, E.HYP_ISOGENOUS)))


def test_model_bounds():
    with pytest.raises(ValueError):
        HypModel(5, 1 << 7, 1)
    assert not HypModel(5, 1, 1 << 9).degree_bound_ok()


@pytest.mark.parametrize("g,count,mass", [(2, 20, 8), (3, 76, 32)])
def test_small_genus_census(g, count, mass):
    curves = run_hyp_census(g)
    assert len(curves) == count and census_mass(curves) == mass


def test_genus2_oracle():
    oracle = oracle_hyp_classes(2)
    curves = run_hyp_census(2)
    ids = [oracle[(c.model.q, c.model.p)][0] for c in curves]
    assert sorted(ids) == list(range(len(set(v[0] for v in oracle.values()))))
    assert all(oracle[(c.model.q, c.model.p)][1] == c.aut for c in curves)


def test_genus5_census_and_automorphisms():
    curves = run_hyp_census(5)
    assert len(curves) == 1070 and census_mass(curves) == 512
    assert all(c.aut % 2 == 0 for c in curves)
    by_model = {(c.model.q, c.model.p): c for c in curves}
    for q, p in E.HYP_AUT12:
        m = canonical_model(HypModel(5, xpoly(q), xpoly(p)))
        assert by_model[(m.q, m.p)].aut == 12
    # sampled audit: canonical model of every 25th curve is itself
    for c in curves[::25]:
        assert canonical_model(c.model) == c.model
        assert len(hyp_automorphisms(c.model)) == c.aut
