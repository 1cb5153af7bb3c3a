import numpy as np
import pytest

import expected as E
from g5census.grpact import act, gl_reps
from g5census.trigcensus import (analyse_quintic, canonical_form, candidate_quintics,
                                 classify_at_origin, classify_singularity, cusp_by_search,
                                 local_parts, quintic_orbit_reduce, quintic_word,
                                 rational_singular_mask, singular_points, trig_automorphisms)


def test_fermat_quintic_is_smooth():
    rep = singular_points(quintic_word("X5 + Y5 + Z5"))
    assert rep.points == [] and not rep.accepted


def test_line_times_quartic_rejected():
    # a line times a quartic is singular where the two components meet
    F = quintic_word("X4Z + Y4Z + Z5 + X2Y2Z + XYZ3 + X3YZ")
    rep = singular_points(F)
    assert not rep.accepted


def test_tangent_cone_types():
    # local equations at (0:0:1) in the chart Z = 1, padded to degree 5
    assert classify_at_origin(quintic_word("Y2Z3 + XYZ3 + X3Z2 + X5 + Y5")) == "SplitNode"
    assert classify_at_origin(quintic_word("X2Z3 + XYZ3 + Y2Z3 + X5 + Y5")) == "NonSplitNode"
    assert classify_at_origin(quintic_word("Y2Z3 + X3Z2 + X2YZ2 + X5 + Y5")) == "Cusp"
    assert classify_at_origin(quintic_word("Y2Z3 + X2YZ2 + XY2Z2 + X5 + Y5")) == "Worse"


def test_named_curves():
    F1 = quintic_word(E.TRIG_ISOGENOUS)
    rep = singular_points(F1)
    assert rep.accepted
    F = canonical_form(quintic_word(E.TRIG_AUT6))
    assert len(trig_automorphisms(F)) == 6


def test_orbits_partition_everything():
    orb = quintic_orbit_reduce()
    assert len(orb.reps) == 13055
    assert int(orb.sizes.sum()) == (1 << 21) - 1
    assert all(168 % int(s) == 0 for s in orb.sizes)


def test_canonical_form_invariant():
    rng = np.random.default_rng(1)
    reps = gl_reps(3, 5)
    for _ in range(50):
        F = int(rng.integers(1, 1 << 21))
        G = act(reps[int(rng.integers(168))], F)
        assert canonical_form(F) == canonical_form(G)


def test_rational_singular_mask_matches_classification():
    words, _ = candidate_quintics()
    m = rational_singular_mask(words[:200])
    assert np.all((m != 0) & ((m & (m - 1)) == 0))


def test_cusp_criteria_agree():
    """The tangent-direction criterion equals the literal transform search on
    every candidate whose singular point has a square tangent cone."""
    words, _ = candidate_quintics()
    seen = 0
    for F in words.tolist():
        p = next(q for q in range(1, 8) if _mask_bit(F, q))
        G = act(_mover_rep(p), F)
        (a, b, c), _ = local_parts(G)
        if b or not (a or c):
            continue
        seen += 1
        assert cusp_by_search(F, p) == (classify_singularity(F, p) == "Cusp")
    assert seen == 1830


def _mask_bit(F, q):
    from g5census.trigcensus import POINTS_P2
    m = int(rational_singular_mask(np.array([F], dtype=np.uint32))[0])
    return bool(m >> POINTS_P2.index(q) & 1)


def _mover_rep(p):
    from g5census.trigcensus import _mover, _rep
    return _rep(_mover(p))


def test_faithful_mode_matches():
    words, sizes = candidate_quintics()
    for F, s in zip(words[:300].tolist(), sizes[:300].tolist()):
        a = analyse_quintic(F, s)
        b = analyse_quintic(F, s, faithful_cusp=True)
        assert (a is None) == (b is None)
        if a is not None:
            assert (a.F, a.sing, a.aut) == (b.F, b.sing, b.aut)
