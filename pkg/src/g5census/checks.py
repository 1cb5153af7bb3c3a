"""Self-checks behind `g5census verify`.

Each check returns (name, ok, detail).  They cover the small-genus oracle,
orbit-stabilizer bookkeeping, the composition law of every action, and
consistency of annotated census files.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .gf2algebra import moebius_action, pgl2, pgl2_stabilizer
from .grpact import (LinearRep, MatGF2, act, apply_tables, chunk_tables, gl_order, gl_reps,
                     monomials, quadric_orbits, terms_to_word, word_to_terms)
from .hypcensus import oracle_hyp_classes, q_representatives, run_hyp_census
from .multivar import MultiPoly, matrix_substitute
from .records import read_records
from .zeta import lpoly_from_counts, newton_polygon


def hyp_oracle(g: int = 2) -> tuple[str, bool, str]:
    """The structured census equals brute-force classification of all models."""
    oracle = oracle_hyp_classes(g)
    census = run_hyp_census(g)
    classes = set()
    bad = 0
    for c in census:
        key = (c.model.q, c.model.p)
        if key not in oracle:
            bad += 1
            continue
        cid, aut = oracle[key]
        bad += aut != c.aut
        classes.add(cid)
    n_oracle = len({cid for cid, _ in oracle.values()})
    ok = bad == 0 and len(classes) == len(census) == n_oracle
    return (f"genus-{g} oracle", ok, f"{len(census)} census curves, {n_oracle} oracle classes")


def random_matrix(n: int, rng) -> MatGF2:
    while True:
        M = MatGF2(n, tuple(int(x) for x in rng.integers(0, 1 << n, size=n)))
        if M.is_invertible():
            return M


def action_law(n: int, degree: int, samples: int = 1000, seed: int = 0) -> tuple[str, bool, str]:
    """act agrees with substitution f(Mx), and (MN).f = N.(M.f)."""
    rng = np.random.default_rng(seed)
    dim = len(monomials(n, degree))
    fails = 0
    for _ in range(samples):
        M, N = random_matrix(n, rng), random_matrix(n, rng)
        f = int(rng.integers(1, 1 << dim))
        rM, rN = LinearRep(M, degree), LinearRep(N, degree)
        sub = matrix_substitute(M, MultiPoly(frozenset(word_to_terms(f, n, degree)), n))
        fails += act(rM, f) != terms_to_word(sub.terms, n, degree)
        fails += act(LinearRep(M @ N, degree), f) != act(rN, act(rM, f))
    return (f"action law GL_{n} on degree {degree}", fails == 0, f"{samples} samples, {fails} failures")


def moebius_law(weight: int = 6, samples: int = 1000, seed: int = 0) -> tuple[str, bool, str]:
    rng = np.random.default_rng(seed)
    maps = pgl2(weight)
    fails = 0
    for _ in range(samples):
        A, B = maps[rng.integers(6)], maps[rng.integers(6)]
        f = int(rng.integers(1, 1 << (weight + 1)))
        fails += moebius_action(A.compose(B), f) != moebius_action(B, moebius_action(A, f))
    return (f"action law PGL_2 weight {weight}", fails == 0, f"{samples} samples, {fails} failures")


def pgl2_orbit_stabilizer(g: int = 5) -> tuple[str, bool, str]:
    n = g + 1
    total, bad = 0, 0
    for q in q_representatives(g):
        orbit = {moebius_action(A, q) for A in pgl2(n)}
        total += len(orbit)
        bad += len(orbit) * len(pgl2_stabilizer(q, n)) != 6
    ok = bad == 0 and total == (1 << (n + 1)) - 1
    return ("orbit-stabilizer PGL_2", ok, f"orbits cover {total} polynomials")


def quintic_orbit_stabilizer() -> tuple[str, bool, str]:
    from .trigcensus import quintic_orbit_reduce
    orb = quintic_orbit_reduce()
    reps = gl_reps(3, 5)
    imgs = apply_tables(chunk_tables(reps), orb.reps)        # (168, norbits)
    stab = (imgs == orb.reps[None, :]).sum(axis=0)
    ok = bool(np.all(stab * orb.sizes == gl_order(3))) and int(orb.sizes.sum()) == (1 << 21) - 1
    return ("orbit-stabilizer GL_3 on quintics", ok, f"{len(orb.reps)} orbits")


def quadric_orbit_stabilizer() -> tuple[str, bool, str]:
    tab = quadric_orbits()
    sizes = tab.sizes[1:]
    bad = 0
    for oid in range(1, len(tab.reps)):
        stab = tab.stabilizer(oid)
        rep = tab.reps[oid]
        bad += len(stab) * tab.sizes[oid] != gl_order(5)
        bad += any(act(LinearRep(M, 2), rep) != rep for M in stab[:50])
    union = sum(sizes[:4])
    ok = bad == 0 and len(sizes) == 7 and sum(sizes) == 32767 and union == 32116
    return ("orbit-stabilizer GL_5 on quadrics", ok,
            f"7 orbits, total {sum(sizes)}, irreducible {union}, rest {sum(sizes) - union}")


def audit_annotated(path: Path) -> list[tuple[str, bool, str]]:
    recs = read_records(path)
    unanalysed = sum(not r.analysed for r in recs)
    roundtrip = weil = symmetric = 0
    for r in recs:
        if not r.analysed:
            continue
        g = r.genus()
        weil += not r.counts.weil_ok(g)
        L = lpoly_from_counts(r.counts, g)
        roundtrip += L != r.lpoly or r.lpoly.counts().N[:len(r.counts.N)] != r.counts.N
        P = newton_polygon(r.lpoly)
        symmetric += P != r.polygon or not P.is_symmetric()
    name = Path(path).name
    return [(f"{name}: zeta round-trip", roundtrip == 0 and unanalysed == 0,
             f"{len(recs)} records, {roundtrip} mismatches, {unanalysed} unanalysed"),
            (f"{name}: slope symmetry", symmetric == 0, f"{symmetric} failures"),
            (f"{name}: Weil bound", weil == 0, f"{weil} violations")]


def run_all(annotated=(), quick: bool = False) -> list[tuple[str, bool, str]]:
    samples = 200 if quick else 1000
    out = [hyp_oracle(2),
           pgl2_orbit_stabilizer(5),
           quintic_orbit_stabilizer(),
           quadric_orbit_stabilizer(),
           moebius_law(6, samples),
           moebius_law(12, samples),
           action_law(3, 5, samples),
           action_law(3, 4, samples),
           action_law(5, 2, samples)]
    for path in annotated:
        out += audit_annotated(Path(path))
    return out
