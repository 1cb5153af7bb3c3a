"""Hyperelliptic curves y^2 + q(x) y = p(x) over F_2 up to isomorphism.

Isomorphisms are (x, y) -> ((ax+b)/(cx+d), (r(x)+y)/(cx+d)^(g+1)) with
A = (a b; c d) in PGL_2(F_2) and deg r <= g+1.  For a fixed q the maps with
A in Stab(q) act on p by p -> A.p + r^2 + r q, and r -> r^2 + r q is F_2-linear
with kernel {0, q}, so each orbit is a union of cosets of one subspace.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gf2algebra import (MoebiusMap, deg, make_field, moebius_action, peval, pderiv,
                         pgcd, pgl2, pgl2_stabilizer, pmul, psquare, e_roots, e_from_f2)


@dataclass(frozen=True)
class HypModel:
    g: int
    q: int
    p: int

    def __post_init__(self):
        if deg(self.q) > self.g + 1 or deg(self.p) > 2 * self.g + 2:
            raise ValueError("coefficient degrees exceed the model bounds")

    def degree_bound_ok(self) -> bool:
        m = max(2 * deg(self.q), deg(self.p))
        return 2 * self.g + 1 <= m <= 2 * self.g + 2


@dataclass(frozen=True)
class HypAutomorphism:
    A: MoebiusMap
    r: int


def q_representatives(g: int) -> list[int]:
    """Least element of each PGL_2(F_2)-orbit on nonzero polynomials of degree <= g+1."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    n = g + 1
    maps = pgl2(n)
    seen = set()
    reps = []
    for f in range(1, 1 << (n + 1)):
        if f in seen:
            continue
        orbit = {moebius_action(A, f) for A in maps}
        seen |= orbit
        reps.append(min(orbit))
    return sorted(reps)


def is_smooth_hyp(m: HypModel) -> bool:
    """Smoothness of the genus-g model via the gcd and leading-coefficient tests."""
    g, q, p = m.g, m.q, m.p
    if q == 0:
        raise ValueError("q must be nonzero")
    if not m.degree_bound_ok():
        return False
    if pgcd(q, psquare(pderiv(p)) ^ pmul(psquare(pderiv(q)), p)) != 1:
        return False
    if deg(q) == g + 1:
        return True
    a_top = (p >> (2 * g + 1)) & 1
    a_lead = (p >> (2 * g + 2)) & 1
    b_g = (q >> g) & 1
    return a_top != (a_lead & b_g)


def _twist_space(q: int, g: int) -> list[int]:
    """{r^2 + r q : deg r <= g+1}, a 2^(g+1)-element subspace."""
    return sorted({psquare(r) ^ pmul(r, q) for r in range(1 << (g + 2))})


def smooth_ps(q: int, g: int) -> list[int]:
    return [p for p in range(1 << (2 * g + 3)) if is_smooth_hyp(HypModel(g, q, p))]


def reduce_ps_for_q(q: int, candidates: list[int], g: int = 5) -> list[tuple[int, int]]:
    """One representative per isomorphism class among ``candidates``, with the
    automorphism group order of each.  Returned as (p, |Aut|) in ascending p."""
    stab = [A.with_weight(2 * g + 2) for A in pgl2_stabilizer(q, g + 1)]
    twists = _twist_space(q, g)
    twist_set = set(twists)
    marked = set()
    out = []
    for p in sorted(candidates):
        if p in marked:
            continue
        aut = 0
        for A in stab:
            ap = moebius_action(A, p)
            if ap ^ p in twist_set:
                aut += 2          # r and r + q
            for t in twists:
                marked.add(ap ^ t)
        out.append((p, aut))
    return out


def hyp_automorphisms(m: HypModel) -> list[HypAutomorphism]:
    """All (A, r) with A in Stab(q) and A.p = p + r^2 + r q."""
    g = m.g
    out = []
    for A in pgl2_stabilizer(m.q, g + 1):
        ap = moebius_action(A.with_weight(2 * g + 2), m.p)
        for r in range(1 << (g + 2)):
            if ap == m.p ^ psquare(r) ^ pmul(r, m.q):
                out.append(HypAutomorphism(A, r))
    return out


def canonical_model(m: HypModel) -> HypModel:
    """The census representative of the class of m: least (q, p) over all
    isomorphic models."""
    g = m.g
    best = None
    for A in pgl2(g + 1):
        q2 = moebius_action(A, m.q)
        ap = moebius_action(A.with_weight(2 * g + 2), m.p)
        for r in range(1 << (g + 2)):
            cand = (q2, ap ^ psquare(r) ^ pmul(r, q2))
            if best is None or cand < best:
                best = cand
    return HypModel(g, *best)


@dataclass
class HypCurve:
    model: HypModel
    aut: int
    q_index: int


def run_hyp_census(g: int = 5) -> list[HypCurve]:
    """The complete list of genus-g hyperelliptic curves over F_2, ordered by
    (q representative, p word)."""
    if g not in (2, 3, 4, 5):
        raise ValueError("supported genera are 2..5")
    out = []
    for qi, q in enumerate(q_representatives(g)):
        for p, aut in reduce_ps_for_q(q, smooth_ps(q, g), g):
            out.append(HypCurve(HypModel(g, q, p), aut, qi))
    return out


def census_mass(curves) -> Fraction:
    return sum((Fraction(1, c.aut) for c in curves), Fraction(0))


# ---------------------------------------------------------------------------
# Brute-force oracle for small genus

def _singular_somewhere(q: int, p: int, g: int) -> bool:
    """Direct search for singular points over the splitting field of q."""
    ctx = make_field(_splitting_degree(g + 1))
    dq, dp = pderiv(q), pderiv(p)
    for a in e_roots(e_from_f2(q), ctx):
        y = ctx.sqrt(peval(p, a, ctx))
        if ctx.mul(peval(dq, a, ctx), y) ^ peval(dp, a, ctx) == 0:
            return True
    # chart at infinity: v^2 + Q(u) v = P(u), Q(u) = u^(g+1) q(1/u), P = u^(2g+2) p(1/u)
    Q = _reverse(q, g + 1)
    P = _reverse(p, 2 * g + 2)
    if Q & 1 == 0:
        y0 = P & 1                    # sqrt in F_2
        if ((Q >> 1) & 1) * y0 ^ ((P >> 1) & 1) == 0:
            return True
    return False


def _splitting_degree(n: int) -> int:
    from math import lcm
    out = 1
    for k in range(1, n + 1):
        out = lcm(out, k)
    return out


def _reverse(f: int, n: int) -> int:
    return int(format(f, f"0{n + 1}b")[::-1], 2)


def oracle_hyp_classes(g: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Exhaustive classification of all smooth models (q, p) of genus g.

    Returns a map from every smooth model to (class id, |Aut|) where class ids
    come from union-find over every isomorphism (A, r)."""
    models = []
    for q in range(1, 1 << (g + 2)):
        for p in range(1 << (2 * g + 3)):
            if max(2 * deg(q), deg(p)) not in (2 * g + 1, 2 * g + 2):
                continue
            if not _singular_somewhere(q, p, g):
                models.append((q, p))
    index = {m: i for i, m in enumerate(models)}
    parent = list(range(len(models)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    autos = [0] * len(models)
    maps = pgl2(g + 1)
    for (q, p), i in index.items():
        for A in maps:
            q2 = moebius_action(A, q)
            ap = moebius_action(A.with_weight(2 * g + 2), p)
            for r in range(1 << (g + 2)):
                p2 = ap ^ psquare(r) ^ pmul(r, q2)
                j = index[(q2, p2)]
                if j == i:
                    autos[i] += 1
                a, b = find(i), find(j)
                if a != b:
                    parent[a] = b
    roots = {}
    return {m: (roots.setdefault(find(i), len(roots)), autos[i]) for m, i in index.items()}
