"""Canonical genus-5 curves that are complete intersections of three quadrics in P^4.

A curve is the base locus of a net W = <P, Q, R> of quadrics (15-bit words,
monomials X^2, XY, ..., U^2 with X^2 most significant).  Nets whose nonzero
members all lie in the four geometrically irreducible orbits are sorted by
their top orbit label i; each such net is moved so that it contains the class
representative P_i.  Second and third generators are reduced under Stab(P_i)
and Stab(P_i) n Stab(Q), smoothness is certified, and remaining duplicates
are removed by mapping every S in W n Orbit(P_i) onto P_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .grpact import (IRREDUCIBLE_CLASSES, LinearRep, MatGF2, act, apply_tables,
                     chunk_tables, monomials, quadric_orbits, word_to_terms)
from .multivar import MultiPoly, ci_is_smooth_curve
from .zeta import projective_points

UNIVERSE = 1 << 15
ALL_WORDS = np.arange(UNIVERSE, dtype=np.uint32)


@dataclass(frozen=True)
class QuadricTriple:
    P: int
    Q: int
    R: int

    def span(self) -> list[int]:
        P, Q, R = self.P, self.Q, self.R
        return [P, Q, P ^ Q, R, P ^ R, Q ^ R, P ^ Q ^ R]

    def is_independent(self) -> bool:
        return 0 not in self.span()

    def net_key(self) -> int:
        return int(net_keys(np.array([[self.P, self.Q, self.R]], dtype=np.uint32))[0])

    def polys(self) -> list[MultiPoly]:
        return [quadric_poly(w) for w in (self.P, self.Q, self.R)]

    def hex(self) -> tuple[str, str, str]:
        return tuple(f"{w:04x}" for w in (self.P, self.Q, self.R))


def quadric_poly(w: int) -> MultiPoly:
    return MultiPoly(frozenset(word_to_terms(w, 5, 2)), 5)


def net_keys(bases: np.ndarray) -> np.ndarray:
    """Canonical 45-bit key of the span of each row (a, b, c) of ``bases``:
    the two least nonzero elements and the least element outside their span."""
    a, b, c = (bases[..., k].astype(np.uint64) for k in range(3))
    el = np.stack([a, b, a ^ b, c, a ^ c, b ^ c, a ^ b ^ c], axis=-1)
    el.sort(axis=-1)
    s0, s1, s2, s3 = el[..., 0], el[..., 1], el[..., 2], el[..., 3]
    third = np.where(s2 == (s0 ^ s1), s3, s2)
    return (s0 << np.uint64(30)) | (s1 << np.uint64(15)) | third


def is_smooth_ci(t: QuadricTriple) -> bool:
    return ci_is_smooth_curve(*t.polys())


# ---------------------------------------------------------------------------
# Rational singular points (a fast necessary condition for smoothness)

@lru_cache(maxsize=None)
def _point_tables() -> tuple[np.ndarray, np.ndarray]:
    """For every quadric word: 31-bit masks of the F_2-points of P^4 where it
    vanishes, and where additionally its gradient vanishes."""
    pts = projective_points(5, 1).astype(bool)                      # (31, 5)
    mons = monomials(5, 2)
    bits = ((ALL_WORDS[:, None] >> (14 - np.arange(15))) & 1).astype(np.uint8)

    def evaluate(exps) -> np.ndarray:
        cols = np.array([np.all(pts | (np.array(e) == 0), axis=1) for e in exps], dtype=np.uint8)
        return (bits @ cols) & 1                                        # (W, 31)

    crit = evaluate(mons) == 0
    for j in range(5):
        dexps = []
        for e in mons:
            f = list(e)
            if e[j] % 2:
                f[j] -= 1
                dexps.append(f)
            else:
                dexps.append(None)
        cols = np.array([np.all(pts | (np.array(f) == 0), axis=1) if f is not None
                         else np.zeros(len(pts), bool) for f in dexps], dtype=np.uint8)
        crit &= ((bits @ cols) & 1) == 0
    weights = np.uint64(1) << np.arange(len(pts), dtype=np.uint64)
    zero = evaluate(mons) == 0
    return (zero * weights).sum(axis=1, dtype=np.uint64), (crit * weights).sum(axis=1, dtype=np.uint64)


def rational_singular_points(bases: np.ndarray) -> np.ndarray:
    """31-bit masks of F_2-points where the net of each row is singular."""
    zero, crit = _point_tables()
    a, b, c = (bases[:, k] for k in range(3))
    common = zero[a] & zero[b] & zero[c]
    anycrit = crit[a] | crit[b] | crit[a ^ b] | crit[c] | crit[a ^ c] | crit[b ^ c] | crit[a ^ b ^ c]
    return common & anycrit


# ---------------------------------------------------------------------------
# Groups

@dataclass
class ClassData:
    i: int
    P: int
    stab: list            # Stab(P_i) as MatGF2
    tables: np.ndarray    # chunk tables of the stabilizer on quadric words

    def images(self, words, idx=None) -> np.ndarray:
        T = self.tables if idx is None else self.tables[idx]
        return apply_tables(T, np.asarray(words, dtype=np.uint32))


@lru_cache(maxsize=None)
def class_data(i: int) -> ClassData:
    tab = quadric_orbits()
    stab = tab.stabilizer(i)
    T = chunk_tables([LinearRep(M, 2) for M in stab])
    return ClassData(i, tab.reps[i], stab, T)


def _group_min(cd: ClassData, idx, shifts, block: int = 128) -> np.ndarray:
    """min over g in the subgroup and s in shifts of g.(w + s), for every word w."""
    idx = np.arange(len(cd.stab)) if idx is None else np.asarray(idx)
    best = np.full(UNIVERSE, UNIVERSE, dtype=np.uint32)
    for lo in range(0, len(idx), block):
        img = cd.images(ALL_WORDS, idx[lo:lo + block])
        for s in shifts:
            np.minimum(best, img[:, ALL_WORDS ^ s].min(axis=0), out=best)
    return best


def allowed_words(i: int) -> np.ndarray:
    lab = quadric_orbits().label
    return (lab >= 1) & (lab <= i)


# ---------------------------------------------------------------------------
# Candidate set

def q_representatives(i: int) -> list[int]:
    """Reps of Stab(P_i)-orbits on pairs {Q, Q + P_i} inside the allowed orbits."""
    cd = class_data(i)
    ok = allowed_words(i)
    canon = _group_min(cd, None, (0, cd.P))
    return [int(w) for w in np.flatnonzero(ok & ok[ALL_WORDS ^ cd.P] & (canon == ALL_WORDS))
            if w != cd.P]


def r_representatives(i: int, Q: int) -> list[int]:
    """Reps of (Stab(P) n Stab(Q))-orbits on {R, R+P, R+Q, R+P+Q} giving nets
    inside the allowed orbits."""
    cd = class_data(i)
    P = cd.P
    ok = allowed_words(i)
    H = np.flatnonzero(cd.images([Q])[:, 0] == Q)
    canon = _group_min(cd, H, (0, P, Q, P ^ Q))
    good = ok & ok[ALL_WORDS ^ P] & ok[ALL_WORDS ^ Q] & ok[ALL_WORDS ^ P ^ Q] & (canon == ALL_WORDS)
    good[[0, P, Q, P ^ Q]] = False
    return [int(w) for w in np.flatnonzero(good)]


def candidate_triples(i: int) -> np.ndarray:
    """All (P_i, Q, R) from the reduction steps satisfying the net condition,
    in (Q, R) order; shape (n, 3)."""
    P = class_data(i).P
    rows = []
    for Q in q_representatives(i):
        for R in r_representatives(i, Q):
            rows.append((P, Q, R))
    return np.array(rows, dtype=np.uint32).reshape(-1, 3)


def _smooth_job(row) -> bool:
    return is_smooth_ci(QuadricTriple(*row))


def build_sigma(workers: int = 1, classes=IRREDUCIBLE_CLASSES, progress=None) -> dict[int, np.ndarray]:
    """Smooth candidate triples for each top class."""
    out = {}
    for i in classes:
        cand = candidate_triples(i)
        cand = cand[rational_singular_points(cand) == 0]
        rows = [tuple(map(int, r)) for r in cand]
        if workers > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(workers) as ex:
                flags = list(ex.map(_smooth_job, rows, chunksize=256))
        else:
            flags = []
            for k, r in enumerate(rows):
                flags.append(_smooth_job(r))
                if progress and k % 2000 == 0:
                    progress(i, k, len(rows))
        out[i] = cand[np.array(flags, dtype=bool)] if rows else cand
    return out


# ---------------------------------------------------------------------------
# Isomorphisms between nets containing P_i

def _moves_onto_P(i: int, t: QuadricTriple) -> list[tuple[MatGF2, np.ndarray]]:
    """For each S in W n Orbit(P_i): one M0 with M0.S = P_i, and the images of
    (P, Q, R) under M0 N for every N in Stab(P_i)."""
    cd = class_data(i)
    tab = quadric_orbits()
    out = []
    for S in t.span():
        if tab.label[S] != i:
            continue
        M0 = tab.transporter(S, cd.P)
        rep = LinearRep(M0, 2)
        moved = [act(rep, w) for w in (t.P, t.Q, t.R)]
        # (M0 N).w = N.(M0.w)
        out.append((M0, cd.images(moved)))
    return out


def dedup_sigma(i: int, triples: np.ndarray) -> list[tuple[QuadricTriple, int]]:
    """One triple per isomorphism class, in list order, with |Aut| of each."""
    keys = net_keys(triples)
    index: dict[int, list[int]] = {}
    for k, key in enumerate(keys.tolist()):
        index.setdefault(key, []).append(k)
    alive = np.ones(len(triples), dtype=bool)
    out = []
    for k in range(len(triples)):
        if not alive[k]:
            continue
        t = QuadricTriple(*map(int, triples[k]))
        own = int(keys[k])
        aut = 0
        for _, imgs in _moves_onto_P(i, t):
            ik = net_keys(imgs)
            aut += int((ik == own).sum())
            for key in np.unique(ik).tolist():
                for j in index.get(key, ()):
                    alive[j] = False
        if alive[k]:
            raise AssertionError("a triple failed to map onto itself")
        out.append((t, aut))
    return out


def equivalent_keys(t: QuadricTriple) -> set[int]:
    """NetKeys of every net isomorphic to <P, Q, R> that contains its class
    representative; the census member of the class is among them."""
    tab = quadric_orbits()
    i = top_class(t)
    if i > 4 or min(int(tab.label[w]) for w in t.span()) < 1:
        raise ValueError("net contains a geometrically reducible quadric")
    S = next(w for w in t.span() if tab.label[w] == i)
    rep = LinearRep(tab.transporter(S, class_data(i).P), 2)
    base = QuadricTriple(*(act(rep, w) for w in (t.P, t.Q, t.R)))
    keys = set()
    for _, imgs in _moves_onto_P(i, base):
        keys.update(net_keys(imgs).tolist())
    return keys


def ci_automorphisms(t: QuadricTriple) -> list[MatGF2]:
    """All M in GL_5(F_2) with M.W = W for W = <P, Q, R>."""
    tab = quadric_orbits()
    labels = [int(tab.label[w]) for w in t.span()]
    if min(labels) < 1 or max(labels) > 4:
        raise ValueError("net contains a geometrically reducible quadric")
    i = max(labels)
    cd = class_data(i)
    # move the net so that it contains P_i, then search
    S = next(w for w in t.span() if tab.label[w] == i)
    A = tab.transporter(S, cd.P)
    repA = LinearRep(A, 2)
    base = QuadricTriple(*(act(repA, w) for w in (t.P, t.Q, t.R)))
    own = base.net_key()
    out = []
    for M0, imgs in _moves_onto_P(i, base):
        hits = np.flatnonzero(net_keys(imgs) == own)
        out += [M0 @ cd.stab[h] for h in hits]
    # conjugate back: Aut(W) = A Aut(base) A^-1 under the right action
    Ainv = A.inverse()
    return [A @ M @ Ainv for M in out]


# ---------------------------------------------------------------------------
# Census

@dataclass
class CICurve:
    triple: QuadricTriple
    cls: int
    aut: int


def run_ci_census(workers: int = 1, progress=None) -> list[CICurve]:
    sigma = build_sigma(workers, progress=progress)
    out = []
    for i in IRREDUCIBLE_CLASSES:
        for t, aut in dedup_sigma(i, sigma[i]):
            out.append(CICurve(t, i, aut))
    return out


def census_mass(curves) -> Fraction:
    return sum((Fraction(1, c.aut) for c in curves), Fraction(0))


def top_class(t: QuadricTriple) -> int:
    lab = quadric_orbits().label
    return max(int(lab[w]) for w in t.span())
