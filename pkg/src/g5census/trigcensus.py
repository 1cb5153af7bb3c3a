"""Trigonal genus-5 curves over F_2 as plane quintics with one delta-1 singularity.

Quintics are 21-bit words over the monomials of degree 5 in X, Y, Z in
descending lex order (X^5 is the most significant bit).  GL_3(F_2) acts by
F -> F(M x); two such quintics give isomorphic curves iff they are in one
orbit, and |Aut| is the order of the stabilizer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .gf2algebra import (deg, distinct_degree, e_degree_profile, e_gcd, e_trim,
                         factorize, make_field, pgcd, resultant, roots_in_extension)
from .grpact import (MatGF2, apply_tables, chunk_tables, gl_list, gl_reps, monomials,
                     act, terms_to_word, word_to_terms)

NVARS, DEG = 3, 5
DIM = 21
SING_CODES = {"SplitNode": "SN", "NonSplitNode": "NN", "Cusp": "CU"}
SING_NAMES = {v: k for k, v in SING_CODES.items()}
POINTS_P2 = (0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111)   # (X, Y, Z) bits, X high


@dataclass(frozen=True)
class SingularPoint:
    """A closed singular point: one geometric representative, its residue degree,
    and for rational points the quadratic part after moving it to (0:0:1)."""
    coords: tuple          # over F_{2^degree}
    degree: int
    quad: tuple | None = None      # (a, b, c) for a x^2 + b xy + c y^2


@dataclass
class SingularityReport:
    points: list
    classification: str            # SplitNode | NonSplitNode | Cusp | Worse | SmoothOrWrong

    @property
    def accepted(self) -> bool:
        return (len(self.points) == 1 and self.points[0].degree == 1
                and self.classification in SING_CODES)


# ---------------------------------------------------------------------------
# Words and partial derivatives

def quintic_word(text: str) -> int:
    from .multivar import MultiPoly
    return terms_to_word(MultiPoly.parse(text, 3).terms, 3, 5)


def quintic_str(word: int) -> str:
    from .multivar import MultiPoly
    return str(MultiPoly(frozenset(word_to_terms(word, 3, 5)), 3))


def partials(F: int) -> list[list[tuple]]:
    """Exponent lists of F_X, F_Y, F_Z (char 2: only odd exponents survive)."""
    terms = word_to_terms(F, NVARS, DEG)
    out = []
    for j in range(NVARS):
        dj = []
        for e in terms:
            if e[j] & 1:
                f = list(e)
                f[j] -= 1
                dj.append(tuple(f))
        out.append(dj)
    return out


def _eval_f2(terms, pt) -> int:
    v = 0
    for e in terms:
        v ^= all(not k or c for k, c in zip(e, pt))
    return v


def _bits(p: int) -> tuple:
    return ((p >> 2) & 1, (p >> 1) & 1, p & 1)


@lru_cache(maxsize=None)
def _rational_masks() -> np.ndarray:
    """masks[i, j]: 21-bit mask whose parity against F gives dF/dx_j at POINTS_P2[i]."""
    mons = monomials(NVARS, DEG)
    out = np.zeros((len(POINTS_P2), NVARS), dtype=np.uint32)
    for i, p in enumerate(POINTS_P2):
        pt = _bits(p)
        for j in range(NVARS):
            m = 0
            for k, e in enumerate(mons):
                if e[j] & 1:
                    f = list(e)
                    f[j] -= 1
                    if all(not a or c for a, c in zip(f, pt)):
                        m |= 1 << (DIM - 1 - k)
            out[i, j] = m
    return out


def _parity(x: np.ndarray) -> np.ndarray:
    x = x.copy()
    for s in (16, 8, 4, 2, 1):
        x ^= x >> s
    return x & 1


def rational_singular_mask(words: np.ndarray) -> np.ndarray:
    """Bit i set iff POINTS_P2[i] is a singular point of the quintic."""
    words = np.asarray(words, dtype=np.uint32)
    masks = _rational_masks()
    out = np.zeros(len(words), dtype=np.uint8)
    for i in range(len(POINTS_P2)):
        sing = np.ones(len(words), dtype=bool)
        for j in range(NVARS):
            sing &= _parity(words & masks[i, j]) == 0
        out |= sing.astype(np.uint8) << i
    return out


# ---------------------------------------------------------------------------
# Orbit reduction

@lru_cache(maxsize=None)
def _tables() -> np.ndarray:
    return chunk_tables(gl_reps(NVARS, DEG), chunk=7)


def canonical_forms(words: np.ndarray, block: int = 1 << 18) -> np.ndarray:
    """Least word in the orbit of each input word."""
    T = _tables()
    words = np.asarray(words, dtype=np.uint32)
    out = np.empty_like(words)
    for lo in range(0, len(words), block):
        chunk = words[lo:lo + block]
        best = chunk.copy()
        for g in range(T.shape[0]):
            img = T[g, 0, chunk & 127] ^ T[g, 1, (chunk >> 7) & 127] ^ T[g, 2, chunk >> 14]
            np.minimum(best, img, out=best)
        out[lo:lo + block] = best
    return out


def canonical_form(F: int) -> int:
    return int(canonical_forms(np.array([F], dtype=np.uint32))[0])


@dataclass
class QuinticOrbits:
    reps: np.ndarray       # ascending
    sizes: np.ndarray


@lru_cache(maxsize=None)
def quintic_orbit_reduce() -> QuinticOrbits:
    """One representative (the least word) per orbit of nonzero quintics."""
    words = np.arange(1, 1 << DIM, dtype=np.uint32)
    canon = canonical_forms(words)
    reps, sizes = np.unique(canon, return_counts=True)
    return QuinticOrbits(reps, sizes)


# ---------------------------------------------------------------------------
# Singularities

@lru_cache(maxsize=None)
def _mover(p: int) -> MatGF2:
    """Some M in GL_3(F_2) with M e_3 = p, so (M.F)(0:0:1) = F(p)."""
    for M in gl_list(3):
        col = sum(((row & 1) << (2 - i)) for i, row in enumerate(M.rows))
        if col == p:
            return M
    raise ValueError(p)


@lru_cache(maxsize=None)
def _rep(M: MatGF2):
    return next(r for r in gl_reps(NVARS, DEG) if r.M == M)


def local_parts(F: int) -> tuple[tuple, dict]:
    """Quadratic (a, b, c) and cubic {(i, j): 1} parts of F(x, y, 1) at the origin."""
    terms = word_to_terms(F, NVARS, DEG)
    a = int((2, 0, 3) in terms)
    b = int((1, 1, 3) in terms)
    c = int((0, 2, 3) in terms)
    cubic = {(e[0], e[1]): 1 for e in terms if e[2] == 2}
    return (a, b, c), cubic


def classify_at_origin(F: int) -> str:
    """Type of the singular point (0:0:1) of F from its tangent cone."""
    (a, b, c), cubic = local_parts(F)
    if b:
        return "NonSplitNode" if a and c else "SplitNode"
    if not (a or c):
        return "Worse"
    # tangent cone (sqrt(a) x + sqrt(c) y)^2 with tangent direction (c, a)
    v = 0
    for (i, j) in cubic:
        v ^= int((c or i == 0) and (a or j == 0))
    return "Cusp" if v else "Worse"


def classify_singularity(F: int, p: int) -> str:
    """Classification at the rational point p (3-bit (X, Y, Z) mask)."""
    G = act(_rep(_mover(p)), F)
    if rational_singular_mask(np.array([G], dtype=np.uint32))[0] & 1 == 0:
        raise ValueError("point is not singular")
    return classify_at_origin(G)


def cusp_by_search(F: int, p: int) -> bool:
    """Literal check: some transform puts p at (0:0:1) with local lowest terms
    exactly y^2 + x^3."""
    for rep in gl_reps(NVARS, DEG):
        col = sum(((row & 1) << (2 - i)) for i, row in enumerate(rep.M.rows))
        if col != p:
            continue
        quad, cubic = local_parts(act(rep, F))
        if quad == (0, 0, 1) and set(cubic) == {(3, 0)}:
            return True
    return False


def _z_coeffs(terms, y_is_one: bool) -> list[int]:
    """Coefficients in z (lists of F_2[x] ints) of G(x, 1, z) or G(1, 0, z)."""
    out = [0] * (DEG)
    for e in terms:
        if y_is_one:
            out[e[2]] ^= 1 << e[0]
        elif e[1] == 0:
            out[e[2]] ^= 1
    while out and out[-1] == 0:
        out.pop()
    return out


def _closed_points_over(polys_in_z: list[list[int]], ctx) -> dict | None:
    """Degree profile of the common roots in z, or None when there are infinitely many."""
    nz = [p for p in polys_in_z if any(p)]
    if not nz:
        return None
    g = nz[0]
    for h in nz[1:]:
        g = e_gcd(g, h, ctx)
    g = e_trim(g)
    if len(g) <= 1:
        return {}
    return e_degree_profile(g, ctx)


def _specialize(coeffs: list[int], a: int, ctx) -> list[int]:
    from .gf2algebra import peval
    return e_trim([peval(c, a, ctx) for c in coeffs])


def singular_points(F: int) -> SingularityReport:
    """All closed singular points of the plane quintic F, by elimination."""
    if F == 0:
        raise ValueError("zero quintic")
    mask = int(rational_singular_mask(np.array([F], dtype=np.uint32))[0])
    if mask == 0x7F:
        return SingularityReport([], "Worse")
    rational = [POINTS_P2[i] for i in range(7) if mask >> i & 1]
    # move a non-singular rational point to (0:0:1)
    base = next(POINTS_P2[i] for i in range(7) if not mask >> i & 1)
    M = _mover(base)
    G = act(_rep(M), F)
    parts = partials(G)
    points = []
    if not _rational_part_consistent(G, M, rational):
        raise AssertionError("rational singular points moved inconsistently")
    # chart Y = 1
    zpolys = [_z_coeffs(t, True) for t in parts]
    leads = [i for i, t in enumerate(parts) if (0, 0, 4) in t]
    i0 = leads[0]
    res = [resultant(zpolys[i0], zpolys[j]) for j in range(3) if j != i0 and zpolys[j]]
    R = 0
    for r in res:
        R = pgcd(R, r)
    if not res or R == 0:
        return _fallback(F, rational)
    profile = {}
    for h, e in distinct_degree_factors(R):
        ctx = make_field(e)
        a = roots_in_extension(h, e)[0]
        prof = _closed_points_over([_specialize(z, a, ctx) for z in zpolys], ctx)
        if prof is None:
            return SingularityReport([], "Worse")
        for m, k in prof.items():
            profile[e * m] = profile.get(e * m, 0) + k
    # line Y = 0 minus (0:0:1)
    line = [_z_coeffs(t, False) for t in parts]
    prof = _closed_points_over([[x for x in z] for z in line], make_field(1))
    if prof is None:
        return SingularityReport([], "Worse")
    for m, k in prof.items():
        profile[m] = profile.get(m, 0) + k
    for m in sorted(profile):
        for _ in range(profile[m]):
            points.append(SingularPoint((), m))
    if profile.get(1, 0) != len(rational):
        raise AssertionError("elimination disagrees with the rational scan")
    return _report(F, rational, points)


def distinct_degree_factors(R: int) -> list[tuple[int, int]]:
    """Distinct irreducible factors of R with their degrees."""
    return [(h, deg(h)) for h, _ in factorize(R)]


def _rational_part_consistent(G, M, rational) -> bool:
    moved = rational_singular_mask(np.array([G], dtype=np.uint32))[0]
    return bin(int(moved)).count("1") == len(rational)


def _report(F: int, rational: list[int], points: list[SingularPoint]) -> SingularityReport:
    if not points:
        return SingularityReport([], "SmoothOrWrong")
    if len(points) == 1 and points[0].degree == 1:
        p = rational[0]
        G = act(_rep(_mover(p)), F)
        quad, _ = local_parts(G)
        kind = classify_at_origin(G)
        pt = SingularPoint(_bits(p), 1, quad)
        return SingularityReport([pt], kind)
    return SingularityReport(points, "Worse")


def _fallback(F: int, rational: list[int]) -> SingularityReport:
    """Degenerate elimination: decide finiteness with a Groebner basis, then scan
    P^2(F_{2^k}) for k <= 10 (a reduced quintic has at most 10 singular points)."""
    from .multivar import MultiPoly, cone_dimension, groebner
    gens = [MultiPoly(frozenset(t), 3) for t in partials(F) if t]
    if cone_dimension(groebner(gens)) >= 2:
        return SingularityReport([], "Worse")
    points = []
    for k in range(1, 11):
        n = _new_points_count(F, k)
        points += [SingularPoint((), k)] * (n // k)
    return _report(F, rational, points)


def _new_points_count(F: int, k: int) -> int:
    """Singular points of F over F_{2^k} whose coordinates generate F_{2^k}."""
    from .zeta import count_common_zeros
    words = [terms_to_word(t, 3, 4) for t in partials(F)]
    total = count_common_zeros(words, 3, 4, k)
    sub = 0
    for d in range(1, k):
        if k % d == 0:
            sub += _new_points_count(F, d)
    return total - sub


# ---------------------------------------------------------------------------
# Census

def trig_automorphisms(F: int) -> list[MatGF2]:
    return [rep.M for rep in gl_reps(NVARS, DEG) if act(rep, F) == F]


@dataclass
class TrigCurve:
    F: int
    sing: str              # SN | NN | CU
    aut: int
    report: SingularityReport = field(repr=False, default=None)


def candidate_quintics() -> tuple[np.ndarray, np.ndarray]:
    """Orbit representatives with exactly one singular F_2-point, and orbit sizes."""
    orbits = quintic_orbit_reduce()
    m = rational_singular_mask(orbits.reps)
    one = (m != 0) & ((m & (m - 1)) == 0)
    return orbits.reps[one], orbits.sizes[one]


def analyse_quintic(F: int, orbit_size: int, faithful_cusp: bool = False) -> TrigCurve | None:
    """With faithful_cusp, a square tangent cone is decided by cusp_by_search,
    which must agree with the tangent-direction test."""
    rep = singular_points(F)
    if faithful_cusp and len(rep.points) == 1 and rep.points[0].degree == 1:
        a, b, c = rep.points[0].quad
        if not b and (a or c):
            x, y, z = rep.points[0].coords
            cusp = cusp_by_search(F, x << 2 | y << 1 | z)
            if cusp != (rep.classification == "Cusp"):
                raise AssertionError(f"cusp tests disagree on {F:06x}")
            rep = SingularityReport(rep.points, "Cusp" if cusp else "Worse")
    if not rep.accepted:
        return None
    return TrigCurve(F, SING_CODES[rep.classification], 168 // orbit_size, rep)


def run_trig_census(workers: int = 1) -> list[TrigCurve]:
    """All trigonal genus-5 curves over F_2, in ascending canonical word order."""
    words, sizes = candidate_quintics()
    jobs = list(zip(words.tolist(), sizes.tolist()))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as ex:
            res = list(ex.map(_analyse_job, jobs, chunksize=64))
    else:
        res = [_analyse_job(j) for j in jobs]
    return [c for c in res if c is not None]


def _analyse_job(job):
    return analyse_quintic(*job)


def census_mass(curves) -> Fraction:
    return sum((Fraction(1, c.aut) for c in curves), Fraction(0))
