"""Point counts over F_{2^N}, L-polynomials, 2-adic Newton polygons and moments."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .gf2algebra import artin_schreier_count, make_field, peval
from .grpact import monomials

GENUS = 5
Q = 2


# ---------------------------------------------------------------------------
# Data types

@dataclass(frozen=True)
class PointCounts:
    N: tuple

    def __post_init__(self):
        if any(n < 0 for n in self.N):
            raise ValueError("negative point count")

    def frobenius_sums(self) -> tuple:
        return tuple(Q ** i + 1 - n for i, n in enumerate(self.N, 1))

    def weil_ok(self, g: int = GENUS) -> bool:
        return all(s * s <= 4 * g * g * Q ** i for i, s in enumerate(self.frobenius_sums(), 1))

    def __str__(self):
        return ",".join(map(str, self.N))


@dataclass(frozen=True)
class LPoly:
    coeffs: tuple       # c_0 .. c_2g

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def power_sums(self, m: int | None = None) -> tuple:
        """s_1..s_m of the reciprocal roots, via Newton's identities."""
        g = self.genus
        m = g if m is None else m
        c = list(self.coeffs) + [0] * max(0, m + 1 - len(self.coeffs))
        s = []
        for k in range(1, m + 1):
            v = -k * c[k] - sum(c[j] * s[k - j - 1] for j in range(1, k))
            s.append(v)
        return tuple(s)

    def counts(self) -> PointCounts:
        return PointCounts(tuple(Q ** i + 1 - s for i, s in enumerate(self.power_sums(), 1)))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}T^{i}")
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class NewtonPolygon:
    slopes: tuple       # 2g Fractions, weakly increasing

    def is_symmetric(self) -> bool:
        return sorted(1 - s for s in self.slopes) == list(self.slopes)

    @property
    def p_rank(self) -> int:
        return sum(1 for s in self.slopes if s == 0)

    def is_ordinary(self) -> bool:
        return all(s in (0, 1) for s in self.slopes)

    def is_supersingular(self) -> bool:
        return all(s == Fraction(1, 2) for s in self.slopes)

    def __str__(self):
        return ",".join(str(s) for s in self.slopes)

    @classmethod
    def parse(cls, text: str) -> "NewtonPolygon":
        return cls(tuple(Fraction(t) for t in text.split(",")))


@dataclass(frozen=True)
class PartitionSpec:
    """lambda = [1^m_1, 2^m_2, ...], stored as the multiplicities m_i."""
    mult: tuple

    @property
    def weight(self) -> int:
        return sum(i * m for i, m in enumerate(self.mult, 1))

    @classmethod
    def of(cls, parts: dict) -> "PartitionSpec":
        top = max(parts) if parts else 0
        return cls(tuple(parts.get(i, 0) for i in range(1, top + 1)))


# ---------------------------------------------------------------------------
# Counting

def count_points_hyp(q: int, p: int, N: int, g: int = GENUS) -> int:
    """Points of y^2 + q y = p over F_{2^N}, including those at infinity."""
    ctx = make_field(N)
    total = 0
    for x in range(ctx.order):
        total += artin_schreier_count(peval(q, x, ctx), peval(p, x, ctx), ctx)
    b_top = (q >> (g + 1)) & 1
    a_top = (p >> (2 * g + 2)) & 1
    return total + artin_schreier_count(b_top, a_top, ctx)


@lru_cache(maxsize=None)
def _mul_table(k: int) -> np.ndarray:
    ctx = make_field(k)
    n = ctx.order
    if k <= 5:
        return np.array([[ctx.mul(a, b) for b in range(n)] for a in range(n)], dtype=_dtype(k))
    # via logarithms: a*b = exp(log a + log b)
    exp = np.array(ctx._exp, dtype=_dtype(k))
    log = np.array(ctx._log, dtype=np.int64)
    T = exp[log[:, None] + log[None, :]]
    T[0, :] = 0
    T[:, 0] = 0
    return T


def _dtype(k: int):
    return np.uint8 if k <= 8 else np.uint16


@lru_cache(maxsize=None)
def projective_points(nvars: int, k: int) -> np.ndarray:
    """Normalized representatives of P^(nvars-1)(F_{2^k}), first nonzero coordinate 1."""
    size = 1 << k
    blocks = []
    for lead in range(nvars):
        free = nvars - lead - 1
        rest = np.indices((size,) * free, dtype=np.uint8).reshape(free, -1).T if free else \
            np.zeros((1, 0), dtype=_dtype(k))
        blk = np.zeros((len(rest), nvars), dtype=_dtype(k))
        blk[:, lead] = 1
        blk[:, lead + 1:] = rest
        blocks.append(blk)
    return np.concatenate(blocks)


@lru_cache(maxsize=None)
def monomial_values(nvars: int, d: int, k: int) -> np.ndarray:
    """Array (dim, npts): the value of each degree-d monomial (descending lex)
    at each point of P^(nvars-1)(F_{2^k})."""
    mt = _mul_table(k)
    pts = projective_points(nvars, k)
    out = []
    powers = []
    for j in range(nvars):
        col = [np.ones(len(pts), dtype=_dtype(k))]
        for _ in range(d):
            col.append(mt[col[-1], pts[:, j]])
        powers.append(col)
    for e in monomials(nvars, d):
        v = powers[0][0]
        for j, ej in enumerate(e):
            if ej:
                v = mt[v, powers[j][ej]]
        out.append(v)
    return np.ascontiguousarray(np.array(out))


def _word_columns(word: int, dim: int) -> list[int]:
    return [i for i in range(dim) if (word >> (dim - 1 - i)) & 1]


def count_common_zeros(words, nvars: int, d: int, k: int) -> int:
    """Number of points of P^(nvars-1)(F_{2^k}) where all forms (given as
    coefficient words) vanish."""
    vals = monomial_values(nvars, d, k)
    dim = vals.shape[0]
    sel = None
    for w in words:
        cols = _word_columns(w, dim)
        sub = vals[cols] if sel is None else vals[cols][:, sel]
        f = np.bitwise_xor.reduce(sub, axis=0) if cols else np.zeros(sub.shape[1], vals.dtype)
        hit = np.flatnonzero(f == 0)
        sel = hit if sel is None else sel[hit]
        if len(sel) == 0:
            return 0
    return len(sel) if sel is not None else vals.shape[1]


SINGULARITY_BRANCHES = {
    # rational branches above the singular point over F_{2^N}
    "SN": lambda N: 2,
    "NN": lambda N: 2 if N % 2 == 0 else 0,
    "CU": lambda N: 1,
}


def count_points_trig(F: int, sing: str, N: int) -> int:
    """Points on the normalization of the plane quintic F with one rational
    singular point of the given type."""
    return count_common_zeros([F], 3, 5, N) - 1 + SINGULARITY_BRANCHES[sing](N)


def count_points_ci(triple, N: int) -> int:
    return count_common_zeros(list(triple), 5, 2, N)


def counts_for(kind: str, payload, nmax: int = GENUS) -> PointCounts:
    if kind == "HYP":
        g, q, p = payload
        return PointCounts(tuple(count_points_hyp(q, p, N, g) for N in range(1, g + 1)))
    if kind == "TRI":
        F, sing = payload
        return PointCounts(tuple(count_points_trig(F, sing, N) for N in range(1, nmax + 1)))
    if kind == "CI":
        return PointCounts(tuple(count_points_ci(payload, N) for N in range(1, nmax + 1)))
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# L-polynomial and Newton polygon

def lpoly_from_counts(c: PointCounts, g: int | None = None) -> LPoly:
    g = len(c.N) if g is None else g
    if len(c.N) < g:
        raise ValueError("need N_1..N_g")
    if not c.weil_ok(g):
        raise ValueError(f"counts {c} violate the Weil bound")
    s = c.frobenius_sums()
    coeffs = [1]
    for k in range(1, g + 1):
        acc = sum(s[j - 1] * coeffs[k - j] for j in range(1, k + 1))
        if acc % k:
            raise ValueError(f"non-integral coefficient c_{k} for counts {c}")
        coeffs.append(-acc // k)
    for i in range(g - 1, -1, -1):
        coeffs.append(Q ** (g - i) * coeffs[i])
    return LPoly(tuple(coeffs))


def v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def newton_polygon(L: LPoly) -> NewtonPolygon:
    pts = [(i, v2(c)) for i, c in enumerate(L.coeffs) if c]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point if it lies on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes += [Fraction(y2 - y1, x2 - x1)] * (x2 - x1)
    return NewtonPolygon(tuple(slopes))


def isogeny_key(c: PointCounts) -> tuple:
    return c.frobenius_sums()


def bergstrom_moment(lam: PartitionSpec, records) -> Fraction:
    """sum over curves of prod a_i^(m_i) / |Aut| with a_i = 2^i + 1 - N_i."""
    if len(lam.mult) > GENUS:
        if any(lam.mult[GENUS:]):
            raise ValueError("moment needs a_i beyond the computed counts")
    total = Fraction(0)
    for r in records:
        a = r.counts.frobenius_sums()
        term = 1
        for i, m in enumerate(lam.mult):
            term *= a[i] ** m
        total += Fraction(term, r.aut)
    return total


# ---------------------------------------------------------------------------
# Aggregation

STRATA = ("HYP", "TRI", "CI")


def _row(sl: tuple) -> tuple:
    return tuple(Fraction(x) for x in sl)


NEWTON_ROWS = tuple(_row(r) for r in [
    (0, 0, 0, 0, 0, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, "1/2", "1/2", 1, 1, 1, 1),
    (0, 0, 0, "1/2", "1/2", "1/2", "1/2", 1, 1, 1),
    (0, 0, "1/3", "1/3", "1/3", "2/3", "2/3", "2/3", 1, 1),
    (0, 0, "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", 1, 1),
    (0, "1/4", "1/4", "1/4", "1/4", "3/4", "3/4", "3/4", "3/4", 1),
    (0, "1/3", "1/3", "1/3", "1/2", "1/2", "2/3", "2/3", "2/3", 1),
    (0,) + ("1/2",) * 8 + (1,),
    ("1/5",) * 5 + ("4/5",) * 5,
    ("1/4",) * 4 + ("1/2",) * 2 + ("3/4",) * 4,
    ("1/3",) * 3 + ("1/2",) * 4 + ("2/3",) * 3,
    ("2/5",) * 5 + ("3/5",) * 5,
    ("1/2",) * 10,
])
"""The symmetric slope sequences of height 10, ordered by the polygon (highest first)."""


@dataclass
class Tables:
    counts: dict          # slopes -> {stratum: int}
    mass: dict            # slopes -> {stratum: Fraction}
    aut: dict             # stratum -> Counter
    totals: dict          # stratum -> int
    masses: dict          # stratum -> Fraction

    def count_row(self, slopes) -> tuple:
        row = tuple(self.counts.get(slopes, {}).get(s, 0) for s in STRATA)
        return row + (sum(row),)

    def mass_row(self, slopes) -> tuple:
        row = tuple(self.mass.get(slopes, {}).get(s, Fraction(0)) for s in STRATA)
        return row + (sum(row),)


def tabulate(records) -> Tables:
    counts = defaultdict(Counter)
    mass = defaultdict(lambda: defaultdict(Fraction))
    aut = defaultdict(Counter)
    for r in records:
        sl = r.polygon.slopes
        counts[sl][r.stratum] += 1
        mass[sl][r.stratum] += Fraction(1, r.aut)
        aut[r.stratum][r.aut] += 1
    totals = {s: sum(aut[s].values()) for s in STRATA}
    masses = {s: sum((m[s] for m in mass.values()), Fraction(0)) for s in STRATA}
    return Tables(dict(counts), {k: dict(v) for k, v in mass.items()}, dict(aut), totals, masses)


def all_symmetric_polygons(height: int = 10) -> list[tuple]:
    """Every symmetric Newton polygon of the given height with integral break points."""
    out = []
    denoms = range(1, height + 1)
    seg = sorted({Fraction(a, b) for b in denoms for a in range(b + 1)})
    # enumerate non-decreasing slope multisets built from segments of length
    # divisible by the slope's denominator
    def rec(prefix, last_idx, remaining):
        if remaining == 0:
            sl = tuple(prefix)
            if sorted(1 - x for x in sl) == list(sl):
                out.append(sl)
            return
        for i in range(last_idx, len(seg)):
            s = seg[i]
            den = s.denominator
            for length in range(den, remaining + 1, den):
                rec(prefix + [s] * length, i + 1, remaining - length)
    rec([], 0, height)
    return sorted(set(out))


@dataclass
class Aggregates:
    curves: dict          # stratum -> count
    mass: dict            # stratum -> Fraction
    isogeny_classes: int
    shared_classes: int   # keys realised in every stratum
    pointless: dict       # stratum -> count with N_1 = 0
    max_points: dict      # stratum -> (max N_1, number of curves attaining it)

    @property
    def total_curves(self) -> int:
        return sum(self.curves.values())

    @property
    def total_mass(self) -> Fraction:
        return sum(self.mass.values(), Fraction(0))


def aggregates(records) -> Aggregates:
    curves, mass = Counter(), defaultdict(Fraction)
    keys = defaultdict(set)
    pointless = Counter()
    n1 = defaultdict(Counter)
    for r in records:
        curves[r.stratum] += 1
        mass[r.stratum] += Fraction(1, r.aut)
        keys[r.stratum].add(isogeny_key(r.counts))
        n1[r.stratum][r.counts.N[0]] += 1
        if r.counts.N[0] == 0:
            pointless[r.stratum] += 1
    present = [s for s in STRATA if s in keys]
    union = set().union(*keys.values()) if keys else set()
    shared = set.intersection(*(keys[s] for s in present)) if present else set()
    top = {s: (max(n1[s]), n1[s][max(n1[s])]) for s in present}
    return Aggregates({s: curves[s] for s in present}, {s: mass[s] for s in present},
                      len(union), len(shared), {s: pointless[s] for s in present}, top)
