"""Sparse polynomials over F_2 in at most five variables, and Groebner bases.

A :class:`MultiPoly` is a frozen set of exponent tuples (all coefficients are
1).  For Groebner work the monomials are re-encoded as packed integer keys
whose natural integer order *is* the monomial order and whose product is an
addition, so leading terms are ``max`` and shifts are set comprehensions.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, permutations

VARS = "XYZTU"
_FIELD = 7          # bits per exponent field: 6 value bits and a guard bit
_EMAX = 63


@dataclass(frozen=True)
class MultiPoly:
    terms: frozenset
    nvars: int = 5

    @classmethod
    def zero(cls, nvars: int = 5) -> "MultiPoly":
        return cls(frozenset(), nvars)

    @classmethod
    def one(cls, nvars: int = 5) -> "MultiPoly":
        return cls(frozenset([(0,) * nvars]), nvars)

    @classmethod
    def var(cls, i: int, nvars: int = 5) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(frozenset([tuple(e)]), nvars)

    @classmethod
    def parse(cls, text: str, nvars: int = 5) -> "MultiPoly":
        text = text.replace(" ", "").replace("^", "").replace("*", "")
        if text in ("", "0"):
            return cls.zero(nvars)
        terms: set = set()
        for tok in text.split("+"):
            e = [0] * nvars
            if tok != "1":
                for name, power in re.findall(r"([A-Za-z])(\d*)", tok):
                    e[VARS.index(name.upper())] += int(power) if power else 1
            terms ^= {tuple(e)}
        return cls(frozenset(terms), nvars)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return MultiPoly(self.terms ^ other.terms, self.nvars)

    __sub__ = __add__

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: set = set()
        for a in self.terms:
            for b in other.terms:
                out ^= {tuple(x + y for x, y in zip(a, b))}
        return MultiPoly(frozenset(out), self.nvars)

    def __pow__(self, e: int) -> "MultiPoly":
        r = MultiPoly.one(self.nvars)
        for _ in range(e):
            r = r * self
        return r

    @property
    def degree(self) -> int:
        return max((sum(t) for t in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(t) for t in self.terms}) <= 1

    def derivative(self, i: int) -> "MultiPoly":
        out = set()
        for t in self.terms:
            if t[i] & 1:
                e = list(t)
                e[i] -= 1
                out ^= {tuple(e)}
        return MultiPoly(frozenset(out), self.nvars)

    def evaluate(self, point, mul, one: int = 1) -> int:
        """Evaluate with field multiplication ``mul`` at a tuple of field elements."""
        total = 0
        for t in self.terms:
            v = one
            for x, e in zip(point, t):
                for _ in range(e):
                    v = mul(v, x)
            total ^= v
        return total

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=_degrevlex_sort_key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        return "+".join(_term_str(t) for t in self.sorted_terms())

    __repr__ = __str__


def _degrevlex_sort_key(t):
    return (sum(t), tuple(-e for e in reversed(t)))


def _term_str(t) -> str:
    if not any(t):
        return "1"
    parts = []
    for name, e in zip(VARS, t):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}{e}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# Monomial orders on packed keys

class MonomialOrder:
    """Packed monomial keys for ``degrevlex`` (default) or ``lex``.

    Variables are ranked X > Y > Z > T > U (or by ``priority``, a permutation
    listing variable indices from most to least significant).
    """

    def __init__(self, kind: str = "degrevlex", nvars: int = 5, priority=None):
        if kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.nvars = nvars
        self.priority = tuple(priority) if priority is not None else tuple(range(nvars))
        n = nvars
        self.guard = sum(1 << (_FIELD * i + 6) for i in range(n))
        self.low = (1 << (_FIELD * n)) - 1
        if kind == "degrevlex":
            # field i holds EMAX - e for the variable of rank i (least significant
            # variable in the highest field); total degree above all fields
            self.offset = sum(_EMAX << (_FIELD * i) for i in range(n))
        else:
            self.offset = 0
        self.one = self.encode((0,) * n)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, nvars={self.nvars})"

    def _slot(self, var: int) -> int:
        rank = self.priority.index(var)
        if self.kind == "degrevlex":
            return rank
        return self.nvars - 1 - rank

    def encode(self, exps) -> int:
        key = 0
        for v, e in enumerate(exps):
            if e > _EMAX:
                raise OverflowError("exponent too large")
            f = (_EMAX - e) if self.kind == "degrevlex" else e
            key |= f << (_FIELD * self._slot(v))
        if self.kind == "degrevlex":
            key |= sum(exps) << (_FIELD * self.nvars)
        return key

    def decode(self, key: int) -> tuple:
        out = [0] * self.nvars
        for v in range(self.nvars):
            f = (key >> (_FIELD * self._slot(v))) & _EMAX
            out[v] = (_EMAX - f) if self.kind == "degrevlex" else f
        return tuple(out)

    def mul(self, a: int, b: int) -> int:
        return a + b - self.offset

    def divides(self, a: int, b: int) -> bool:
        """True when monomial a divides monomial b."""
        if self.kind == "degrevlex":
            return (((a & self.low) | self.guard) - (b & self.low)) & self.guard == self.guard
        return ((b | self.guard) - a) & self.guard == self.guard

    def quotient(self, b: int, a: int) -> int:
        """b / a for a dividing b, as a shift to add to keys."""
        return b - a

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode(tuple(max(x, y) for x, y in zip(ea, eb)))

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.decode(a), self.decode(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    def degree(self, a: int) -> int:
        return sum(self.decode(a))

    def to_keys(self, f: MultiPoly) -> frozenset:
        return frozenset(self.encode(t) for t in f.terms)

    def from_keys(self, keys) -> MultiPoly:
        return MultiPoly(frozenset(self.decode(k) for k in keys), self.nvars)


DEGREVLEX = {n: MonomialOrder("degrevlex", n) for n in range(1, 6)}


# ---------------------------------------------------------------------------
# Groebner bases

@dataclass
class IdealBasis:
    gens: list
    order: MonomialOrder
    reduced: bool = False
    _keys: list = field(default_factory=list, repr=False)

    @property
    def nvars(self) -> int:
        return self.order.nvars

    def leading_monomials(self) -> list[tuple]:
        return [self.order.decode(max(k)) for k in self._keys]

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        return self.order.from_keys(_normal_form(set(self.order.to_keys(f)), self._keys, self.order))

    def is_unit(self) -> bool:
        return any(k == {self.order.one} for k in self._keys)


def _normal_form(p: set, basis: list, order: MonomialOrder) -> set:
    lms = [max(g) for g in basis]
    rem = set()
    divides = order.divides
    while p:
        lt = max(p)
        for g, lm in zip(basis, lms):
            if divides(lm, lt):
                shift = lt - lm
                p ^= {m + shift for m in g}
                break
        else:
            rem.add(lt)
            p.discard(lt)
    return rem


def groebner(gens, order: MonomialOrder | None = None) -> IdealBasis:
    """Reduced Groebner basis (Buchberger, normal selection, both criteria)."""
    gens = [g for g in gens if g]
    if order is None:
        nv = gens[0].nvars if gens else 5
        order = DEGREVLEX[nv]
    keys = [set(order.to_keys(g)) for g in gens]
    basis = _buchberger(keys, order)
    basis = _reduce_basis(basis, order)
    basis.sort(key=max)
    return IdealBasis([order.from_keys(k) for k in basis], order, True, [frozenset(k) for k in basis])


def _buchberger(polys: list[set], order: MonomialOrder) -> list[set]:
    store: list[set] = []        # every element ever added; pairs index into it
    lms: list[int] = []
    active: list[int] = []
    pairs: list[tuple[int, int, int]] = []   # (lcm, i, j)
    divides, lcm, coprime = order.divides, order.lcm, order.coprime

    def add(h: set) -> None:
        nonlocal pairs, active
        lm_h = max(h)
        k = len(store)
        store.append(h)
        lms.append(lm_h)
        # Gebauer-Moeller update
        cand = [(lcm(lms[g], lm_h), g) for g in active]
        kept = []
        for idx, (l, g) in enumerate(cand):
            if coprime(lms[g], lm_h):
                kept.append((l, g))
                continue
            rest = cand[idx + 1:] + kept
            if not any(divides(l2, l) for l2, _ in rest):
                kept.append((l, g))
        new = [(l, g, k) for l, g in kept if not coprime(lms[g], lm_h)]
        old = []
        for l, i, j in pairs:
            if divides(lm_h, l) and lcm(lms[i], lm_h) != l and lcm(lms[j], lm_h) != l:
                continue
            old.append((l, i, j))
        pairs = old + new
        active = [g for g in active if not divides(lm_h, lms[g])] + [k]

    for p in sorted(polys, key=max):
        h = _normal_form(set(p), [store[g] for g in active], order)
        if h:
            add(h)
    while pairs:
        # normal strategy: smallest lcm first
        best = min(range(len(pairs)), key=lambda t: pairs[t][0])
        l, i, j = pairs.pop(best)
        s = {m + (l - lms[i]) for m in store[i]} ^ {m + (l - lms[j]) for m in store[j]}
        h = _normal_form(s, [store[g] for g in active], order)
        if h:
            add(h)
    return [store[g] for g in active]


def _reduce_basis(G: list[set], order: MonomialOrder) -> list[set]:
    G = [set(g) for g in G]
    G.sort(key=max)
    minimal: list[set] = []
    for g in G:
        lm = max(g)
        if any(order.divides(max(h), lm) for h in minimal):
            continue
        minimal = [h for h in minimal if not order.divides(lm, max(h))]
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm = max(g)
        tail = set(g)
        tail.discard(lm)
        r = _normal_form(tail, others, order) if others else tail
        r.add(lm)
        out.append(r)
    return out


def projective_is_empty(basis: IdealBasis) -> bool:
    """Zero locus in projective space is empty over the algebraic closure."""
    for g in basis.gens:
        if not g.is_homogeneous():
            raise ValueError("projective emptiness needs a homogeneous ideal")
    n = basis.nvars
    lms = basis.leading_monomials()
    for v in range(n):
        if not any(m[v] > 0 and sum(m) == m[v] for m in lms):
            return False
    return True


def cone_dimension(basis: IdealBasis) -> int:
    """Krull dimension of the affine zero set, from the leading-term ideal."""
    n = basis.nvars
    lms = basis.leading_monomials()
    if any(sum(m) == 0 for m in lms):
        return -1
    supports = [frozenset(i for i in range(n) if m[i]) for m in lms]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


# ---------------------------------------------------------------------------
# Linear substitution and Jacobians

def matrix_substitute(M, f: MultiPoly) -> MultiPoly:
    """f(M . x): variable i is replaced by sum_j M[i][j] x_j.

    ``M`` is anything with ``n`` and ``rows`` (row i an n-bit int, most
    significant bit = column 0), e.g. :class:`g5census.grpact.MatGF2`.
    """
    n = M.n
    if n != f.nvars:
        raise ValueError(f"matrix of size {n} on polynomial in {f.nvars} variables")
    images = []
    for i in range(n):
        row = M.rows[i]
        lin = MultiPoly.zero(n)
        for j in range(n):
            if (row >> (n - 1 - j)) & 1:
                lin = lin + MultiPoly.var(j, n)
        images.append(lin)
    out = MultiPoly.zero(n)
    for t in f.terms:
        term = MultiPoly.one(n)
        for i, e in enumerate(t):
            if e:
                term = term * images[i] ** e
        out = out + term
    return out


def _det3(m) -> MultiPoly:
    # characteristic 2: the determinant is the permanent
    out = MultiPoly.zero(m[0][0].nvars)
    for p in permutations(range(3)):
        out = out + m[0][p[0]] * m[1][p[1]] * m[2][p[2]]
    return out


def jacobian_minors(q1: MultiPoly, q2: MultiPoly, q3: MultiPoly) -> list[MultiPoly]:
    """The ten 3x3 minors of the Jacobian matrix of three forms in 5 variables."""
    rows = [[q.derivative(j) for j in range(5)] for q in (q1, q2, q3)]
    out = []
    for cols in combinations(range(5), 3):
        out.append(_det3([[rows[r][c] for c in cols] for r in range(3)]))
    return out


def ci_is_smooth_curve(q1: MultiPoly, q2: MultiPoly, q3: MultiPoly) -> bool:
    """Groebner certificate that Z(q1, q2, q3) in P^4 is a smooth curve."""
    sing = groebner([q1, q2, q3] + jacobian_minors(q1, q2, q3))
    if not projective_is_empty(sing):
        return False
    return cone_dimension(groebner([q1, q2, q3])) == 2
