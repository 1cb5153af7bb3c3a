"""GL_n(F_2) for n in {2, 3, 5} acting by linear substitution on forms.

Forms of degree d in n variables are bit-packed coefficient words.  Monomials
are listed in descending lexicographic order (X^d > X^(d-1)Y > ...), and the
first monomial is the most significant bit.  For n = 5, d = 2 this is the
15-bit order X^2, XY, XZ, XT, XU, Y^2, ..., U^2; for n = 3, d = 5 it is the
21-bit order X^5, X^4Y, X^4Z, ..., Z^5.

A matrix M acts on a form f by substitution, ``M.f = f(M x)``.  This is a
right action: ``(MN).f = N.(M.f)``, so ``rep(MN) = rep(N) rep(M)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

GROUP_ORDERS = {2: 6, 3: 168, 5: 9999360}


def gl_order(n: int) -> int:
    r = 1
    for i in range(n):
        r *= (1 << n) - (1 << i)
    return r


# ---------------------------------------------------------------------------
# Matrices

@dataclass(frozen=True)
class MatGF2:
    """Invertible n x n matrix over F_2; ``rows[i]`` has column 0 as its top bit."""

    n: int
    rows: tuple

    @classmethod
    def identity(cls, n: int) -> "MatGF2":
        return cls(n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def from_lists(cls, entries) -> "MatGF2":
        n = len(entries)
        rows = []
        for r in entries:
            v = 0
            for x in r:
                v = (v << 1) | (x & 1)
            rows.append(v)
        return cls(n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.n - 1 - j)) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def __matmul__(self, other: "MatGF2") -> "MatGF2":
        n = self.n
        out = []
        for r in self.rows:
            acc = 0
            for j in range(n):
                if (r >> (n - 1 - j)) & 1:
                    acc ^= other.rows[j]
            out.append(acc)
        return MatGF2(n, tuple(out))

    def rank(self) -> int:
        return _rank(list(self.rows))

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def inverse(self) -> "MatGF2":
        n = self.n
        a = list(self.rows)
        b = list(MatGF2.identity(n).rows)
        for col in range(n):
            bit = 1 << (n - 1 - col)
            piv = next((i for i in range(col, n) if a[i] & bit), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            for i in range(n):
                if i != col and a[i] & bit:
                    a[i] ^= a[col]
                    b[i] ^= b[col]
        return MatGF2(n, tuple(b))

    def apply(self, v: int) -> int:
        """M v for a column vector packed like a row (component 0 on top)."""
        n = self.n
        out = 0
        for r in self.rows:
            out = (out << 1) | (bin(r & v).count("1") & 1)
        return out

    def hex(self) -> str:
        key = 0
        for r in self.rows:
            key = (key << self.n) | r
        return format(key, "x")


def _rank(vecs: list[int]) -> int:
    basis: list[int] = []
    for v in vecs:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def enumerate_gl(n: int, raw: bool = False):
    """Every invertible n x n matrix once: rows chosen lexicographically outside
    the span of the earlier rows.  ``raw`` yields row tuples instead of MatGF2."""
    if n not in GROUP_ORDERS:
        raise ValueError(f"unsupported dimension {n}")
    size = 1 << n

    def rec(rows, span):
        if len(rows) == n:
            yield tuple(rows) if raw else MatGF2(n, tuple(rows))
            return
        for v in range(1, size):
            if v not in span:
                rows.append(v)
                yield from rec(rows, span | {s ^ v for s in span})
                rows.pop()

    yield from rec([], frozenset([0]))


def transvections(n: int) -> list[MatGF2]:
    """Elementary matrices I + E_ij; they generate GL_n(F_2)."""
    out = []
    ident = MatGF2.identity(n).rows
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = list(ident)
                rows[i] ^= 1 << (n - 1 - j)
                out.append(MatGF2(n, tuple(rows)))
    return out


# ---------------------------------------------------------------------------
# Coefficient representations

@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple:
    """Exponent tuples of degree d in n variables, descending lexicographic."""
    out = [e for e in product(range(d, -1, -1), repeat=n) if sum(e) == d]
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    return {e: k for k, e in enumerate(monomials(n, d))}


def word_to_terms(word: int, n: int, d: int) -> list[tuple]:
    mons = monomials(n, d)
    dim = len(mons)
    return [mons[k] for k in range(dim) if (word >> (dim - 1 - k)) & 1]


def terms_to_word(terms, n: int, d: int) -> int:
    idx = monomial_index(n, d)
    dim = len(idx)
    w = 0
    for t in terms:
        w ^= 1 << (dim - 1 - idx[tuple(t)])
    return w


def _expand_product(linear_forms: list[int], n: int) -> dict:
    """Expand a product of linear forms (n-bit masks) into {exponent: 1} over F_2."""
    acc = {(0,) * n: 1}
    for lf in linear_forms:
        nxt: dict = {}
        for e in acc:
            for j in range(n):
                if (lf >> (n - 1 - j)) & 1:
                    f = list(e)
                    f[j] += 1
                    f = tuple(f)
                    if f in nxt:
                        del nxt[f]
                    else:
                        nxt[f] = 1
        acc = nxt
    return acc


class LinearRep:
    """The matrix of ``f -> f(M x)`` on forms of degree d, stored by columns.

    ``columns[k]`` is the word of the image of monomial k.
    """

    def __init__(self, M: MatGF2, degree: int):
        self.M = M
        self.n = M.n
        self.degree = degree
        mons = monomials(M.n, degree)
        self.dim = len(mons)
        cols = []
        for e in mons:
            forms = []
            for i, k in enumerate(e):
                forms.extend([M.rows[i]] * k)
            cols.append(terms_to_word(_expand_product(forms, M.n).keys(), M.n, degree))
        self.columns = tuple(cols)

    def __call__(self, v: int) -> int:
        return act(self, v)

    def matrix(self) -> np.ndarray:
        """dim x dim 0/1 matrix A with word(M.f) = A word(f) (MSB first)."""
        A = np.zeros((self.dim, self.dim), dtype=np.uint8)
        for k, c in enumerate(self.columns):
            for r in range(self.dim):
                A[r, k] = (c >> (self.dim - 1 - r)) & 1
        return A


def act(rep: LinearRep, v: int) -> int:
    dim = rep.dim
    out = 0
    cols = rep.columns
    k = dim - 1
    while v:
        if v & 1:
            out ^= cols[k]
        v >>= 1
        k -= 1
    return out


def chunk_tables(reps, chunk: int = 8) -> np.ndarray:
    """Lookup tables T[g, c, b]: image under reps[g] of byte b placed in chunk c."""
    reps = list(reps)
    dim = reps[0].dim
    nchunks = (dim + chunk - 1) // chunk
    T = np.zeros((len(reps), nchunks, 1 << chunk), dtype=np.uint32)
    for g, rep in enumerate(reps):
        for c in range(nchunks):
            base = np.zeros(1 << chunk, dtype=np.uint32)
            for bit in range(chunk):
                pos = c * chunk + bit
                if pos >= dim:
                    break
                col = rep.columns[dim - 1 - pos]
                idx = np.arange(1 << chunk)
                base ^= np.where((idx >> bit) & 1, np.uint32(col), np.uint32(0))
            T[g, c] = base
    return T


def apply_tables(T: np.ndarray, words: np.ndarray, chunk: int = 8) -> np.ndarray:
    """Images of ``words`` under every rep in T: result shape (len(T), len(words))."""
    words = np.asarray(words, dtype=np.uint32)
    mask = (1 << chunk) - 1
    out = np.zeros((T.shape[0], words.shape[0]), dtype=np.uint32)
    for c in range(T.shape[1]):
        out ^= T[:, c, (words >> (c * chunk)) & mask]
    return out


# ---------------------------------------------------------------------------
# Quadrics in five variables

def quadric_word(text: str) -> int:
    from .multivar import MultiPoly
    return terms_to_word(MultiPoly.parse(text, 5).terms, 5, 2)


def quadric_str(word: int) -> str:
    from .multivar import MultiPoly
    return str(MultiPoly(frozenset(word_to_terms(word, 5, 2)), 5))


# the seven class representatives in their printed normal forms
QUADRIC_CLASS_REPS = {
    1: "X2+XZ+YZ+XT+ZT+TU",
    2: "XY+Y2+Z2+YT+ZT",
    3: "Y2+YZ+Z2+XT+ZT",
    4: "Y2+XZ+YZ",
    5: "Y2",
    6: "X2+XY",
    7: "X2+XY+XT+Y2+YZ+YT+Z2+ZT+T2",
}
IRREDUCIBLE_CLASSES = (1, 2, 3, 4)


class OrbitTable:
    """Orbits of a group (given by generators) on nonzero coefficient words.

    ``label[w]`` is the orbit id (0 for the zero word), ``reps[i]`` the
    representative of orbit i, ``sizes[i]`` its size.  BFS parent links give a
    transporter from the representative to every orbit element.
    """

    def __init__(self, gens: list[MatGF2], degree: int, seeds: list[int], universe: int):
        self.gens = gens
        self.degree = degree
        self.n = gens[0].n
        reps_g = [LinearRep(g, degree) for g in gens]
        self.gen_reps = reps_g
        T = chunk_tables(reps_g)
        allwords = np.arange(universe, dtype=np.uint32)
        images = apply_tables(T, allwords)          # (ngens, universe)
        self.images = images
        label = np.zeros(universe, dtype=np.int16)
        parent = np.full(universe, -1, dtype=np.int64)
        via = np.full(universe, -1, dtype=np.int16)
        reps = [0]
        sizes = [1]
        order = list(seeds) + [w for w in range(1, universe) if w not in set(seeds)]
        for seed in order:
            if label[seed] or seed == 0:
                continue
            oid = len(reps)
            reps.append(seed)
            label[seed] = oid
            queue = deque([seed])
            count = 1
            while queue:
                w = queue.popleft()
                for gi in range(len(gens)):
                    u = int(images[gi, w])
                    if not label[u]:
                        label[u] = oid
                        parent[u] = w
                        via[u] = gi
                        queue.append(u)
                        count += 1
            sizes.append(count)
        self.label = label
        self.parent = parent
        self.via = via
        self.reps = reps
        self.sizes = sizes
        self._stabs: dict = {}

    def orbit_of(self, w: int) -> int:
        return int(self.label[w])

    def orbit_elements(self, oid: int) -> np.ndarray:
        return np.flatnonzero(self.label == oid)

    def transversal(self, w: int) -> MatGF2:
        """A matrix t with t.rep = w (rep = representative of w's orbit)."""
        chain = []
        while self.parent[w] >= 0:
            chain.append(int(self.via[w]))
            w = int(self.parent[w])
        M = MatGF2.identity(self.n)
        # w = act(g_k, ... act(g_1, rep)) corresponds to the product g_1 ... g_k
        for gi in reversed(chain):
            M = M @ self.gens[gi]
        return M

    def transporter(self, s: int, p: int) -> MatGF2 | None:
        if s == 0 or p == 0:
            return MatGF2.identity(self.n) if s == p else None
        if self.label[s] != self.label[p]:
            return None
        M = self.transversal(s).inverse() @ self.transversal(p)
        return M

    def stabilizer(self, oid: int) -> list[MatGF2]:
        if oid not in self._stabs:
            self._stabs[oid] = self._schreier_stabilizer(oid)
        return self._stabs[oid]

    def _schreier_stabilizer(self, oid: int) -> list[MatGF2]:
        rep = self.reps[oid]
        target = gl_order(self.n) // self.sizes[oid]
        group = {MatGF2.identity(self.n)}
        gens: list[MatGF2] = []
        elems = self.orbit_elements(oid)
        cache: dict = {}

        def t(w):
            if w not in cache:
                cache[w] = self.transversal(w)
            return cache[w]

        rng = np.random.default_rng(12345 + oid)
        order = list(elems)
        rng.shuffle(order)
        for w in order:
            w = int(w)
            for gi, g in enumerate(self.gens):
                y = int(self.images[gi, w])
                s = t(w) @ g @ t(y).inverse()
                if s not in group:
                    gens.append(s)
                    group = _closure(group, gens)
                    if len(group) == target:
                        break
            if len(group) == target:
                break
        assert len(group) == target, (len(group), target)
        # generators fixing rep suffice for the whole closure
        for M in gens:
            assert act(LinearRep(M, self.degree), rep) == rep
        return sorted(group, key=lambda M: M.rows)


def _closure(group: set, gens: list[MatGF2]) -> set:
    group = set(group)
    frontier = list(group)
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                C = A @ g
                if C not in group:
                    group.add(C)
                    nxt.append(C)
        frontier = nxt
    return group


@lru_cache(maxsize=None)
def quadric_orbits() -> OrbitTable:
    """The seven GL_5(F_2)-orbits on nonzero quadratic forms, labelled 1..7 in
    the order of :data:`QUADRIC_CLASS_REPS`."""
    seeds = [quadric_word(QUADRIC_CLASS_REPS[i]) for i in range(1, 8)]
    table = OrbitTable(transvections(5), 2, seeds, 1 << 15)
    if len(table.reps) != 8:
        raise AssertionError(f"expected 7 quadric orbits, got {len(table.reps) - 1}")
    return table


# ---------------------------------------------------------------------------
# Small groups: direct enumeration

@lru_cache(maxsize=None)
def gl_list(n: int) -> tuple:
    if n == 5:
        raise ValueError("GL_5 is streamed, not materialized")
    return tuple(enumerate_gl(n))


@lru_cache(maxsize=None)
def gl_reps(n: int, degree: int) -> tuple:
    return tuple(LinearRep(M, degree) for M in gl_list(n))


def _default_degree(n: int) -> int:
    return {5: 2, 3: 5}.get(n, 6)


def stabilizer(v: int, n: int, degree: int | None = None) -> list[MatGF2]:
    """All M in GL_n(F_2) with M.v = v, for forms of the given degree."""
    degree = _default_degree(n) if degree is None else degree
    if n == 5 and degree == 2:
        table = quadric_orbits()
        oid = table.orbit_of(v)
        base = table.stabilizer(oid)
        t = table.transversal(v)
        tinv = t.inverse()
        # Stab(v) = t^-1 Stab(rep) t
        return sorted((tinv @ S @ t for S in base), key=lambda M: M.rows)
    return [rep.M for rep in gl_reps(n, degree) if act(rep, v) == v]


def transporter(s: int, p: int, n: int, degree: int | None = None) -> MatGF2 | None:
    """One M with M.s = p, or None when s and p lie in different orbits."""
    degree = _default_degree(n) if degree is None else degree
    if n == 5 and degree == 2:
        M = quadric_orbits().transporter(s, p)
    else:
        M = next((rep.M for rep in gl_reps(n, degree) if act(rep, s) == p), None)
    if M is not None:
        assert act(LinearRep(M, degree), s) == p
    return M


def all_transporters(s: int, p: int, n: int, degree: int | None = None) -> list[MatGF2]:
    """Every M with M.s = p: the coset M0 Stab(p)."""
    M0 = transporter(s, p, n, degree)
    if M0 is None:
        return []
    return [M0 @ N for N in stabilizer(p, n, degree)]
