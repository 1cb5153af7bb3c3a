"""Arithmetic over F_2 and the towers F_{2^k}.

Polynomials over F_2 are plain Python ints: bit ``i`` is the coefficient of
``x**i``.  Elements of F_{2^k} are k-bit ints relative to a :class:`FieldCtx`.
Polynomials over F_{2^k} are lists of field elements, constant term first,
with no trailing zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

MAX_EXTENSION = 20


# ---------------------------------------------------------------------------
# F_2[x] on ints

def deg(f: int) -> int:
    """Degree of ``f``; the zero polynomial has degree -1."""
    return f.bit_length() - 1


def pmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def pmod(a: int, b: int) -> int:
    db = b.bit_length()
    if db == 0:
        raise ZeroDivisionError("polynomial division by zero")
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def pdiv_exact(a: int, b: int) -> int:
    q, r = pdivmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def psquare(a: int) -> int:
    """Square in characteristic 2: spread the bits."""
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << (2 * i)
        a >>= 1
        i += 1
    return r


def psqrt(a: int) -> int:
    """Square root of a polynomial that is a perfect square."""
    r = 0
    i = 0
    while a:
        if a & 1:
            if i & 1:
                raise ValueError("not a square")
            r |= 1 << (i // 2)
        a >>= 1
        i += 1
    return r


def pderiv(f: int) -> int:
    # d/dx x^i = i x^(i-1): only odd exponents survive
    return (f >> 1) & 0x5555555555555555555555555555555555555555555555555555555555555555 \
        if f.bit_length() <= 256 else _pderiv_long(f)


def _pderiv_long(f: int) -> int:
    r = 0
    i = 1
    f >>= 1
    while f:
        if f & 1 and (i & 1):
            r |= 1 << (i - 1)
        f >>= 1
        i += 1
    return r


def pmulmod(a: int, b: int, m: int) -> int:
    return pmod(pmul(a, b), m)


def ppowmod(a: int, e: int, m: int) -> int:
    r = 1
    a = pmod(a, m)
    while e:
        if e & 1:
            r = pmulmod(r, a, m)
        a = pmulmod(a, a, m)
        e >>= 1
    return pmod(r, m)


def frobenius_power(m: int, k: int) -> int:
    """x^(2^k) mod m by k modular squarings."""
    h = pmod(2, m)
    for _ in range(k):
        h = pmod(psquare(h), m)
    return h


def peval(f: int, x: int, ctx: "FieldCtx") -> int:
    """Evaluate an F_2 polynomial at a field element (Horner)."""
    r = 0
    for i in range(deg(f), -1, -1):
        r = ctx.mul(r, x)
        if (f >> i) & 1:
            r ^= 1
    return r


def is_irreducible(f: int) -> bool:
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    # Rabin: x^(2^n) = x mod f and gcd(x^(2^(n/p)) - x, f) = 1 for primes p | n
    if frobenius_power(f, n) != 2:
        return False
    for p in _prime_divisors(n):
        if pgcd(f, frobenius_power(f, n // p) ^ 2) != 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def squarefree_decomposition(f: int) -> list[tuple[int, int]]:
    """Pairs (g, m) with f = prod g^m, each g squarefree and pairwise coprime."""
    if f == 0:
        raise ValueError("zero polynomial")
    out: list[tuple[int, int]] = []
    g = pgcd(f, pderiv(f))
    w = pdiv_exact(f, g)
    i = 1
    while w != 1:
        y = pgcd(w, g)
        z = pdiv_exact(w, y)
        if z != 1:
            out.append((z, i))
        i += 1
        w = y
        g = pdiv_exact(g, y)
    if g != 1:
        # the remaining cofactor is a perfect square
        for h, m in squarefree_decomposition(psqrt(g)):
            out.append((h, 2 * m))
    return out


def distinct_degree(f: int) -> list[tuple[int, int]]:
    """Split a squarefree f into (product of all irreducible factors of degree d, d)."""
    out = []
    h = 2
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = pmod(psquare(h), f)
        g = pgcd(f, h ^ 2)
        if g != 1:
            out.append((g, d))
            f = pdiv_exact(f, g)
            h = pmod(h, f)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def equal_degree(f: int, d: int, rng: random.Random) -> list[int]:
    """Split a product of distinct irreducibles of degree d (trace splitting)."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = rng.getrandbits(n) | 2
        a = pmod(a, f)
        t = a
        s = a
        for _ in range(d - 1):
            s = pmod(psquare(s), f)
            t ^= s
        g = pgcd(f, t)
        if 0 < deg(g) < n:
            return equal_degree(g, d, rng) + equal_degree(pdiv_exact(f, g), d, rng)


def factorize(f: int, seed: int = 0) -> list[tuple[int, int]]:
    """Irreducible factorization over F_2 as sorted (factor, multiplicity) pairs."""
    if f == 0:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out.append((irr, m))
    out.sort()
    return out


def poly_to_hex(f: int) -> str:
    return format(f, "x")


def poly_from_hex(s: str) -> int:
    return int(s, 16)


def poly_str(f: int, var: str = "x") -> str:
    if f == 0:
        return "0"
    terms = []
    for i in range(deg(f), -1, -1):
        if (f >> i) & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)


# ---------------------------------------------------------------------------
# F_{2^k}

@lru_cache(maxsize=None)
def canonical_modulus(k: int) -> int:
    """Lowest-weight irreducible of degree k, numerically least among those."""
    if not 1 <= k <= MAX_EXTENSION:
        raise ValueError(f"extension degree {k} out of range 1..{MAX_EXTENSION}")
    if k == 1:
        return 0b10
    top = 1 << k
    for weight in range(3, k + 2, 2):
        cands = []
        _middle_terms(k, weight - 2, cands)
        for mid in sorted(cands):
            f = top | mid | 1
            if is_irreducible(f):
                return f
    raise AssertionError("no irreducible found")  # unreachable


def _middle_terms(k: int, count: int, out: list[int], lo: int = 1, acc: int = 0) -> None:
    if count == 0:
        out.append(acc)
        return
    for i in range(lo, k):
        _middle_terms(k, count - 1, out, i + 1, acc | (1 << i))


class FieldCtx:
    """The field F_{2^k} with a fixed canonical modulus."""

    def __init__(self, k: int):
        self.k = k
        self.modulus = canonical_modulus(k)
        self.order = 1 << k
        self._log = None
        self._exp = None
        if k <= 16:
            self._build_tables()

    def __repr__(self):
        return f"FieldCtx(k={self.k}, modulus={poly_str(self.modulus)})"

    def __reduce__(self):
        return (make_field, (self.k,))

    def _build_tables(self):
        n = self.order - 1
        if n == 1:
            self._exp = [1, 1]
            self._log = [0, 0]
            return
        # find a generator of the multiplicative group
        primes = _prime_divisors(n)
        g = 2 if self.k > 1 else 1
        while True:
            if all(self._slow_pow(g, n // p) != 1 for p in primes):
                break
            g += 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log

    def _slow_mul(self, a: int, b: int) -> int:
        return pmod(pmul(a, b), self.modulus)

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def elements(self):
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            n = self.order - 1
            return self._exp[(n - self._log[a]) % n]
        return self._slow_pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._exp is not None:
            n = self.order - 1
            return self._exp[(self._log[a] * e) % n]
        return self._slow_pow(a, e)

    def sqrt(self, a: int) -> int:
        # inverse Frobenius: a^(2^(k-1))
        for _ in range(self.k - 1):
            a = self.mul(a, a)
        return a

    def trace(self, a: int) -> int:
        t = a
        s = a
        for _ in range(self.k - 1):
            s = self.mul(s, s)
            t ^= s
        assert t in (0, 1)
        return t


@lru_cache(maxsize=None)
def make_field(k: int) -> FieldCtx:
    if not 1 <= k <= MAX_EXTENSION:
        raise ValueError(f"extension degree {k} out of range 1..{MAX_EXTENSION}")
    return FieldCtx(k)


def trace(e: int, ctx: FieldCtx) -> int:
    return ctx.trace(e)


def artin_schreier_count(b: int, c: int, ctx: FieldCtx) -> int:
    """Number of y in the field with y^2 + b*y = c."""
    if b == 0:
        return 1
    return 2 if ctx.trace(ctx.div(c, ctx.mul(b, b))) == 0 else 0


def artin_schreier_solve(b: int, c: int, ctx: FieldCtx) -> list[int]:
    if b == 0:
        return [ctx.sqrt(c)]
    # y = b*z with z^2 + z = c/b^2
    u = ctx.div(c, ctx.mul(b, b))
    if ctx.trace(u) != 0:
        return []
    z = _half_trace_solve(u, ctx)
    return sorted([ctx.mul(b, z), ctx.mul(b, z ^ 1)])


def _half_trace_solve(u: int, ctx: FieldCtx) -> int:
    k = ctx.k
    if k & 1:
        # half trace: sum of u^(4^i), i = 0..(k-1)/2
        z = 0
        s = u
        for _ in range((k + 1) // 2):
            z ^= s
            s = ctx.mul(ctx.mul(s, s), ctx.mul(s, s))
        return z
    # even degree: z = sum_{i<j} w^(2^i) u^(2^j) for any w of trace 1
    w = next(x for x in range(1, ctx.order) if ctx.trace(x) == 1)
    z = 0
    wpow = [w]
    upow = [u]
    for _ in range(k - 1):
        wpow.append(ctx.mul(wpow[-1], wpow[-1]))
        upow.append(ctx.mul(upow[-1], upow[-1]))
    for j in range(1, k):
        acc = 0
        for i in range(j):
            acc ^= wpow[i]
        z ^= ctx.mul(acc, upow[j])
    return z


# ---------------------------------------------------------------------------
# Polynomials over F_{2^k}: lists, constant term first

def e_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def e_from_f2(f: int) -> list[int]:
    return [(f >> i) & 1 for i in range(deg(f) + 1)]


def e_add(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    r = list(f)
    for i, c in enumerate(g):
        r[i] ^= c
    return e_trim(r)


def e_mul(f: list[int], g: list[int], ctx: FieldCtx) -> list[int]:
    if not f or not g:
        return []
    r = [0] * (len(f) + len(g) - 1)
    mul = ctx.mul
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    r[i + j] ^= mul(a, b)
    return e_trim(r)


def e_scale(f: list[int], c: int, ctx: FieldCtx) -> list[int]:
    return e_trim([ctx.mul(a, c) for a in f])


def e_divmod(f: list[int], g: list[int], ctx: FieldCtx) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return [], r
    inv = ctx.inv(g[-1])
    q = [0] * (len(r) - dg)
    mul = ctx.mul
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = mul(c, inv)
            q[i - dg] = c
            for j, b in enumerate(g):
                if b:
                    r[i - dg + j] ^= mul(c, b)
    return e_trim(q), e_trim(r[:dg])


def e_mod(f: list[int], g: list[int], ctx: FieldCtx) -> list[int]:
    return e_divmod(f, g, ctx)[1]


def e_monic(f: list[int], ctx: FieldCtx) -> list[int]:
    if not f or f[-1] == 1:
        return list(f)
    return e_scale(f, ctx.inv(f[-1]), ctx)


def e_gcd(f: list[int], g: list[int], ctx: FieldCtx) -> list[int]:
    f, g = e_trim(list(f)), e_trim(list(g))
    while g:
        f, g = g, e_mod(f, g, ctx)
    return e_monic(f, ctx)


def e_eval(f: list[int], x: int, ctx: FieldCtx) -> int:
    r = 0
    for c in reversed(f):
        r = ctx.mul(r, x) ^ c
    return r


def e_square_mod(f: list[int], m: list[int], ctx: FieldCtx) -> list[int]:
    sq = [0] * (2 * len(f))
    for i, c in enumerate(f):
        if c:
            sq[2 * i] = ctx.mul(c, c)
    return e_mod(e_trim(sq), m, ctx)


def e_frobenius_power(m: list[int], t: int, ctx: FieldCtx) -> list[int]:
    """z^(2^t) modulo m."""
    h = e_mod([0, 1], m, ctx)
    for _ in range(t):
        h = e_square_mod(h, m, ctx)
    return h


def e_degree_profile(f: list[int], ctx: FieldCtx) -> dict[int, int]:
    """Counts of distinct monic irreducible factors of f over ctx, by degree."""
    f = e_monic(e_trim(list(f)), ctx)
    n = len(f) - 1
    if n < 1:
        return {}
    counts: dict[int, int] = {}
    h = e_mod([0, 1], f, ctx)
    for m in range(1, n + 1):
        for _ in range(ctx.k):
            h = e_square_mod(h, f, ctx)
        g = e_gcd(f, e_add(h, [0, 1]), ctx)
        # deg(g) = sum over divisors d | m of d * counts[d]
        rest = len(g) - 1 - sum(d * c for d, c in counts.items() if m % d == 0)
        if rest:
            counts[m] = rest // m
    return counts


def e_roots(f: list[int], ctx: FieldCtx, seed: int = 0) -> list[int]:
    """All distinct roots of f lying in ctx."""
    f = e_trim(list(f))
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    if len(f) == 1:
        return []
    f = e_monic(f, ctx)
    g = e_gcd(f, e_add(e_frobenius_power(f, ctx.k, ctx), [0, 1]), ctx)
    rng = random.Random(seed)
    out: list[int] = []
    _e_split_linear(g, ctx, rng, out)
    return sorted(out)


def _e_split_linear(g: list[int], ctx: FieldCtx, rng: random.Random, out: list[int]) -> None:
    n = len(g) - 1
    if n <= 0:
        return
    if n == 1:
        out.append(g[0])  # monic z + c has root c
        return
    while True:
        delta = rng.randrange(1, ctx.order)
        a = e_mod([0, delta], g, ctx)
        t = a
        s = a
        for _ in range(ctx.k - 1):
            s = e_square_mod(s, g, ctx)
            t = e_add(t, s)
        h = e_gcd(g, t, ctx)
        if 0 < len(h) - 1 < n:
            _e_split_linear(h, ctx, rng, out)
            _e_split_linear(e_divmod(g, h, ctx)[0], ctx, rng, out)
            return


def roots_in_extension(f: int, k: int) -> list[int]:
    """Roots in F_{2^k} of an F_2 polynomial, in the canonical model of that field."""
    if f == 0:
        raise ValueError("zero polynomial")
    return e_roots(e_from_f2(f), make_field(k))


@lru_cache(maxsize=None)
def _embedding_table(a: int, b: int) -> tuple[int, ...]:
    if b % a:
        raise ValueError(f"F_2^{a} does not embed in F_2^{b}")
    small = make_field(a)
    big = make_field(b)
    root = roots_in_extension(small.modulus, b)[0]
    images = []
    p = 1
    for _ in range(a):
        images.append(p)
        p = big.mul(p, root)
    return tuple(images)


def embed(e: int, a: int, b: int) -> int:
    """Image of e in F_{2^a} under the fixed embedding into F_{2^b}."""
    basis = _embedding_table(a, b)
    r = 0
    i = 0
    while e:
        if e & 1:
            r ^= basis[i]
        e >>= 1
        i += 1
    return r


# ---------------------------------------------------------------------------
# PGL_2(F_2) acting on F_2[x]_n

@dataclass(frozen=True)
class MoebiusMap:
    """x -> (a x + b) / (c x + d) acting with weight n."""

    a: int
    b: int
    c: int
    d: int
    n: int = 6

    def __post_init__(self):
        if (self.a & self.d) ^ (self.b & self.c) != 1:
            raise ValueError("singular matrix")

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """Matrix product self * other."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return MoebiusMap((a & e) ^ (b & g), (a & f) ^ (b & h),
                          (c & e) ^ (d & g), (c & f) ^ (d & h), self.n)

    def with_weight(self, n: int) -> "MoebiusMap":
        return MoebiusMap(self.a, self.b, self.c, self.d, n)

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)


def pgl2(n: int = 6) -> list[MoebiusMap]:
    """The six elements of PGL_2(F_2), identity first."""
    out = []
    for a, b, c, d in [(1, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, 0),
                       (1, 0, 1, 1), (0, 1, 1, 1), (1, 1, 1, 0)]:
        out.append(MoebiusMap(a, b, c, d, n))
    return out


@lru_cache(maxsize=None)
def _moebius_basis(a: int, b: int, c: int, d: int, n: int) -> tuple[int, ...]:
    num = (a << 1) | b      # a x + b
    den = (c << 1) | d      # c x + d
    out = []
    for i in range(n + 1):
        term = 1
        for _ in range(i):
            term = pmul(term, num)
        for _ in range(n - i):
            term = pmul(term, den)
        out.append(term)
    return tuple(out)


def moebius_action(A: MoebiusMap, f: int) -> int:
    """(c x + d)^n f((a x + b)/(c x + d))."""
    if deg(f) > A.n:
        raise ValueError(f"degree {deg(f)} exceeds weight {A.n}")
    basis = _moebius_basis(A.a, A.b, A.c, A.d, A.n)
    r = 0
    i = 0
    while f:
        if f & 1:
            r ^= basis[i]
        f >>= 1
        i += 1
    return r


def pgl2_stabilizer(f: int, n: int) -> list[MoebiusMap]:
    return [A for A in pgl2(n) if moebius_action(A, f) == f]


# ---------------------------------------------------------------------------
# Resultants

def resultant(f: list[int], g: list[int]) -> int:
    """Sylvester resultant of two polynomials in z whose coefficients lie in F_2[t].

    ``f`` and ``g`` are lists of int-encoded F_2[t] coefficients, constant
    term first; the actual degrees (trailing zeros stripped) are used.
    """
    f = list(f)
    g = list(g)
    while f and f[-1] == 0:
        f.pop()
    while g and g[-1] == 0:
        g.pop()
    if not f or not g:
        return 0
    m = len(f) - 1
    n = len(g) - 1
    if m == 0:
        return _ppow(f[0], n)
    if n == 0:
        return _ppow(g[0], m)
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows)


def _ppow(a: int, e: int) -> int:
    r = 1
    for _ in range(e):
        r = pmul(r, a)
    return r


def _bareiss_det(M: list[list[int]]) -> int:
    n = len(M)
    M = [list(r) for r in M]
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i = M[i]
            row_k = M[k]
            for j in range(k + 1, n):
                v = pmul(row_i[j], pivot) ^ pmul(mik, row_k[j])
                row_i[j] = pdiv_exact(v, prev) if prev != 1 else v
            row_i[k] = 0
        prev = pivot
    return M[n - 1][n - 1]


def binary_form_resultant(F: tuple[int, int], G: tuple[int, int]) -> tuple[int, int]:
    """Res_Y of two binary forms, each given as (degree, bits) with bit i the
    coefficient of X^i Y^(d-i).  Returns the result as a form (degree, bits)
    in X alone (so bits is either 0 or a single power of X)."""
    (df, bf), (dg, bg) = F, G
    # coefficient of Y^j is X^(d-j) when bit d-j is set
    fz = [(1 << (df - j)) if (bf >> (df - j)) & 1 else 0 for j in range(df + 1)]
    gz = [(1 << (dg - j)) if (bg >> (dg - j)) & 1 else 0 for j in range(dg + 1)]
    return df * dg, resultant(fz, gz)
