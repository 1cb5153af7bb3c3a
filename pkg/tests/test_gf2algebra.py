from hypothesis import given, settings, strategies as st

from conftest import xpoly
from g5census.gf2algebra import (artin_schreier_count, binary_form_resultant, canonical_modulus,
                                 deg, e_degree_profile, e_from_f2, embed, factorize,
                                 is_irreducible, make_field, moebius_action, pdivmod, pgcd,
                                 pgl2, pgl2_stabilizer, pmul, psqrt, psquare, resultant,
                                 roots_in_extension, MoebiusMap)

polys = st.integers(min_value=1, max_value=(1 << 24) - 1)


def test_small_fields():
    assert make_field(1).order == 2
    F = make_field(5)
    assert F.order == 32
    assert all(F.pow(e, 31) == 1 for e in range(1, 32))
    assert canonical_modulus(2) == 0b111


def test_trace_and_artin_schreier():
    F2, F4 = make_field(1), make_field(2)
    assert F2.trace(0) == 0 and F2.trace(1) == 1
    assert artin_schreier_count(0, 1, F4) == 1
    assert artin_schreier_count(1, 1, F2) == 0
    assert artin_schreier_count(1, 0, F4) == 2


@settings(max_examples=200)
@given(st.integers(2, 10), st.data())
def test_artin_schreier_matches_enumeration(k, data):
    F = make_field(k)
    b = data.draw(st.integers(0, F.order - 1))
    c = data.draw(st.integers(0, F.order - 1))
    direct = sum(F.mul(y, y) ^ F.mul(b, y) == c for y in range(F.order))
    assert artin_schreier_count(b, c, F) == direct


@given(st.integers(1, 12), st.data())
def test_field_axioms(k, data):
    F = make_field(k)
    a, b, c = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.square(F.sqrt(a)) == a


def test_moebius_examples():
    ident = pgl2(6)[0]
    assert moebius_action(ident, 0b1011) == 0b1011
    shift = MoebiusMap(1, 1, 0, 1, 6)
    assert moebius_action(shift, xpoly("x^3+x+1")) == xpoly("x^3+x^2+1")
    swap = MoebiusMap(0, 1, 1, 0, 6)
    assert moebius_action(swap, xpoly("x")) == xpoly("x^5")


def test_pgl2_stabilizers():
    for f in range(1, 128):
        assert pgl2(6)[0] in pgl2_stabilizer(f, 6)
    stab = pgl2_stabilizer(1, 6)
    assert len(stab) == 2 and all(A.c == 0 for A in stab)
    assert MoebiusMap(1, 1, 0, 1, 6) in pgl2_stabilizer(xpoly("x^2+x"), 6)


def test_factorization_examples():
    assert factorize(xpoly("x^2+x")) == [(2, 1), (3, 1)]
    assert is_irreducible(xpoly("x^2+x+1"))
    assert is_irreducible(xpoly("x^6+x^3+1"))
    assert roots_in_extension(xpoly("x^2+x+1"), 1) == []
    assert len(roots_in_extension(xpoly("x^2+x+1"), 2)) == 2
    assert len(roots_in_extension(xpoly("x^5+x^3+1"), 5)) == 5


@settings(max_examples=100)
@given(polys)
def test_factorization_reconstructs(f):
    prod = 1
    for h, m in factorize(f):
        assert is_irreducible(h)
        for _ in range(m):
            prod = pmul(prod, h)
    assert prod == f


@given(polys, polys)
def test_division_and_gcd(a, b):
    q, r = pdivmod(a, b)
    assert pmul(q, b) ^ r == a and deg(r) < deg(b)
    g = pgcd(a, b)
    assert pdivmod(a, g)[1] == 0 and pdivmod(b, g)[1] == 0
    assert psqrt(psquare(a)) == a


@settings(max_examples=50)
@given(st.integers(2, (1 << 9) - 1), st.integers(1, 6))
def test_degree_profile_matches_factorization(f, k):
    F = make_field(k)
    prof = e_degree_profile(e_from_f2(f), F)
    expect = {}
    from math import gcd
    for h, _ in factorize(f):
        d = deg(h)
        m, c = d // gcd(d, k), gcd(d, k)
        expect[m] = expect.get(m, 0) + c
    assert prof == expect


def test_embedding_is_a_homomorphism():
    small, big = make_field(3), make_field(6)
    for a in range(8):
        for b in range(8):
            assert embed(small.mul(a, b), 3, 6) == big.mul(embed(a, 3, 6), embed(b, 3, 6))


def test_resultants():
    # Res_Y(X^2 + Y^2, XY) = X^4; bit i is the coefficient of X^i Y^(d-i)
    assert binary_form_resultant((2, 0b101), (2, 0b010)) == (4, 1 << 4)
    assert resultant([0, 1], [1]) == 1
    # common factor z + t
    assert resultant([0b10, 1], pmul_list([0b10, 1], [1, 0, 1])) == 0


def pmul_list(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] ^= pmul(a, b)
    return out
