from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_fractions
from zetaequiv.poly import (
    ONE,
    ZERO,
    FINGERPRINT_PRIME,
    Poly,
    adjugate_char_matrix,
    char_matrix,
    charpoly,
    det_cofactor,
    det_fraction_free,
    det_mod,
    fingerprint,
    fingerprint_points,
    identity,
    mat_mul,
    parse_poly,
    var,
)

x, uu, ud, tu = var("x"), var("uu"), var("ud"), var("tu")
NAMES = ("x", "tu", "uu", "ud")


@st.composite
def polys(draw, max_terms: int = 4, max_exp: int = 2):
    terms = draw(st.lists(
        st.tuples(st.tuples(*[st.integers(0, max_exp)] * len(NAMES)), st.integers(-4, 4)),
        max_size=max_terms))
    p = ZERO
    for exps, c in terms:
        mono = Poly.const(c)
        for name, e in zip(NAMES, exps):
            mono = mono * var(name) ** e
        p = p + mono
    return p


def to_sympy(p: Poly):
    return sympy.sympify(p.to_text().replace("^", "**")) if p else sympy.Integer(0)


def test_trivial_examples():
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert (x + uu) + ZERO == x + uu
    assert (uu * ud) * (uu * ud) == uu ** 2 * ud ** 2
    assert (x - x).is_zero()


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p
    assert p - p == ZERO
    assert p * ONE == p


@given(polys(), polys(), st.fixed_dictionaries({n: small_fractions() for n in NAMES}))
@settings(max_examples=60, deadline=None)
def test_eval_is_homomorphism(p, q, point):
    assert (p * q).eval(point) == p.eval(point) * q.eval(point)
    assert (p + q).eval(point) == p.eval(point) + q.eval(point)


@given(polys(), st.fixed_dictionaries({n: small_fractions() for n in NAMES}))
@settings(max_examples=40, deadline=None)
def test_eval_matches_sympy(p, point):
    expr = to_sympy(p)
    want = expr.subs({sympy.Symbol(k): sympy.Rational(v.numerator, v.denominator) for k, v in point.items()})
    assert p.eval(point) == Fraction(int(sympy.numer(want)), int(sympy.denom(want)))


def test_eval_examples():
    assert (x ** 2 - uu * ud).eval({"x": 3, "uu": 2, "ud": 1}) == 7
    assert Poly.const(5).eval({}) == 5
    with pytest.raises((KeyError, ValueError)):
        (x + uu).eval({"x": 1})


@given(polys())
@settings(max_examples=60, deadline=None)
def test_text_round_trip(p):
    assert parse_poly(p.to_text()) == p


def test_canonical_text_form():
    assert (x ** 2 - uu * ud).to_text() == "x^2 - 1*uu*ud"
    assert (Fraction(1, 2) * x).to_text().startswith("1/2")


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_divexact_inverts_multiplication(p, q):
    if not q:
        return
    assert (p * q).divexact(q) == p


def test_determinant_examples():
    assert det_fraction_free([[x, uu], [ud, x]]) == x ** 2 - uu * ud
    assert det_fraction_free(identity(3)) == ONE
    assert det_fraction_free([]) == ONE
    with pytest.raises(ValueError):
        det_fraction_free([[x, uu]])


@st.composite
def poly_matrices(draw, max_size: int = 5):
    k = draw(st.integers(1, max_size))
    return [[draw(polys(max_terms=2, max_exp=1)) for _ in range(k)] for _ in range(k)]


@given(poly_matrices())
@settings(max_examples=40, deadline=None)
def test_bareiss_matches_cofactor(m):
    assert det_fraction_free(m) == det_cofactor(m)


@given(poly_matrices(max_size=4))
@settings(max_examples=25, deadline=None)
def test_bareiss_matches_sympy(m):
    sm = sympy.Matrix([[to_sympy(e) for e in row] for row in m])
    assert sympy.expand(to_sympy(det_fraction_free(m)) - sm.det(method="berkowitz")) == 0


int_matrices = st.integers(1, 6).flatmap(
    lambda k: st.lists(st.lists(st.integers(-2, 2), min_size=k, max_size=k), min_size=k, max_size=k))


@given(int_matrices)
@settings(max_examples=40, deadline=None)
def test_adjugate_identity(a):
    k = len(a)
    chi = charpoly(a)
    prod = mat_mul(char_matrix(a), adjugate_char_matrix(a))
    assert all(prod[i][j] == (chi if i == j else ZERO) for i in range(k) for j in range(k))


@given(int_matrices)
@settings(max_examples=30, deadline=None)
def test_charpoly_matches_sympy(a):
    want = sympy.Matrix(a).charpoly(sympy.Symbol("x")).as_expr()
    assert sympy.expand(to_sympy(charpoly(a)) - want) == 0
    assert charpoly(a) == det_fraction_free(char_matrix(a))


def test_adjugate_examples():
    assert adjugate_char_matrix([[0]]) == [[ONE]]
    assert adjugate_char_matrix([[0, 0], [0, 0]]) == [[x, ZERO], [ZERO, x]]
    path = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    adj = adjugate_char_matrix(path)
    assert adj[0][2] == ONE
    assert adj[0][0] == x ** 2 - 1


def test_fingerprint_determinism():
    p = (x + uu) ** 3
    q = x ** 3 + 3 * x ** 2 * uu + 3 * x * uu ** 2 + uu ** 3
    assert fingerprint(p, 7) == fingerprint(p, 7)
    assert fingerprint(p, 7) == fingerprint(q, 7)
    assert fingerprint(p, 7) != fingerprint(p + 1, 7)


def test_fingerprint_no_collisions():
    import random

    rng = random.Random(5)
    seen: dict[int, Poly] = {}
    for _ in range(10_000):
        p = ZERO
        for _ in range(rng.randint(1, 4)):
            p = p + rng.randint(-9, 9) * x ** rng.randint(0, 3) * uu ** rng.randint(0, 3) * tu ** rng.randint(0, 2)
        fp = fingerprint(p, 11)
        if fp in seen:
            assert seen[fp] == p
        seen[fp] = p


def test_det_mod_agrees_with_exact():
    import random

    rng = random.Random(3)
    for _ in range(50):
        k = rng.randint(1, 6)
        m = [[rng.randint(-50, 50) for _ in range(k)] for _ in range(k)]
        assert det_mod(m) == int(det_cofactor(m).constant_term()) % FINGERPRINT_PRIME
    assert len(fingerprint_points(1, 3)) == 3
