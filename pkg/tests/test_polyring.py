from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcert.fields import PrimeField, QQ, field_from_descriptor, is_prime
from nilcert.parsing import PolynomialSyntaxError, UnknownVariableError, parse_polynomial
from nilcert.polyring import MonomialOrder, PolyRing, monomials_of_weighted_degree

GF = PrimeField(32003)


# --- coefficients ------------------------------------------------------------


@given(st.integers(1, 32002))
@settings(max_examples=1000)
def test_prime_field_inverse(a):
    assert GF.normalize(a * GF.inv(a)) == 1


@given(st.fractions().filter(lambda q: q != 0))
def test_rational_inverse_and_normal_form(q):
    assert q * QQ.inv(q) == 1
    assert q.denominator > 0
    assert Fraction(q.numerator, q.denominator) == q


def test_field_errors():
    with pytest.raises(ZeroDivisionError):
        GF.inv(0)
    with pytest.raises(ValueError):
        PrimeField(32001)
    assert is_prime(32003) and not is_prime(1)
    assert field_from_descriptor("fp:101") == PrimeField(101)
    assert field_from_descriptor("q") == QQ
    with pytest.raises(ValueError):
        field_from_descriptor("r")


# --- monomial orders ---------------------------------------------------------

exps = st.tuples(*[st.integers(0, 6)] * 4)
ORDERS = [
    MonomialOrder("lex"),
    MonomialOrder("grevlex"),
    MonomialOrder("weighted", weights=(3, 8, 7, 1)),
    MonomialOrder("block", block=2),
]


@pytest.mark.parametrize("order", ORDERS, ids=str)
@given(a=exps, b=exps, c=exps)
def test_order_axioms(order, a, b, c):
    key = order.keyfunc()
    ka, kb = key(a), key(b)
    assert sum([ka < kb, ka == kb, kb < ka]) == 1
    assert (ka == kb) == (a == b)
    mul = lambda u, v: tuple(x + y for x, y in zip(u, v))
    if ka < kb:
        assert key(mul(a, c)) < key(mul(b, c))
    assert key((0, 0, 0, 0)) <= ka


def test_grevlex_examples():
    key = MonomialOrder("grevlex").keyfunc()
    # x^2*y vs z^2: degree wins; x*z vs y^2: grevlex prefers y^2
    assert key((2, 1, 0)) > key((0, 0, 2))
    assert key((0, 2, 0)) > key((1, 0, 1))


# --- arithmetic --------------------------------------------------------------


def test_add_examples(Rxyz):
    R = Rxyz
    assert R("x+y") + R("x-y") == R("2*x")
    p = R("x^2 - 3*y*z + 1/2")
    assert p + R.zero == p
    assert R("x^2") + R("-x^2") == R.zero
    assert (R("x^2") + R("-x^2")).terms() == []


def test_mul_examples():
    R = PolyRing("x v")
    assert R("x+v") * R("x-v") == R("x^2 - v^2")
    assert R("x^2") * R("x + v^3") == R("x^3 + x^2*v^3")
    p = R("3*x*v - 2")
    assert p * 1 == p and p * R.one == p


def test_ring_mismatch():
    with pytest.raises(ValueError):
        PolyRing("x y")("x") + PolyRing("x z")("x")


def test_terms_sorted_descending(Rxyz):
    p = Rxyz("z^2 - x^2*y + 4*x + 7")
    assert [e for e, _ in p.terms()] == [(2, 1, 0), (0, 0, 2), (1, 0, 0), (0, 0, 0)]


# --- parser ------------------------------------------------------------------


def test_parse_examples(Rxyz):
    R2 = PolyRing("x y")
    p = parse_polynomial("x^2 - y", R2)
    assert p.as_dict() == {(2, 0): 1, (0, 1): -1}
    assert parse_polynomial("0", Rxyz).terms() == []
    x, y, z = Rxyz.gens()
    assert parse_polynomial("z^2 - x^2*y", Rxyz) == z**2 - x**2 * y
    assert parse_polynomial("  3/6*x*x ", Rxyz) == Fraction(1, 2) * x**2


def test_parse_errors(Rxyz):
    with pytest.raises(UnknownVariableError) as e:
        parse_polynomial("x + w", Rxyz)
    assert e.value.position == 4
    for bad in ("x +", "x ** 2", "2 x", "x^y", "(x)", "1/0", ""):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial(bad, Rxyz)


def test_prime_field_printing():
    R = PolyRing("x y", GF)
    p = R("x - y + 1/2")
    assert str(p) == "x - y - 16001"  # 1/2 = 16002 = -16001 mod 32003
    assert R(str(p)) == p


coeffs = st.fractions(max_denominator=20).filter(lambda q: abs(q.numerator) < 10**6)
small_exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
poly_dicts = st.dictionaries(small_exps, coeffs, max_size=6)


@given(poly_dicts)
def test_parse_format_round_trip(d):
    R = PolyRing("x y z")
    p = R.from_dict(d)
    assert R(str(p)) == p


@given(st.dictionaries(small_exps, st.integers(0, 32002), max_size=6))
def test_parse_format_round_trip_mod_p(d):
    R = PolyRing("x y z", GF)
    p = R.from_dict(d)
    assert R(str(p)) == p


@given(poly_dicts, poly_dicts, poly_dicts)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    R = PolyRing("x y z")
    p, q, r = R.from_dict(a), R.from_dict(b), R.from_dict(c)
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == R.zero


# --- substitution and grading --------------------------------------------------


def test_substitute_examples(Rxyz):
    T = PolyRing("t")
    t = T.var("t")
    images = {"x": t**3, "y": t**8, "z": t**7}
    assert Rxyz("z^2 - x^2*y").substitute(images) == T.zero
    assert Rxyz("x").substitute({"x": Rxyz("x")}) == Rxyz("x")
    R = PolyRing("x y z v")
    x, y, z, v = R.gens()
    b0 = 1
    third_row = x ** (b0 + 2) + v * y
    img = third_row.substitute({"x": x, "y": v**2 * x ** (b0 + 1), "z": z, "v": v})
    assert img == x ** (b0 + 1) * (x + v**3)
    with pytest.raises(KeyError):
        Rxyz("x*y").substitute({"x": t})


@given(poly_dicts, poly_dicts)
@settings(max_examples=40)
def test_substitute_is_homomorphism(a, b):
    R = PolyRing("x y z")
    S = PolyRing("s t")
    s, t = S.gens()
    images = {"x": s + t, "y": s * t - 1, "z": t**2}
    p, q = R.from_dict(a), R.from_dict(b)
    assert (p * q).substitute(images, S) == p.substitute(images, S) * q.substitute(images, S)
    assert (p + q).substitute(images, S) == p.substitute(images, S) + q.substitute(images, S)


def test_weighted_degree(Rxyz):
    w = (3, 8, 7)
    assert Rxyz("y^2 - x^3*z").weighted_degree(w) == 16
    assert Rxyz("x").weighted_degree(w) == 3
    assert Rxyz("x + y").weighted_degree(w) is None
    with pytest.raises(ValueError):
        Rxyz.zero.weighted_degree(w)


def test_monomials_of_weighted_degree():
    w = (3, 8, 7)
    for n in range(30):
        got = set(monomials_of_weighted_degree(w, n))
        brute = {
            (a, b, c)
            for a in range(11)
            for b in range(4)
            for c in range(5)
            if 3 * a + 8 * b + 7 * c == n
        }
        assert got == brute


def test_ring_validation():
    with pytest.raises(ValueError):
        PolyRing("x x")
    with pytest.raises(ValueError):
        PolyRing("x y", weights=(1,))
    with pytest.raises(ValueError):
        MonomialOrder("weird")
