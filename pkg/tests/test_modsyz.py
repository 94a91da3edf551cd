import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcert.fields import PrimeField
from nilcert.groebner import Ideal, ideal_equal
from nilcert.modsyz import (
    ModulePresentation,
    PolyMatrix,
    SyzygyModule,
    column_module,
    compose_is_zero,
    maximal_minors,
    module_spans_equal,
    presentation_chart,
    syzygies,
)
from nilcert.polyring import PolyRing

from oracles import random_poly


def matrix_A(R, b0):
    x, y, z = R.gens()
    return PolyMatrix(R, ((z, x ** (b0 + 1)), (y, z), (x ** (b0 + 2), y)))


def test_maximal_minors_b0_1(Rxyz):
    # m_i deletes row i, so B = (m1, -m2, m3) kills A by Laplace expansion
    m = maximal_minors(matrix_A(Rxyz, 1))
    assert m == [Rxyz("y^2 - x^3*z"), Rxyz("y*z - x^5"), Rxyz("z^2 - x^2*y")]


def test_maximal_minors_b0_2(Rxyz):
    m = maximal_minors(matrix_A(Rxyz, 2))
    assert m == [Rxyz("y^2 - x^4*z"), Rxyz("y*z - x^7"), Rxyz("z^2 - x^3*y")]


def test_maximal_minors_small(Rxyz):
    x, y, _ = Rxyz.gens()
    # deleting row 0 leaves (y), deleting row 1 leaves (x)
    assert maximal_minors(PolyMatrix(Rxyz, ((x,), (y,)))) == [y, x]
    with pytest.raises(ValueError):
        maximal_minors(PolyMatrix(Rxyz, ((x, y), (y, x))))


def test_determinant_3x3(Rxyz):
    x, y, z = Rxyz.gens()
    M = PolyMatrix(Rxyz, ((x, y, 0), (0, z, 1), (1, 0, x)))
    # x*(z*x - 0) - y*(0 - 1) + 0
    assert M.determinant() == x * x * z + y


@pytest.mark.parametrize("b0", range(1, 7))
def test_minors_vanish_on_curve(b0, Rxyz):
    T = PolyRing("t")
    t = T.var("t")
    images = {"x": t**3, "y": t ** (3 * b0 + 5), "z": t ** (3 * b0 + 4)}
    for m in maximal_minors(matrix_A(Rxyz, b0)):
        assert m.substitute(images, T).is_zero()


@pytest.mark.parametrize("b0", range(1, 7))
def test_hilbert_burch_composition(b0, Rxyz):
    A = matrix_A(Rxyz, b0)
    m1, m2, m3 = maximal_minors(A)
    assert compose_is_zero(PolyMatrix(Rxyz, ((m1, -m2, m3),)), A)


def test_composition_without_signs_fails(Rxyz):
    A = matrix_A(Rxyz, 1)
    m1, m2, m3 = maximal_minors(A)
    BA = PolyMatrix(Rxyz, ((m1, m2, m3),)) @ A
    # first entry expands to 2*y^2*z - 2*x^5*y
    assert BA[0, 0] == Rxyz("2*y^2*z - 2*x^5*y")
    assert not compose_is_zero(PolyMatrix(Rxyz, ((m1, m2, m3),)), A)
    Z = PolyMatrix.zeros(Rxyz, 2, 3)
    assert compose_is_zero(Z, A)
    with pytest.raises(ValueError):
        A @ A


def test_syzygies_koszul(Rxyz):
    x, y, _ = Rxyz.gens()
    S = syzygies([x, y])
    assert module_spans_equal(S, SyzygyModule(Rxyz, 2, ((y, -x),)))
    assert syzygies([x + y]).generators == ()


@pytest.mark.parametrize("b0", [1, 2, 3, 4])
def test_syzygies_are_columns_of_A(b0, Rxyz):
    A = matrix_A(Rxyz, b0)
    m1, m2, m3 = maximal_minors(A)
    targets = [m1, -m2, m3]
    S = syzygies(targets)
    for s in S.generators:
        assert sum((a * b for a, b in zip(s, targets)), Rxyz.zero).is_zero()
    assert module_spans_equal(S, column_module(A))


def test_syzygies_detect_missing_column(Rxyz):
    A = matrix_A(Rxyz, 1)
    m1, m2, m3 = maximal_minors(A)
    S = syzygies([m1, -m2, m3])
    only_first = SyzygyModule(Rxyz, 3, (A.column(0),))
    assert not module_spans_equal(S, only_first)


def test_module_spans_equal_examples(Rxyz):
    x, y, _ = Rxyz.gens()
    assert module_spans_equal(SyzygyModule(Rxyz, 2, ((y, -x),)), SyzygyModule(Rxyz, 2, ((-y, x),)))
    # (y, -x) is not an R-combination of (y^2, -x*y)
    assert not module_spans_equal(SyzygyModule(Rxyz, 2, ((y, -x),)), SyzygyModule(Rxyz, 2, ((y * y, -x * y),)))
    assert module_spans_equal(SyzygyModule(Rxyz, 2, ()), SyzygyModule(Rxyz, 2, ()))
    with pytest.raises(ValueError):
        module_spans_equal(SyzygyModule(Rxyz, 2, ()), SyzygyModule(Rxyz, 3, ()))


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_module_spans_equal_reflexive_symmetric(seed):
    rng = random.Random(seed)
    R = PolyRing("x y z", PrimeField(32003))
    rank = rng.randint(1, 3)
    mk = lambda: SyzygyModule(
        R, rank, tuple(tuple(random_poly(rng, R, 2, 2) for _ in range(rank)) for _ in range(rng.randint(0, 3)))
    )
    S1, S2 = mk(), mk()
    assert module_spans_equal(S1, S1)
    assert module_spans_equal(S1, S2) == module_spans_equal(S2, S1)
    # a shuffled, rescaled generating set spans the same module
    gens = list(S1.generators)
    rng.shuffle(gens)
    S3 = SyzygyModule(R, rank, tuple(tuple(3 * p for p in g) for g in gens))
    assert module_spans_equal(S1, S3)


def test_presentation_chart(Rxyz):
    P = ModulePresentation(2, matrix_A(Rxyz, 1))
    C = presentation_chart(P, 1, "v")
    assert C.ring.names == ("x", "y", "z", "v")
    assert ideal_equal(C, Ideal(C.ring, ["z + v*x^2", "y + v*z", "x^3 + v*y"]))
    C2 = presentation_chart(P, 2, "u")
    assert ideal_equal(C2, Ideal(C2.ring, ["u*z + x^2", "u*y + z", "u*x^3 + y"]))
    free = ModulePresentation(2, PolyMatrix.zeros(Rxyz, 1, 2))
    assert presentation_chart(free, 1, "v").is_zero()
    with pytest.raises(IndexError):
        presentation_chart(P, 3, "v")
    with pytest.raises(ValueError):
        presentation_chart(P, 1, "x")
    with pytest.raises(NotImplementedError):
        presentation_chart(ModulePresentation(3, PolyMatrix.zeros(Rxyz, 1, 3)), 1, "v")
