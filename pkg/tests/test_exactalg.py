"""Exact arithmetic layer: sparse integer polynomials, rational functions,
labelled matrices and the fraction-free solver.

Oracle for ring arithmetic: evaluation at several integer points compared
against plain Fraction arithmetic.
"""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lsgreen.errors import NotDivisible, SingularBlock, ZeroDenominator
from lsgreen.exactalg import IntPoly, PolyMatrix, RatFunc, matrix_solve, poly_gcd

EVAL_POINTS = (2, 3, -1, Fraction(1, 2))


def poly(d):
    return IntPoly(d)


small_polys = st.dictionaries(
    st.integers(min_value=0, max_value=7),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(IntPoly)

nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def as_fraction(p, x):
    return sum(Fraction(c) * Fraction(x) ** e for e, c in p.c.items())


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

def test_no_zero_coefficients_stored():
    p = IntPoly({3: 1, 1: 0, 0: 2})
    assert 1 not in p.c
    assert (p - p).c == {}
    assert (p - p).is_zero()


def test_repr_examples():
    assert str(IntPoly({3: 1, 2: 2, 1: 2, 0: 1})) == "q^3 + 2*q^2 + 2*q + 1"
    assert str(IntPoly.zero()) == "0"
    assert str(IntPoly.q(4) - IntPoly.one()) == "q^4 - 1"


@given(small_polys, small_polys)
def test_add_matches_fraction_oracle(a, b):
    for x in EVAL_POINTS:
        assert as_fraction(a + b, x) == as_fraction(a, x) + as_fraction(b, x)


@given(small_polys, small_polys)
def test_mul_matches_fraction_oracle(a, b):
    for x in EVAL_POINTS:
        assert as_fraction(a * b, x) == as_fraction(a, x) * as_fraction(b, x)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_degree_and_order():
    p = IntPoly({5: 3, 2: 1})
    assert p.degree() == 5
    assert p.order() == 2
    assert p.leading_coeff() == 3


def test_divmod_frozen_example():
    # q^5 = (q^2 - q)(q^3 + q^2 + q + 1) + q
    quot, rem = IntPoly({5: 1}).divmod(IntPoly({2: 1, 1: -1}))
    assert quot == IntPoly({3: 1, 2: 1, 1: 1, 0: 1})
    assert rem == IntPoly({1: 1})


def test_divmod_refuses_fractional_quotient():
    with pytest.raises(NotDivisible):
        IntPoly({1: 1, 0: 2}).divmod(IntPoly({1: 2}))


monic_polys = st.tuples(
    st.integers(min_value=1, max_value=6), small_polys
).map(lambda t: IntPoly.q(t[0] + max(t[1].degree(), 0)) + t[1])


@given(small_polys, monic_polys, small_polys)
def test_divmod_roundtrip_monic(c, b, r):
    r = r if r.degree() < b.degree() else IntPoly.zero()
    a = b * c + r
    quot, rem = a.divmod(b)
    assert quot == c and rem == r


def test_exact_divides():
    a = IntPoly({4: 1, 0: -1})
    assert IntPoly({2: 1, 0: 1}).divides(a)
    assert not IntPoly({1: 1, 0: 2}).divides(a)


def test_gcd_frozen_examples():
    assert poly_gcd(IntPoly({4: 1, 0: -1}), IntPoly({6: 1, 0: -1})) == \
        IntPoly({2: 1, 0: -1})
    # content is part of the gcd
    assert poly_gcd(IntPoly({1: 2, 0: 2}), IntPoly({2: 4, 0: -4})) == \
        IntPoly({1: 2, 0: 2})


@given(small_polys, small_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    if a.is_zero() and b.is_zero():
        assert g.is_zero()
        return
    assert g.divides(a) and g.divides(b)


def test_reverse_swaps_coefficients():
    p = IntPoly({3: 1, 1: 2})
    assert p.reverse(3) == IntPoly({2: 2, 0: 1})


@given(small_polys)
def test_reverse_involution(p):
    d = max(p.degree(), 0)
    assert p.reverse(d).reverse(d) == p


def test_shift_multiplies_by_power():
    assert IntPoly({1: 1, 0: 1}).shift(3) == IntPoly({4: 1, 3: 1})


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

def test_ratfunc_reduces_to_lowest_terms():
    f = RatFunc(IntPoly({2: 1, 0: -1}), IntPoly({1: 1, 0: -1}))
    assert f == RatFunc(IntPoly({1: 1, 0: 1}))
    assert f.is_polynomial()
    assert f.as_poly() == IntPoly({1: 1, 0: 1})


def test_ratfunc_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        RatFunc(IntPoly.one(), IntPoly.zero())


def test_ratfunc_non_polynomial_detected():
    f = RatFunc(IntPoly.one(), IntPoly({1: 1}))
    assert not f.is_polynomial()


@given(small_polys, nonzero_polys, small_polys, nonzero_polys)
def test_ratfunc_arithmetic_matches_fraction_oracle(an, ad, bn, bd):
    a = RatFunc(an, ad)
    b = RatFunc(bn, bd)
    for x in (2, 3, 5):
        da, db = as_fraction(ad, x), as_fraction(bd, x)
        if da == 0 or db == 0:
            continue
        fa = as_fraction(an, x) / da
        fb = as_fraction(bn, x) / db
        s = a + b
        p = a * b
        assert as_fraction(s.num, x) / as_fraction(s.den, x) == fa + fb
        assert as_fraction(p.num, x) / as_fraction(p.den, x) == fa * fb


@given(small_polys, nonzero_polys)
def test_ratfunc_denominator_sign_normalised(n, d):
    f = RatFunc(n, d)
    assert f.den.leading_coeff() > 0


# ---------------------------------------------------------------------------
# PolyMatrix and the solver
# ---------------------------------------------------------------------------

def rf(d):
    return RatFunc(IntPoly(d))


def test_matrix_mul_and_transpose():
    a = PolyMatrix(("x", "y"), ("x", "y"),
                   [[rf({1: 1}), rf({0: 1})], [rf(0), rf({2: 1})]])
    t = a.transpose()
    assert t.get("y", "x") == a.get("x", "y")
    prod = a.mul(t)
    assert prod.is_symmetric()


def test_matrix_solve_recovers_known_solution():
    one = rf({0: 1})
    a = PolyMatrix(("u", "v"), ("u", "v"),
                   [[one, rf({1: 1})], [rf(0), one]])
    x = PolyMatrix(("w",), ("u", "v"), [[rf({1: 1}), rf({2: 1})]])
    b = x.mul(a)
    assert matrix_solve(a, b) == x


def test_matrix_solve_rejects_singular():
    row = [rf({1: 1}), rf({1: 1})]
    a = PolyMatrix(("u", "v"), ("u", "v"), [row, list(row)])
    b = PolyMatrix(("w",), ("u", "v"), [[rf({0: 1}), rf({0: 1})]])
    with pytest.raises(SingularBlock):
        matrix_solve(a, b)


@given(st.lists(st.lists(small_polys, min_size=3, max_size=3),
                min_size=2, max_size=2))
def test_matrix_solve_roundtrip_triangular(xrows):
    labels = ("a", "b", "c")
    diag = rf({0: 1})
    arows = []
    for i in range(3):
        row = []
        for j in range(3):
            if j < i:
                row.append(rf(0))
            elif j == i:
                row.append(diag + rf({i + 1: 1}))
            else:
                row.append(rf({1: 1}))
        arows.append(row)
    a = PolyMatrix(labels, labels, arows)
    x = PolyMatrix(("r1", "r2"), labels,
                   [[RatFunc(p) for p in row] for row in xrows])
    assert matrix_solve(a, x.mul(a)) == x
