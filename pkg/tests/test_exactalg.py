import pytest
from hypothesis import given, settings, strategies as st

from gjones.exactalg import (LaurentPoly, NonUnitConstantTerm, QFraction,
                             TruncatedSeries, divide_brace, divide_one_minus_sq,
                             frac_reduce, qbrace_poly, qfrac_sum, series_invert)

L = LaurentPoly


# -- strategies -------------------------------------------------------------

def polys(vars=("q", "t1", "U"), max_terms=4, exp=3, coeff=6):
    def build(spec):
        p = L.zero()
        for exps, c in spec:
            p = p + L.term(c, **dict(zip(vars, exps)))
        return p
    term = st.tuples(
        st.tuples(*[st.integers(-exp, exp) for _ in vars]),
        st.integers(-coeff, coeff),
    )
    return st.lists(term, max_size=max_terms).map(build)


# -- LaurentPoly ------------------------------------------------------------

def test_product_difference_of_squares():
    q, qi = L.var("q"), L.var("q", -1)
    assert (q + qi) * (q - qi) == L.var("q", 2) - L.var("q", -2)


def test_additive_inverse_is_empty():
    p = L.term(3, q=2, t1=-1) + L.term(-5, U=4)
    assert (p + p * (-1)).is_zero
    assert (p - p).is_zero


def test_brace_square():
    b = qbrace_poly(2)
    assert b * b == L.term(1, q=4) + L.const(-2) + L.term(1, q=-4)


def test_pow_matches_repeated_product():
    p = L.var("q") + L.term(2, t1=1)
    assert p ** 3 == p * p * p
    assert p ** 0 == L.one()
    assert L.term(1, q=2) ** -2 == L.term(1, q=-4)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_substitute_fixed_points():
    U = L.var("U")
    assert U.substitute("U", L.term(1, q=2, U=1)) == L.term(1, q=2, U=1)
    sym = U + L.var("U", -1)
    assert sym.substitute("U", L.var("U", -1)) == sym


def test_substitute_sign_squares_away():
    assert L.var("U", 2).substitute("U", L.term(-1, q=2)) == L.term(1, q=4)


def test_substitute_rejects_nonmonomial_image():
    with pytest.raises(ValueError):
        L.var("U").substitute("U", L.var("q") + L.one())
    with pytest.raises(ValueError):
        L.var("U").substitute("U", L.term(2, q=1))


@settings(max_examples=60, deadline=None)
@given(polys(vars=("q", "U")))
def test_substitute_round_trip(p):
    fwd = p.substitute("U", L.term(1, q=2, U=1))
    back = fwd.substitute("U", L.term(1, q=-2, U=1))
    assert back == p


def test_canonical_text_rendering():
    assert str(L.zero()) == "0"
    assert str(qbrace_poly(2)) == "-q^-2 + q^2"
    assert str(L.term(1, q=-2) + L.term(1, q=2)) == "q^-2 + q^2"
    assert str(L.term(-3, q=1, t1=-2) + L.const(7)) == "7 - 3*q*t1^-2"
    assert L.term(1, q=2, t2=-1).render("latex") == "q^{2}t_2^{-1}"


def test_json_terms_order_and_shape():
    p = L.term(2, q=1, U=-1) + L.term(-1, q=-1)
    assert p.json_terms() == [[-1, 0, 0, 0, 0, 0, 0, -1], [1, 0, 0, -1, 0, 0, 0, 2]]


# -- exact division ----------------------------------------------------------

def test_divide_brace_examples():
    from gjones.qcombo import qint
    assert divide_brace(qbrace_poly(4), 2) == qint(2, 2)
    assert divide_brace(qbrace_poly(2), 4) is None
    assert divide_brace(qbrace_poly(2) * qbrace_poly(6), 2) == qbrace_poly(6)


def test_divide_one_minus_sq():
    one = L.one()
    X2 = L.var("X", 2)
    p = (one - X2) * (L.var("X", -3) + L.term(2, q=1))
    assert divide_one_minus_sq(p, "X") == L.var("X", -3) + L.term(2, q=1)
    assert divide_one_minus_sq(one + X2, "X") is None


@settings(max_examples=60, deadline=None)
@given(polys(vars=("q", "t1")), st.integers(1, 5))
def test_divide_brace_inverts_multiplication(p, m):
    assert divide_brace(p * qbrace_poly(m), m) == p


# -- QFraction ---------------------------------------------------------------

def test_reduce_examples():
    from gjones.qcombo import qint
    r = QFraction(qbrace_poly(4), (2,)).reduced()
    assert r.den == () and r.num == qint(2, 2)
    r = QFraction(qbrace_poly(2), (4,)).reduced()
    assert r.den == (4,)
    r = QFraction(qbrace_poly(2) * qbrace_poly(6), (2,)).reduced()
    assert r.den == () and r.num == qbrace_poly(6)


@settings(max_examples=40, deadline=None)
@given(polys(vars=("q", "t1")), st.lists(st.integers(1, 4), max_size=3))
def test_reduce_preserves_value(num, den):
    from gjones.exactalg import brace_product
    f = QFraction(num, den)
    r = frac_reduce(f)
    assert f.num * brace_product(r.den) == r.num * brace_product(f.den)
    assert f == r


def test_fraction_arithmetic_common_denominator():
    a = QFraction(L.one(), (2,))
    b = QFraction(L.one(), (3,))
    s = a + b
    assert s.den == (2, 3)
    assert s.num == qbrace_poly(3) + qbrace_poly(2)
    assert (a - a).is_zero
    assert a * b == QFraction(L.one(), (2, 3))


def test_qfrac_sum_matches_pairwise():
    parts = [QFraction(qbrace_poly(m), (m + 1,)) for m in (1, 2, 3)]
    folded = parts[0] + parts[1] + parts[2]
    assert qfrac_sum(parts) == folded
    assert qfrac_sum([]).is_zero


def test_as_poly_raises_when_stuck():
    with pytest.raises(ValueError):
        QFraction(qbrace_poly(2), (4,)).as_poly()


def test_inverse_unit():
    f = QFraction(L.term(-1, q=3), (2, 5))
    g = f.inverse_unit()
    assert (f * g).as_poly() == L.one()
    with pytest.raises(NonUnitConstantTerm):
        QFraction(L.one() + L.var("q")).inverse_unit()
    with pytest.raises(NonUnitConstantTerm):
        QFraction(L.const(2)).inverse_unit()


def test_substitute_blocks_q_with_denominator():
    with pytest.raises(ValueError):
        QFraction(L.one(), (2,)).substitute("q", 1)
    f = QFraction(L.var("t1"), (2,)).substitute("t1", 1)
    assert f == QFraction(L.one(), (2,))


# -- TruncatedSeries ----------------------------------------------------------

def test_invert_one_and_geometric():
    one = TruncatedSeries.one(6)
    assert series_invert(one) == one
    s = TruncatedSeries([1, -1], 6)
    inv = s.invert()
    assert all(inv.coeff(k) == QFraction(1) for k in range(7))


def test_invert_quadratic_long_division():
    # (-1 + c lam - lam^2)^-1 = -1 - c lam + (1 - c^2) lam^2 + ...
    c = qbrace_poly(2)
    s = TruncatedSeries([L.const(-1), c, L.const(-1)], 5)
    inv = s.invert()
    assert inv.coeff(0) == QFraction(-1)
    assert inv.coeff(1) == QFraction(-c)
    assert inv.coeff(2) == QFraction(L.one() - c * c)
    assert (s * inv) == TruncatedSeries.one(5)


def test_invert_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries([0, 1], 4).invert()
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries([2, 1], 4).invert()


def test_min_order_semantics():
    a = TruncatedSeries([1, 2, 3], 4)
    b = TruncatedSeries([1, 1], 2)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert a.shift(1).coeff(1) == QFraction(1)
    assert a.shift(1).coeff(0).is_zero


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_invert_round_trip(tail):
    s = TruncatedSeries([1] + tail, 5)
    assert (s * s.invert()) == TruncatedSeries.one(5)
