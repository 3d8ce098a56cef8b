import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from twisthom.mapspaces import Family, MapSpaceSpec
from twisthom.series import (
    LaurentPolynomial as LP,
    PoincareSeries,
    RationalExpr,
    euler_char,
    expand,
    poincare_dual_check,
    series_arith,
    stable_range_bound,
    table_closed_form,
)

t = sympy.symbols("t")


def sympy_expand(e: RationalExpr, T: int) -> tuple[int, ...]:
    num = sum(c * t**i for i, c in enumerate(e.num))
    den = sum(c * t**i for i, c in enumerate(e.den))
    s = sympy.series(num / den, t, 0, T + 1).removeO()
    poly = sympy.Poly(s, t)
    return tuple(int(poly.coeff_monomial(t**i)) for i in range(T + 1))


def rat(num, den=(1,)):
    return RationalExpr(tuple(num), tuple(den))


def test_geometric():
    assert expand(rat([1], [1, 0, -1]), 6).coeffs == (1, 0, 1, 0, 1, 0, 1)


def test_expand_examples():
    assert expand(rat([1, 0, 0, 1], [1, 0, -1]), 5).coeffs == (1, 0, 1, 1, 1, 1)
    assert expand(rat([1, 0, 0, 0, 0, 0, 0, 1], [1, 0, -1]), 8).coeffs == (1, 0, 1, 0, 1, 0, 1, 1, 1)


def test_bad_denominator_rejected():
    with pytest.raises(ValueError):
        RationalExpr((1,), (2, 1))
    with pytest.raises(ValueError):
        RationalExpr((1,), (0, 1))


coeff_lists = st.lists(st.integers(-3, 3), min_size=1, max_size=5)


def rationals():
    return st.builds(lambda n, d: RationalExpr(tuple(n), (1,) + tuple(d)), coeff_lists, st.lists(st.integers(-2, 2), max_size=3))


@settings(max_examples=40, deadline=None)
@given(rationals(), st.integers(0, 12))
def test_expand_matches_sympy(e, T):
    if not any(e.num):
        assert all(c == 0 for c in expand(e, T).coeffs)
        return
    assert expand(e, T).coeffs == sympy_expand(e, T)


@settings(max_examples=100, deadline=None)
@given(rationals(), rationals(), st.integers(0, 15))
def test_expand_is_ring_homomorphism(a, b, T):
    assert expand(a * b, T) == expand(a, T) * expand(b, T)
    assert expand(a + b, T) == expand(a, T) + expand(b, T)
    assert expand(a - b, T) == expand(a, T) - expand(b, T)


def test_series_arith_examples():
    one_plus = PoincareSeries((1, 1, 0))
    one_minus = PoincareSeries((1, -1, 0))
    assert series_arith(one_plus, one_minus, "mul").coeffs == (1, 0, -1)
    a = expand(rat([1, 2, 3], [1, -1]), 6)
    assert series_arith(a, PoincareSeries.zero(6), "add") == a
    inv = series_arith(expand(rat([1], [1, -1]), 9), expand(rat([1, -1]), 9), "mul")
    assert inv.coeffs == (1,) + (0,) * 9


def test_series_arith_truncation_mismatch():
    with pytest.raises(ValueError):
        series_arith(PoincareSeries((1, 0)), PoincareSeries((1, 0, 0)), "add")


def test_closed_form_examples():
    assert table_closed_form(MapSpaceSpec(Family.EVEN, 1, 3)).equals(rat([1, 0, 0, 1], [1, 0, -1]))
    assert table_closed_form(MapSpaceSpec(Family.ODD, 2, 4, True)).equals(rat([1, 0, 0, 1], [1, 0, -1]))
    assert table_closed_form(MapSpaceSpec(Family.GENERAL, 2, 3)).equals(rat([1, 1, 0, 1, 1]))


def test_lens_closed_forms():
    for r, s in ((3, 1), (4, 2), (6, 6)):
        free = table_closed_form(MapSpaceSpec(Family.LENS, 3, 7, False, r, s))
        based = table_closed_form(MapSpaceSpec(Family.LENS, 3, 7, True, r, s))
        assert free.equals(rat([1, 0, 0, 0, 0, 0, 0, 1], [1, 0, 0, 0, -1]))
        assert based.equals(rat([1], [1, 0, 0, 0, -1]))


def test_invalid_specs_rejected():
    with pytest.raises(ValueError):
        MapSpaceSpec(Family.EVEN, 3, 3)
    with pytest.raises(ValueError):
        MapSpaceSpec(Family.LENS, 2, 5, False, 3, 1)
    with pytest.raises(ValueError):
        MapSpaceSpec(Family.LENS, 1, 5, False, 3, 4)


def all_specs(max_M):
    for fam in (Family.EVEN, Family.ODD, Family.GENERAL):
        for M in range(2, max_M + 1):
            for m in range(1, M):
                for based in (False, True):
                    yield MapSpaceSpec(fam, m, M, based)
    for r in (1, 2, 3, 4, 6):
        for s in range(1, r + 1):
            for M in range(3, max_M + 1, 2):
                for m in range(1, M, 2):
                    for based in (False, True):
                        yield MapSpaceSpec(Family.LENS, m, M, based, r, s)


def test_closed_forms_nonnegative():
    for spec in all_specs(12):
        assert expand(table_closed_form(spec), 60).is_nonnegative(), spec.case_id


def test_closed_forms_start_with_one():
    # every space is connected
    for spec in all_specs(9):
        assert expand(table_closed_form(spec), 0).coeffs == (1,)


def test_dual_check_examples():
    assert poincare_dual_check(LP.from_dict({2: 1, 5: 1}), LP.from_dict({4: 1, 1: 1}), 6)
    assert poincare_dual_check(LP.one(), LP.monomial(7), 7)
    assert not poincare_dual_check(LP.from_dict({0: 1, 1: 1}), LP.from_dict({0: 1, 1: 1}), 3)


@pytest.mark.parametrize("m", [1, 3, 5, 7])
@pytest.mark.parametrize("N", [2, 4, 6, 8, 10])
def test_dual_pair_for_projective_theta(m, N):
    hom = LP.monomial(N * (m - 1) // 2) * (LP.one() + LP.monomial(m))
    bm = LP.monomial(N * (m + 1) // 2) * (LP.one() + LP.monomial(-m))
    assert poincare_dual_check(hom, bm, m * N)


def test_euler_char_examples():
    assert euler_char(LP.from_dict({0: 1, 3: 1})) == 0
    assert euler_char(LP.from_dict({2: 1, 5: 1})) == 0
    fks = LP.from_dict({0: 1, 2: 1}) * LP.from_dict({0: 1, 2: 2}) * LP.from_dict({0: 1, 2: 3})
    assert fks.as_dict() == {0: 1, 2: 6, 4: 11, 6: 6}
    assert euler_char(fks) == 24


def test_laurent_arithmetic():
    p = LP.from_dict({-2: 3, 1: -1})
    assert p.min_degree == -2 and p.max_degree == 1
    assert (p - p).is_zero()
    assert p.reciprocal().as_dict() == {2: 3, -1: -1}
    assert p.shift(2).as_dict() == {0: 3, 3: -1}
    assert p.evaluate(-1) == 4
    assert p.evaluate(2) == sympy.Rational(3, 4) - 2


def test_stable_range():
    assert stable_range_bound(5, 3, 2) == 6
    assert stable_range_bound(4, 3, 1) == 2
    for n in range(1, 6):
        for d in range(5):
            assert stable_range_bound(n + 1, n, d) == d + 1
    with pytest.raises(ValueError):
        stable_range_bound(3, 3, 1)
