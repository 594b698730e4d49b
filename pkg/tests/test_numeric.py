from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from canonical_covers.numeric import (
    IncompatibleParameterError,
    LinForm,
    linform_combine,
    linform_divide_exact,
    linform_eval,
)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 10**6)
forms = st.builds(LinForm, rationals, rationals, st.just("t"))


def test_eval_examples(n):
    assert linform_eval(24 * n - 32, 3) == 40
    assert linform_eval(LinForm.const(5, "t"), 7) == 5
    assert linform_eval(7 * n - 4, 0) == -4


def test_combine_examples(n):
    assert linform_combine(1, 24 * n - 32, -1, 12 * n - 16) == 12 * n - 16
    g = 3 * n + 1
    assert linform_combine(0, 24 * n - 32, 1, g) == g
    assert linform_combine(Fraction(1, 2), 24 * n - 32, 0, g) == 12 * n - 16


def test_combine_rejects_mixed_parameters(n, k):
    with pytest.raises(IncompatibleParameterError):
        linform_combine(1, n, 1, k)
    with pytest.raises(IncompatibleParameterError):
        n + k


@pytest.mark.parametrize(
    "form, d, quotient, integral",
    [
        (LinForm(72, -36, "k"), 3, LinForm(24, -12, "k"), True),
        (LinForm(6, 0, "k"), 3, LinForm(2, 0, "k"), True),
        (LinForm(72, -32, "k"), 3, LinForm(24, Fraction(-32, 3), "k"), False),
    ],
)
def test_divide_exact(form, d, quotient, integral):
    q, ok = linform_divide_exact(form, d)
    assert q == quotient
    assert ok is integral


def test_divide_exact_rejects_zero():
    with pytest.raises(ValueError):
        linform_divide_exact(LinForm(1, 0), 0)


def test_reparam_is_explicit(n):
    f = (24 * n - 32).reparam(3, "k")
    assert f == LinForm(72, -32, "k")
    assert f(2) == (24 * n - 32)(6)


def test_large_parameters_stay_exact(n):
    t = 10**40 + 7
    assert (24 * n - 32)(t) == 24 * t - 32


def test_rendering(n, k):
    assert str(24 * n - 32) == "24n-32"
    assert str(LinForm.const(-4, "n")) == "-4"
    assert (5 * k).expr() == "5*k"
    assert LinForm(Fraction(1, 2), Fraction(-3, 4), "k").expr() == "1/2*k-3/4"


def test_json_roundtrip(k):
    f = LinForm(Fraction(24), Fraction(-32, 3), "k")
    assert LinForm.from_json(f.to_json()) == f


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    r = Fraction(a.numerator, a.denominator)
    assert Fraction(r.numerator, r.denominator) == r and r.denominator > 0


@given(rationals, forms, rationals, forms, st.integers(-10**6, 10**6))
def test_combine_is_linear(a, f, b, g, t):
    h = linform_combine(a, f, b, g)
    assert linform_eval(h, t) == a * linform_eval(f, t) + b * linform_eval(g, t)


@given(forms, st.integers(1, 1000))
def test_divide_then_multiply_roundtrip(f, d):
    q, _ = linform_divide_exact(f, d)
    assert q * d == f
