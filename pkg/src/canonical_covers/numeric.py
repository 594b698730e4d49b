"""Exact rationals and degree-one forms ``slope * t + offset`` in a named parameter.

Every invariant in the package is either a plain integer or a :class:`LinForm`.
Rationals are :class:`fractions.Fraction` (arbitrary precision, always reduced).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

__all__ = [
    "Rational",
    "LinForm",
    "IncompatibleParameterError",
    "Value",
    "linform_eval",
    "linform_combine",
    "linform_divide_exact",
    "as_form",
    "evaluate",
    "param_of",
    "fmt_rational",
]


class IncompatibleParameterError(ValueError):
    """Two forms in different parameters were combined."""


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def fmt_rational(x: Fraction) -> str:
    """``"p"`` for integers, ``"p/q"`` otherwise."""
    x = _q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class LinForm:
    """The exact linear form ``slope * param + offset``."""

    slope: Fraction
    offset: Fraction
    param: str = "n"

    def __post_init__(self):
        object.__setattr__(self, "slope", _q(self.slope))
        object.__setattr__(self, "offset", _q(self.offset))
        if not self.param or not isinstance(self.param, str):
            raise ValueError("parameter name must be a nonempty string")

    @classmethod
    def const(cls, c, param: str = "n") -> "LinForm":
        return cls(Fraction(0), _q(c), param)

    @classmethod
    def var(cls, param: str = "n") -> "LinForm":
        return cls(Fraction(1), Fraction(0), param)

    def __call__(self, t) -> Fraction:
        return self.slope * _q(t) + self.offset

    def is_integral(self) -> bool:
        """Integer slope and offset, hence integer-valued at every integer."""
        return self.slope.denominator == 1 and self.offset.denominator == 1

    def is_constant(self) -> bool:
        return self.slope == 0

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "LinForm":
        if isinstance(other, LinForm):
            if other.param != self.param:
                raise IncompatibleParameterError(
                    f"cannot combine forms in {self.param!r} and {other.param!r}"
                )
            return other
        return LinForm(Fraction(0), _q(other), self.param)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LinForm(self.slope + o.slope, self.offset + o.offset, self.param)

    __radd__ = __add__

    def __neg__(self):
        return LinForm(-self.slope, -self.offset, self.param)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LinForm(self.slope - o.slope, self.offset - o.offset, self.param)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        if isinstance(c, LinForm):
            if c.is_constant():
                c = c.offset
            elif self.is_constant():
                return c * self.offset
            else:
                raise TypeError("product of two non-constant forms is not linear")
        try:
            c = _q(c)
        except TypeError:
            return NotImplemented
        return LinForm(self.slope * c, self.offset * c, self.param)

    __rmul__ = __mul__

    def __truediv__(self, d):
        d = _q(d)
        if d == 0:
            raise ZeroDivisionError("division of a form by zero")
        return LinForm(self.slope / d, self.offset / d, self.param)

    def reparam(self, factor: int, param: str) -> "LinForm":
        """Substitute ``self.param = factor * param`` (e.g. ``n = 3k``)."""
        return LinForm(self.slope * factor, self.offset, param)

    # display ----------------------------------------------------------------

    def __str__(self) -> str:
        return self._render(sep="")

    def expr(self) -> str:
        """Render as ``a*k+b``; used for CSV cells."""
        return self._render(sep="*")

    def _render(self, sep: str) -> str:
        s, b, p = self.slope, self.offset, self.param
        if s == 0:
            return fmt_rational(b)
        if s == 1:
            head = p
        elif s == -1:
            head = "-" + p
        elif s.denominator == 1 or sep:
            head = f"{fmt_rational(s)}{sep}{p}"
        else:
            head = f"({fmt_rational(s)}){p}"
        if b == 0:
            return head
        sign = "+" if b > 0 else "-"
        return f"{head}{sign}{fmt_rational(abs(b))}"

    def to_json(self) -> dict:
        return {
            "slope_num": self.slope.numerator,
            "slope_den": self.slope.denominator,
            "offset_num": self.offset.numerator,
            "offset_den": self.offset.denominator,
            "param": self.param,
        }

    @classmethod
    def from_json(cls, d: dict) -> "LinForm":
        return cls(
            Fraction(d["slope_num"], d["slope_den"]),
            Fraction(d["offset_num"], d["offset_den"]),
            d["param"],
        )


Value = Union[int, Fraction, LinForm]


def linform_eval(f: LinForm, t: int) -> Fraction:
    return f(t)


def linform_combine(a, f: LinForm, b, g: LinForm) -> LinForm:
    """``a*f + b*g``; raises :class:`IncompatibleParameterError` on a name clash."""
    if f.param != g.param:
        raise IncompatibleParameterError(
            f"cannot combine forms in {f.param!r} and {g.param!r}"
        )
    a, b = _q(a), _q(b)
    return LinForm(a * f.slope + b * g.slope, a * f.offset + b * g.offset, f.param)


def linform_divide_exact(f: LinForm, d: int) -> tuple[LinForm, bool]:
    """Return ``(f / d, integral)``; non-integrality is reported, never raised."""
    if d < 1:
        raise ValueError("divisor must be a positive integer")
    g = f / d
    return g, g.is_integral()


def param_of(*values) -> str | None:
    """The common parameter name of the forms among ``values`` (None if all constant)."""
    names = {v.param for v in values if isinstance(v, LinForm)}
    if len(names) > 1:
        raise IncompatibleParameterError(f"mixed parameters {sorted(names)}")
    return names.pop() if names else None


def as_form(x: Value, param: str) -> LinForm:
    if isinstance(x, LinForm):
        if x.param != param:
            raise IncompatibleParameterError(f"expected a form in {param!r}, got {x.param!r}")
        return x
    return LinForm.const(x, param)


def evaluate(x: Value, t: int | None = None):
    """Evaluate a form at ``t``; integers pass through. Integral results become ``int``."""
    if isinstance(x, LinForm):
        if t is None:
            raise ValueError(f"form {x} needs a parameter value")
        x = x(t)
    x = _q(x)
    return int(x) if x.denominator == 1 else x


def is_integral_value(x: Value) -> bool:
    if isinstance(x, LinForm):
        return x.is_integral()
    return _q(x).denominator == 1


def normalize(x: Value) -> Value:
    """Collapse integral Fractions to ``int``; forms are returned unchanged."""
    if isinstance(x, LinForm):
        return x
    x = _q(x)
    return int(x) if x.denominator == 1 else x
