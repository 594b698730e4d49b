"""Numerical shadows of projective surfaces.

A :class:`SurfaceInvariants` records ``q``, ``p_g``, ``K^2``, ``chi`` and the
topological Euler number ``e``; each entry is an integer or a
:class:`~canonical_covers.numeric.LinForm` in the series parameter.  Surfaces
with A1/A2 points carry the invariants of their minimal resolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .numeric import LinForm, Value, as_form, evaluate, normalize, param_of

__all__ = [
    "SurfaceInvariants",
    "SingularLocus",
    "CohTriple",
    "make_surface",
    "surface_from_chi",
    "check_identities",
    "values_equal",
    "nonneg_from",
]


def values_equal(a: Value, b: Value) -> bool:
    """Exact equality; forms are compared by slope, offset and parameter."""
    if isinstance(a, LinForm) or isinstance(b, LinForm):
        try:
            p = param_of(a, b)
        except ValueError:
            return False
        return as_form(a, p) == as_form(b, p)
    return Fraction(a) == Fraction(b)


def nonneg_from(x: Value, floor: int = 1) -> bool:
    """True iff ``x >= 0`` at every integer parameter value ``>= floor``."""
    if isinstance(x, LinForm):
        return x.slope >= 0 and x(floor) >= 0
    return x >= 0


@dataclass(frozen=True)
class SingularLocus:
    a1_count: Value = 0
    a2_count: Value = 0
    one_third_count: Value = 0

    def __post_init__(self):
        for name in ("a1_count", "a2_count", "one_third_count"):
            if not nonneg_from(getattr(self, name)):
                raise ValueError(f"{name} must be nonnegative, got {getattr(self, name)}")

    def is_empty(self) -> bool:
        return all(
            values_equal(getattr(self, n), 0)
            for n in ("a1_count", "a2_count", "one_third_count")
        )

    def at(self, t: int) -> "SingularLocus":
        return SingularLocus(
            evaluate(self.a1_count, t), evaluate(self.a2_count, t), evaluate(self.one_third_count, t)
        )

    def to_json(self) -> dict:
        return {
            "a1": _json_value(self.a1_count),
            "a2": _json_value(self.a2_count),
            "one_third": _json_value(self.one_third_count),
        }


@dataclass(frozen=True)
class CohTriple:
    """Dimensions ``(h0, h1, h2)`` of the cohomology of a sheaf."""

    h0: Value
    h1: Value
    h2: Value

    def __post_init__(self):
        for v in (self.h0, self.h1, self.h2):
            if not nonneg_from(v):
                raise ValueError(f"cohomology dimensions must be nonnegative: {self}")

    def __iter__(self):
        return iter((self.h0, self.h1, self.h2))


@dataclass(frozen=True)
class SurfaceInvariants:
    q: Value
    p_g: Value
    K2: Value
    chi: Value
    e: Value | None
    label: str = ""
    singular: SingularLocus = field(default_factory=SingularLocus)
    resolved: bool = True

    @property
    def param(self) -> str | None:
        return param_of(self.q, self.p_g, self.K2, self.chi, self.e)

    def is_symbolic(self) -> bool:
        return self.param is not None

    def at(self, t: int | None) -> "SurfaceInvariants":
        """Numeric surface at parameter value ``t``."""
        if t is None:
            return self
        return replace(
            self,
            q=evaluate(self.q, t),
            p_g=evaluate(self.p_g, t),
            K2=evaluate(self.K2, t),
            chi=evaluate(self.chi, t),
            e=None if self.e is None else evaluate(self.e, t),
            singular=self.singular.at(t),
        )

    def reparam(self, factor: int, param: str) -> "SurfaceInvariants":
        """Substitute ``old_param = factor * param`` in every entry."""
        def sub(v):
            return v.reparam(factor, param) if isinstance(v, LinForm) else v
        return replace(
            self, q=sub(self.q), p_g=sub(self.p_g), K2=sub(self.K2), chi=sub(self.chi),
            e=None if self.e is None else sub(self.e),
            singular=SingularLocus(sub(self.singular.a1_count), sub(self.singular.a2_count),
                                   sub(self.singular.one_third_count)),
        )

    def relabel(self, label: str) -> "SurfaceInvariants":
        return replace(self, label=label)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "q": _json_value(self.q),
            "pg": _json_value(self.p_g),
            "k2": _json_value(self.K2),
            "chi": _json_value(self.chi),
            "e": None if self.e is None else _json_value(self.e),
        }

    @classmethod
    def from_json(cls, d: dict) -> "SurfaceInvariants":
        vals = {k: _value_from_json(d[k]) for k in ("q", "pg", "k2")}
        return make_surface(vals["q"], vals["pg"], vals["k2"], d.get("label", ""))


def _json_value(v: Value):
    if isinstance(v, LinForm):
        return v.to_json()
    v = normalize(v)
    return v if isinstance(v, int) else f"{v.numerator}/{v.denominator}"


def _value_from_json(v):
    if isinstance(v, dict):
        return LinForm.from_json(v)
    if isinstance(v, str):
        return normalize(Fraction(v))
    return v


def make_surface(q: Value, p_g: Value, K2: Value, label: str = "", *,
                 singular: SingularLocus | None = None, resolved: bool = True) -> SurfaceInvariants:
    """Build a surface from ``(q, p_g, K^2)``; ``chi`` and ``e`` follow from the identities."""
    chi = normalize(1 - q + p_g)
    e = normalize(12 * chi - K2)
    return SurfaceInvariants(q, p_g, K2, chi, e, label, singular or SingularLocus(), resolved)


def surface_from_chi(q: Value, chi: Value, K2: Value, label: str = "") -> SurfaceInvariants:
    """Build a surface from ``(q, chi, K^2)``; ``p_g = chi - 1 + q``."""
    return make_surface(q, normalize(chi - 1 + q), K2, label)


def check_identities(S: SurfaceInvariants) -> list[str]:
    """Violated identities among ``chi = 1 - q + p_g`` and ``e = 12 chi - K^2``.

    An empty list means every identity holds (for all parameter values when
    the entries are forms).  The Noether identity is skipped for unresolved
    singular models.
    """
    bad = []
    if not values_equal(S.chi, 1 - S.q + S.p_g):
        bad.append(f"chi = 1 - q + p_g: chi={S.chi}, 1-q+p_g={1 - S.q + S.p_g}")
    skip_noether = (not S.resolved) and not S.singular.is_empty()
    if not skip_noether:
        if S.e is None:
            bad.append("e = 12chi - K2: e missing")
        elif not values_equal(S.e, 12 * S.chi - S.K2):
            bad.append(f"e = 12chi - K2: e={S.e}, 12chi-K2={12 * S.chi - S.K2}")
    return bad
