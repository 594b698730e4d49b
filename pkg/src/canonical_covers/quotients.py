"""Invariants of quotients by Z/3 (isolated fixed points) and by involutions.

Conventions for a Z/3 action with isolated fixed points on a surface ``X``:
``alpha`` counts fixed points whose two tangent characters agree (image is a
1/3(1,1) point, resolved by a (-3)-curve), ``beta`` those with distinct
characters (image is an A2 point).  For the minimal resolution ``Y`` of
``X/Z3``::

    K2_X = 3 K2_Y + alpha
    chi_X = 3 chi_Y - alpha/3 - 2 beta/3

For an involution with ``t`` isolated fixed points (images are nodes) and
``S`` the minimal resolution of the quotient::

    K2_X = 2 K2_S
    chi_X = 2 chi_S - t/4
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .numeric import LinForm, Value, is_integral_value, normalize
from .surfaces import SingularLocus, SurfaceInvariants, make_surface, values_equal

__all__ = [
    "FixedPointType",
    "FixedPointProfile",
    "CharacterPair",
    "NonIsolatedFixedLocusError",
    "InconsistentProfileError",
    "InconsistentFixedCountError",
    "classify_fixed_point",
    "profile_from_characters",
    "cyclic3_quotient",
    "cyclic3_quotient_locus",
    "involution_quotient",
    "solve_fixed_point_profile",
]


class NonIsolatedFixedLocusError(ValueError):
    """A trivial tangent character: the fixed point is not isolated."""


class InconsistentProfileError(ValueError):
    """The fixed-point profile makes the quotient invariants non-integral."""

    def __init__(self, formula: str, message: str):
        super().__init__(message)
        self.formula = formula


class InconsistentFixedCountError(ValueError):
    """The involution fixed-point count makes the quotient invariants non-integral."""


class FixedPointType(enum.Enum):
    A2 = "A2"
    ONE_THIRD = "1/3(1,1)"


@dataclass(frozen=True)
class CharacterPair:
    """Exponents ``(c1, c2)`` with the generator acting by ``omega**c`` on each tangent line."""

    c1: int
    c2: int

    def __post_init__(self):
        for c in (self.c1, self.c2):
            if c % 3 == 0:
                raise NonIsolatedFixedLocusError(
                    f"character {c} is trivial; fixed locus is not isolated"
                )
        object.__setattr__(self, "c1", self.c1 % 3)
        object.__setattr__(self, "c2", self.c2 % 3)


@dataclass(frozen=True)
class FixedPointProfile:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError(f"negative fixed-point count in {self}")

    @property
    def total(self) -> int:
        return self.alpha + self.beta

    def __iter__(self):
        return iter((self.alpha, self.beta))

    def __str__(self):
        return f"({self.alpha},{self.beta})"


def classify_fixed_point(c: CharacterPair) -> FixedPointType:
    if not isinstance(c, CharacterPair):
        c = CharacterPair(*c)
    return FixedPointType.ONE_THIRD if c.c1 == c.c2 else FixedPointType.A2


def profile_from_characters(pairs: Iterable[CharacterPair | tuple[int, int]]) -> FixedPointProfile:
    alpha = beta = 0
    for c in pairs:
        if classify_fixed_point(c) is FixedPointType.ONE_THIRD:
            alpha += 1
        else:
            beta += 1
    return FixedPointProfile(alpha, beta)


def cyclic3_quotient(X: SurfaceInvariants, p: FixedPointProfile, q_Y: int,
                     label: str = "") -> SurfaceInvariants:
    """Invariants of the minimal resolution of ``X / Z3``.

    ``q_Y`` is supplied by the caller; it is not determined by the numerics.
    Raises :class:`InconsistentProfileError` if either quotient invariant is
    non-integral.
    """
    a, b = p.alpha, p.beta
    k2 = (X.K2 - a) / Fraction(3)
    if not is_integral_value(k2):
        raise InconsistentProfileError(
            "K2", f"K2_X - alpha = {X.K2 - a} is not divisible by 3 (profile {p})"
        )
    chi = (3 * X.chi + a + 2 * b) / Fraction(9)
    if not is_integral_value(chi):
        raise InconsistentProfileError(
            "chi", f"3 chi_X + alpha + 2 beta = {3 * X.chi + a + 2 * b} is not divisible by 9 (profile {p})"
        )
    chi, k2 = normalize(chi), normalize(k2)
    return make_surface(q_Y, normalize(chi - 1 + q_Y), k2, label)


def cyclic3_quotient_locus(X_locus: SingularLocus, p: FixedPointProfile) -> SingularLocus:
    """Singularities of ``X / Z3`` itself (before resolution).

    Nodes of ``X`` away from the fixed points fall into free orbits of size 3.
    """
    a1 = X_locus.a1_count / Fraction(3)
    if not is_integral_value(a1):
        raise InconsistentProfileError("A1", f"{X_locus.a1_count} nodes do not form free Z3-orbits")
    if not (values_equal(X_locus.a2_count, 0) and values_equal(X_locus.one_third_count, 0)):
        raise ValueError("only nodal surfaces are supported as Z3 quotients")
    return SingularLocus(normalize(a1), p.beta, p.alpha)


def involution_quotient(X: SurfaceInvariants, t: Value, q_S: int,
                        label: str = "") -> tuple[SurfaceInvariants, SingularLocus]:
    """Minimal resolution ``S`` of ``X / sigma`` and the node locus of ``X / sigma``.

    ``t`` is the number of isolated fixed points of the involution on ``X``.
    """
    quarter = t / Fraction(4)
    if not is_integral_value(quarter):
        raise InconsistentFixedCountError(f"fixed-point count {t} is not divisible by 4")
    k2 = X.K2 / Fraction(2)
    if not is_integral_value(k2):
        raise InconsistentFixedCountError(f"K2_X = {X.K2} is odd")
    chi = (X.chi + quarter) / Fraction(2)
    if not is_integral_value(chi):
        raise InconsistentFixedCountError(
            f"chi_X + t/4 = {X.chi + quarter} is odd (t = {t})"
        )
    chi, k2 = normalize(chi), normalize(k2)
    S = make_surface(q_S, normalize(chi - 1 + q_S), k2, label)
    t = t if isinstance(t, LinForm) else normalize(t)
    return S, SingularLocus(a1_count=t)


def _feasible(K2_X: int, chi_X: int, alpha: int, beta: int,
              beta_min: int, require_K2_Y_nonneg: bool) -> bool:
    if beta < beta_min:
        return False
    if (K2_X - alpha) % 3:
        return False
    if (3 * chi_X + alpha + 2 * beta) % 9:
        return False
    if require_K2_Y_nonneg and K2_X - alpha < 0:
        return False
    return True


def solve_fixed_point_profile(K2_X: int, chi_X: int, total: int, beta_min: int = 0,
                              require_K2_Y_nonneg: bool = False) -> list[FixedPointProfile]:
    """All profiles with ``alpha + beta = total`` compatible with an integral quotient.

    Sorted by increasing ``alpha``; an empty list is a valid answer.
    """
    if total < 0:
        raise ValueError("total must be nonnegative")
    return [
        FixedPointProfile(a, total - a)
        for a in range(total + 1)
        if _feasible(K2_X, chi_X, a, total - a, beta_min, require_K2_Y_nonneg)
    ]
