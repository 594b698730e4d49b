"""Z/3-eigenbases of sections ``x0^a x1^(d-a) f_i`` on a product with P^1.

A :class:`WeightConfig` fixes the pullback weights: the generator pulls
``f_i`` back to ``omega**w_i f_i`` and ``x0, x1`` back to ``omega**u0 x0``,
``omega**u1 x1``.  A monomial is invariant iff its pullback weight
``w_i + a*u0 + (d-a)*u1`` vanishes mod 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .numeric import LinForm

__all__ = [
    "WeightConfig",
    "Monomial",
    "invariant_monomial_basis",
    "invariant_dimension",
    "symbolic_invariant_dimension",
    "eigenspace_dimensions",
    "coverage_check",
    "format_monomial",
    "parse_residues",
]


@dataclass(frozen=True)
class WeightConfig:
    section_weights: tuple[int, ...]
    u0: int
    u1: int
    degree: int

    def __post_init__(self):
        w = tuple(self.section_weights)
        if not w:
            raise ValueError("at least one section is required")
        if any(x not in (0, 1, 2) for x in w + (self.u0, self.u1)):
            raise ValueError(f"weights must be residues in {{0, 1, 2}}: {w}, u=({self.u0},{self.u1})")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        object.__setattr__(self, "section_weights", w)

    def pullback_weight(self, i: int, a: int) -> int:
        return (self.section_weights[i] + a * self.u0 + (self.degree - a) * self.u1) % 3

    def inverse(self) -> "WeightConfig":
        """The same action viewed through the inverse generator."""
        return WeightConfig(
            tuple((2 * w) % 3 for w in self.section_weights),
            (2 * self.u0) % 3, (2 * self.u1) % 3, self.degree,
        )

    def with_degree(self, d: int) -> "WeightConfig":
        return WeightConfig(self.section_weights, self.u0, self.u1, d)


Monomial = tuple[int, int]  # (section index i, exponent a of x0)


def invariant_monomial_basis(cfg: WeightConfig) -> list[Monomial]:
    """Sorted pairs ``(i, a)`` whose monomial is invariant."""
    return [
        (i, a)
        for i in range(len(cfg.section_weights))
        for a in range(cfg.degree + 1)
        if cfg.pullback_weight(i, a) == 0
    ]


def _residue_target(w: int, u0: int, u1: int, d: int) -> int | None:
    # w + a*u0 + (d-a)*u1 = (w + d*u1) + a*(u0 - u1)
    c, s = (w + d * u1) % 3, (u0 - u1) % 3
    if s == 0:
        return None
    return (-c * s) % 3  # s is its own inverse mod 3


def _count_in_class(d: int, r: int) -> int:
    """Number of ``a`` in ``[0, d]`` with ``a = r (mod 3)``, for ``0 <= r < 3``."""
    return (d - r) // 3 + 1 if d >= r else 0


def invariant_dimension(cfg: WeightConfig) -> int:
    """Dimension of the invariant subspace, by residue-class counting."""
    total = 0
    for w in cfg.section_weights:
        r = _residue_target(w, cfg.u0, cfg.u1, cfg.degree)
        if r is None:
            if (w + cfg.degree * cfg.u0) % 3 == 0:
                total += cfg.degree + 1
        else:
            total += _count_in_class(cfg.degree, r)
    return total


def symbolic_invariant_dimension(weights: Sequence[int], u0: int, u1: int,
                                 degree: LinForm) -> LinForm:
    """Invariant dimension as a form in ``k`` for degrees ``3k + c``.

    Valid for every ``k`` with ``3k + c >= -1``.
    """
    if degree.slope != 3 or degree.offset.denominator != 1:
        raise ValueError(f"degree must have the shape 3k + c with integer c, got {degree}")
    c = int(degree.offset)
    k = degree.param
    # the residue pattern depends only on c mod 3 since 3k = 0
    probe = WeightConfig(tuple(weights), u0, u1, c % 3)
    out = LinForm.const(0, k)
    for w in probe.section_weights:
        r = _residue_target(w, u0, u1, c % 3)
        if r is None:
            if (w + c * u0) % 3 == 0:
                out = out + degree + 1
        else:
            # #{a in [0, 3k+c] : a = r} = k + floor((c - r)/3) + 1
            out = out + LinForm(1, (c - r) // 3 + 1, k)
    return out


def eigenspace_dimensions(cfg: WeightConfig) -> tuple[int, int, int]:
    """Dimensions of the character spaces ``(d0, d1, d2)``.

    ``dj`` counts monomials on which the generator acts linearly by
    ``omega**j``; the linear action on sections is the inverse of pullback,
    so a monomial of pullback weight ``s`` lies in ``d_{-s}``.
    """
    dims = [0, 0, 0]
    for i in range(len(cfg.section_weights)):
        for a in range(cfg.degree + 1):
            dims[(-cfg.pullback_weight(i, a)) % 3] += 1
    return tuple(dims)


def coverage_check(cfg: WeightConfig) -> bool:
    """True iff every section occurs in some invariant monomial."""
    seen = {i for i, _ in invariant_monomial_basis(cfg)}
    return len(seen) == len(cfg.section_weights)


def format_monomial(m: Monomial, degree: int, section: str = "f") -> str:
    i, a = m
    return f"x0^{a} x1^{degree - a} {section}_{i}"


def parse_residues(text: str) -> tuple[int, ...]:
    """Parse ``"0,0,2,1"`` into residues; raises ValueError on malformed input."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed residue list {text!r}")
    vals = tuple(int(p) for p in parts)
    if any(v not in (0, 1, 2) for v in vals):
        raise ValueError(f"residues must lie in {{0, 1, 2}}: {text!r}")
    return vals
