"""Cohomology dimensions on ``A x P^1`` and geometric genera of divisors there.

For a smooth member ``X`` of ``|L (x) O(n)|`` on a threefold ``P = A x P^1``
the residue sequence ``0 -> K_P -> K_P(X) -> K_X -> 0`` gives

    p_g(X) = h0(K_P(X)) - h0(K_P) + h1(K_P)

as soon as ``h1(K_P(X)) = 0``.  Only dimension vectors enter here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sections import WeightConfig, invariant_dimension
from .surfaces import CohTriple

__all__ = [
    "LineBundleShadow",
    "VanishingHypothesisError",
    "p1_cohomology",
    "kunneth_vector",
    "product_cohomology",
    "member_pg",
    "equivariant_member_pg",
]


class VanishingHypothesisError(ValueError):
    """``h1`` of the adjoint bundle on the product does not vanish."""


@dataclass(frozen=True)
class LineBundleShadow:
    coh: CohTriple
    name: str = ""

    @classmethod
    def of(cls, h0: int, h1: int, h2: int, name: str = "") -> "LineBundleShadow":
        return cls(CohTriple(h0, h1, h2), name)


def p1_cohomology(m: int) -> tuple[int, int]:
    """``(h0, h1)`` of ``O(m)`` on the projective line."""
    if m >= 0:
        return m + 1, 0
    return 0, -m - 1


def kunneth_vector(A: LineBundleShadow, m: int) -> tuple[int, int, int, int]:
    """Full ``(h0, .., h3)`` of ``A (x) O(m)``."""
    a = tuple(A.coh)
    b = p1_cohomology(m)
    out = [0, 0, 0, 0]
    for i, hi in enumerate(a):
        for j, hj in enumerate(b):
            out[i + j] += hi * hj
    return tuple(out)


def product_cohomology(A: LineBundleShadow, m: int) -> CohTriple:
    """``(h0, h1, h2)`` of ``A (x) O(m)``; ``h3`` never enters the genus count."""
    h = kunneth_vector(A, m)
    return CohTriple(*h[:3])


def member_pg(L_shadow: LineBundleShadow, canonical_shadow: LineBundleShadow, n: int) -> int:
    """``p_g`` of a smooth member of ``|L (x) O(n)|`` on ``A x P^1``.

    ``L_shadow`` is the surface factor of the adjoint bundle ``K_P(X)``, which
    is ``(K_A + L) (x) O(n - 2)``; ``canonical_shadow`` is ``K_A``.
    """
    adj = product_cohomology(L_shadow, n - 2)
    if adj.h1 != 0:
        raise VanishingHypothesisError(
            f"h1 of the adjoint bundle is {adj.h1} at n={n}; residue count does not apply"
        )
    K = product_cohomology(canonical_shadow, -2)
    return adj.h0 - K.h0 + K.h1


def equivariant_member_pg(cfg: WeightConfig, invariant_h1_correction: int) -> int:
    """Invariant part of the residue count.

    ``invariant_h1_correction`` is the dimension of the invariant part of
    ``h1(K_P)`` (minus that of ``h0(K_P)``); it is catalog data.
    """
    return invariant_dimension(cfg) + invariant_h1_correction
