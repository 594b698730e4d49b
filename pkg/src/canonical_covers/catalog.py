"""Static data: the three generating pairs and the three Z/3 example recipes.

Pairs are tabulated in the series parameter ``n`` (``n >= 3``); examples in
``k`` with the substitution ``n = 3k`` (``k >= 1``).  Everything under
``expected`` / ``bases`` is displayed data used only as a check target; the
pipeline never reads it to compute anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Mapping

from .numeric import LinForm
from .quotients import CharacterPair, FixedPointProfile
from .surfaces import SurfaceInvariants, make_surface

__all__ = [
    "GeneratingPair",
    "BasisFamily",
    "SectionPattern",
    "ExampleRecipe",
    "Catalog",
    "OutOfRangeError",
    "DEFAULT_CATALOG",
    "PAIRS",
    "EXAMPLES",
    "V_EXAMPLE2",
    "pair_invariants",
]

n = LinForm.var("n")
k = LinForm.var("k")


class OutOfRangeError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratingPair:
    id: str
    genus: int
    iota_fixed_points: int
    X: SurfaceInvariants
    S: SurfaceInvariants
    min_n: int = 3


@dataclass(frozen=True)
class BasisFamily:
    """Monomials ``x0^(a0 + 3j) x1^(d - a0 - 3j) f_index`` for ``0 <= j < count``."""

    index: int
    a0: int
    count: LinForm

    def members(self, k_value: int) -> list[tuple[int, int]]:
        c = int(self.count(k_value))
        return [(self.index, self.a0 + 3 * j) for j in range(max(c, 0))]


@dataclass(frozen=True)
class SectionPattern:
    """Weights of a family of invariant systems of degree ``degree(k)``."""

    name: str
    weights: tuple[int, ...]
    u0: int
    u1: int
    degree: LinForm
    expected_dim: LinForm | None = None
    listed: tuple[BasisFamily, ...] = ()

    def listed_basis(self, k_value: int) -> list[tuple[int, int]]:
        return sorted(m for fam in self.listed for m in fam.members(k_value))


@dataclass(frozen=True)
class ExampleRecipe:
    id: int
    pair_id: str
    X_profile: FixedPointProfile
    Sigma_profile: FixedPointProfile
    X_fixed_count: int
    Sigma_fixed_count: int
    q_Y: int = 0
    q_T: int = 0
    q_S: int = 0
    sections_X: SectionPattern | None = None
    sections_adjoint: SectionPattern | None = None
    h1_correction: int = 1
    X_characters: tuple[tuple[str, CharacterPair], ...] = ()
    sigma_count_inferred: bool = False
    expected: Mapping[str, LinForm] = field(default_factory=dict)


@dataclass(frozen=True)
class Catalog:
    pairs: Mapping[str, GeneratingPair]
    examples: Mapping[int, ExampleRecipe]

    def pair(self, pair_id: str) -> GeneratingPair:
        try:
            return self.pairs[pair_id]
        except KeyError:
            raise KeyError(f"unknown generating pair {pair_id!r}") from None

    def example(self, example_id: int) -> ExampleRecipe:
        try:
            return self.examples[int(example_id)]
        except (KeyError, ValueError):
            raise KeyError(f"unknown example {example_id!r}") from None

    def with_pair(self, pair: GeneratingPair) -> "Catalog":
        return replace(self, pairs=MappingProxyType({**self.pairs, pair.id: pair}))

    def with_example(self, ex: ExampleRecipe) -> "Catalog":
        return replace(self, examples=MappingProxyType({**self.examples, ex.id: ex}))


PAIRS = MappingProxyType({
    "I": GeneratingPair(
        "I", genus=3, iota_fixed_points=16,
        X=make_surface(2, 4 * n - 3, 24 * n - 32, "pair I, X"),
        S=make_surface(0, 4 * n - 3, 12 * n - 16, "pair I, S"),
    ),
    "II": GeneratingPair(
        "II", genus=3, iota_fixed_points=20,
        X=make_surface(2, 5 * n - 3, 32 * n - 32, "pair II, X"),
        S=make_surface(0, 5 * n - 3, 16 * n - 16, "pair II, S"),
    ),
    "III": GeneratingPair(
        "III", genus=4, iota_fixed_points=28,
        X=make_surface(3, 7 * n - 4, 48 * n - 48, "pair III, X"),
        S=make_surface(0, 7 * n - 4, 24 * n - 24, "pair III, S"),
    ),
})

# Example 2 starts from a Z3 action on the double cover V of the abelian
# surface; 14 isolated fixed points, at least 10 with distinct characters.
V_EXAMPLE2 = {
    "V": make_surface(2, 2, 4, "V"),
    "total": 14,
    "beta_min": 10,
    "Z": make_surface(0, 2, 0, "Z"),
}

_EX1_SECTIONS = SectionPattern(
    "X", (0, 0, 2, 1), 1, 2, 3 * k,
    expected_dim=4 * k + 2,
    listed=(
        BasisFamily(0, 0, k + 1), BasisFamily(1, 0, k + 1),
        BasisFamily(2, 2, k), BasisFamily(3, 1, k),
    ),
)
_EX1_ADJOINT = SectionPattern(
    "H", (0, 0, 2, 1), 1, 2, 3 * k - 2,
    expected_dim=4 * k - 2,
    listed=(
        BasisFamily(0, 2, k - 1), BasisFamily(1, 2, k - 1),
        BasisFamily(2, 1, k), BasisFamily(3, 0, k),
    ),
)
_EX2_SECTIONS = SectionPattern(
    "X", (0, 0), 1, 2, 3 * k,
    expected_dim=2 * k + 2,
    listed=(BasisFamily(0, 0, k + 1), BasisFamily(1, 0, k + 1)),
)
_EX3_SECTIONS = SectionPattern(
    "X", (0, 0, 2), 2, 1, 3 * k,
    expected_dim=3 * k + 2,
    listed=(BasisFamily(0, 0, k + 1), BasisFamily(1, 0, k + 1), BasisFamily(2, 1, k)),
)

# (Q_i, P) with P = (1:0) or (0:1).  The P^1 direction has eigenvalue omega
# at (1:0) and omega^2 at (0:1).
_EX1_CHARACTERS = (
    ("Q1,(0:1)", CharacterPair(1, 2)), ("Q2,(0:1)", CharacterPair(1, 2)),
    ("Q3,(1:0)", CharacterPair(1, 2)), ("Q4,(1:0)", CharacterPair(1, 2)),
    ("Q1,(1:0)", CharacterPair(1, 1)), ("Q2,(1:0)", CharacterPair(1, 1)),
    ("Q3,(0:1)", CharacterPair(2, 2)), ("Q4,(0:1)", CharacterPair(2, 2)),
)
_EX3_CHARACTERS = tuple(
    (f"Q{i}+Q{j},(0:1)", CharacterPair(1, 1)) for i in range(1, 5) for j in range(i + 1, 5)
) + tuple(
    (f"Q{i}+Q{j},(1:0)", CharacterPair(1, 2)) for i in range(1, 5) for j in range(i + 1, 5)
)

EXAMPLES = MappingProxyType({
    1: ExampleRecipe(
        1, "I",
        X_profile=FixedPointProfile(4, 4), Sigma_profile=FixedPointProfile(2, 2),
        X_fixed_count=8, Sigma_fixed_count=4,
        sections_X=_EX1_SECTIONS, sections_adjoint=_EX1_ADJOINT, h1_correction=1,
        X_characters=_EX1_CHARACTERS,
        expected=MappingProxyType({
            "Y.K2": 24 * k - 12, "Y.q": LinForm.const(0, "k"), "Y.p_g": 4 * k - 1,
            "T.K2": 12 * k - 6, "T.q": LinForm.const(0, "k"), "T.p_g": 4 * k - 1,
            "Sigma.A1": 48 * k,
        }),
    ),
    2: ExampleRecipe(
        2, "II",
        X_profile=FixedPointProfile(4, 4), Sigma_profile=FixedPointProfile(2, 2),
        X_fixed_count=8, Sigma_fixed_count=4,
        sections_X=_EX2_SECTIONS, h1_correction=1,
        sigma_count_inferred=True,
        expected=MappingProxyType({
            "Y.chi": 5 * k, "Y.K2": 32 * k - 12, "Y.q": LinForm.const(0, "k"), "Y.p_g": 5 * k - 1,
            "T.K2": 16 * k - 6, "T.q": LinForm.const(0, "k"), "T.p_g": 5 * k - 1,
            # not displayed: 20 fixed points of iota times n = 3k
            "Sigma.A1": 60 * k,
        }),
    ),
    3: ExampleRecipe(
        3, "III",
        X_profile=FixedPointProfile(6, 6), Sigma_profile=FixedPointProfile(3, 3),
        X_fixed_count=12, Sigma_fixed_count=6,
        sections_X=_EX3_SECTIONS, h1_correction=1,
        X_characters=_EX3_CHARACTERS,
        expected=MappingProxyType({
            "Y.K2": 48 * k - 18, "Y.chi": 7 * k, "Y.q": LinForm.const(0, "k"), "Y.p_g": 7 * k - 1,
            "T.K2": 24 * k - 9, "T.q": LinForm.const(0, "k"), "T.p_g": 7 * k - 1,
            "Sigma.A1": 84 * k,
        }),
    ),
})

DEFAULT_CATALOG = Catalog(PAIRS, EXAMPLES)


def pair_invariants(pair_id: str, n: int | None = None, *,
                    catalog: Catalog = DEFAULT_CATALOG) -> tuple[SurfaceInvariants, SurfaceInvariants]:
    """``(X, S)`` for a generating pair; forms in ``n`` when ``n`` is None."""
    pair = catalog.pair(pair_id)
    if n is None:
        return pair.X, pair.S
    if isinstance(n, LinForm) or isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("n must be an integer (pairs are indexed by n, not k)")
    if n < pair.min_n:
        raise OutOfRangeError(f"pair {pair_id} needs n >= {pair.min_n}, got n={n}")
    return pair.X.at(n), pair.S.at(n)
