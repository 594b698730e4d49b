import pytest

from canonical_covers.kunneth import (
    LineBundleShadow,
    VanishingHypothesisError,
    equivariant_member_pg,
    kunneth_vector,
    member_pg,
    p1_cohomology,
    product_cohomology,
)
from canonical_covers.sections import WeightConfig
from canonical_covers.surfaces import CohTriple

M2 = LineBundleShadow.of(4, 0, 0, "M^2")
O_A = LineBundleShadow.of(1, 2, 1, "O_A")


@pytest.mark.parametrize("m, h", [(3, (4, 0)), (-2, (0, 1)), (-1, (0, 0)), (0, (1, 0)), (-5, (0, 4))])
def test_p1(m, h):
    assert p1_cohomology(m) == h


def test_product_examples():
    assert product_cohomology(M2, 1) == CohTriple(8, 0, 0)
    assert product_cohomology(O_A, -2) == CohTriple(0, 1, 2)
    assert product_cohomology(LineBundleShadow.of(0, 0, 0), 4) == CohTriple(0, 0, 0)
    assert kunneth_vector(O_A, -2) == (0, 1, 2, 1)


@pytest.mark.parametrize("a, b, m", [((1, 2, 1), (3, 0, 5), 2), ((0, 4, 1), (2, 2, 2), -3)])
def test_bilinear(a, b, m):
    s = tuple(x + y for x, y in zip(a, b))
    lhs = kunneth_vector(LineBundleShadow.of(*s), m)
    rhs = [x + y for x, y in zip(kunneth_vector(LineBundleShadow.of(*a), m),
                                 kunneth_vector(LineBundleShadow.of(*b), m))]
    assert list(lhs) == rhs


@pytest.mark.parametrize("n, pg", [(3, 9), (4, 13), (2, 5)])
def test_member_pg_pair_I(n, pg):
    assert member_pg(M2, O_A, n) == pg


def test_member_pg_range():
    for n in range(3, 51):
        assert member_pg(M2, O_A, n) == 4 * n - 3


def test_vanishing_hypothesis_checked():
    with pytest.raises(VanishingHypothesisError):
        member_pg(LineBundleShadow.of(4, 1, 0), O_A, 3)


@pytest.mark.parametrize("kk, pg", [(1, 3), (3, 11)])
def test_equivariant_example1(kk, pg):
    cfg = WeightConfig((0, 0, 2, 1), 1, 2, 3 * kk - 2)
    assert equivariant_member_pg(cfg, 1) == pg


def test_equivariant_empty():
    assert equivariant_member_pg(WeightConfig((1,), 1, 2, 0), 0) == 0


def test_trivial_group_matches_member_pg():
    for n in range(3, 20):
        cfg = WeightConfig((0, 0, 0, 0), 0, 0, n - 2)
        assert equivariant_member_pg(cfg, 1) == member_pg(M2, O_A, n)
